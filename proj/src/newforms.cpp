#include "gfe/newforms.hpp"

#include <openssl/sha.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#define CPPHTTPLIB_NO_EXCEPTIONS
#include <httplib.h>

namespace gfe {

namespace {

using nlohmann::json;

std::string sha256_hex(const std::string& s) {
  unsigned char digest[SHA256_DIGEST_LENGTH];
  SHA256(reinterpret_cast<const unsigned char*>(s.data()), s.size(), digest);
  std::ostringstream os;
  os << std::hex;
  for (unsigned char b : digest) {
    os.width(2);
    os.fill('0');
    os << static_cast<int>(b);
  }
  return os.str();
}

std::string fetch_remote(const std::string& url, const RunConfig& cfg) {
  std::string cache_dir = cfg.cache_dir.empty() ? "." : cfg.cache_dir;
  if (const char* env = std::getenv("GFE_CACHE_DIR"); env && cfg.cache_dir.empty())
    cache_dir = env;
  std::filesystem::create_directories(cache_dir);
  std::filesystem::path cached =
      std::filesystem::path(cache_dir) / (sha256_hex(url) + ".json");
  if (std::filesystem::exists(cached)) {
    std::ifstream in(cached);
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
  }
  auto scheme_end = url.find("://");
  if (scheme_end == std::string::npos || url.substr(0, scheme_end) != "http")
    throw data_error("load_newforms: only http:// endpoints are supported");
  auto host_start = scheme_end + 3;
  auto path_start = url.find('/', host_start);
  std::string host = url.substr(host_start, path_start - host_start);
  std::string path = path_start == std::string::npos ? "/" : url.substr(path_start);
  httplib::Client client(host);
  auto res = client.Get(path);
  if (!res || res->status != 200)
    throw data_error("load_newforms: fetch of " + url + " failed");
  std::ofstream out(cached);
  out << res->body;
  return res->body;
}

bool parse_record(const json& jf, int level_i, int level_j, NewformRecord& rec,
                  std::string& diag) {
  try {
    rec.label = jf.at("label").get<std::string>();
    rec.level_i = level_i;
    rec.level_j = level_j;
    rec.field_degree = jf.at("field_degree").get<int>();
    if (jf.contains("cm") && !jf.at("cm").is_null()) rec.cm = jf.at("cm").get<std::string>();
    for (const auto& je : jf.at("eigenvalues")) {
      SlotKey key;
      key.ell = je.at("ell").get<std::uint32_t>();
      std::string kind = je.at("kind").get<std::string>();
      if (kind == "split") {
        if (je.contains("root5") && !je.at("root5").is_null())
          key.root5 = je.at("root5").get<std::uint32_t>();
        else
          key.root5 = make_slot(key.ell).root5;
      }
      Eigenvalue e;
      e.exact = je.at("exact").get<bool>();
      if (je.contains("non_k")) e.non_k = je.at("non_k").get<bool>();
      if (e.exact) {
        e.u = BigInt(je.at("u").get<std::string>());
        e.v = BigInt(je.at("v").get<std::string>());
        e.D = je.contains("field_disc") ? je.at("field_disc").get<unsigned>() : 5;
        if (e.D == 5 && ((e.u - e.v) % 2) != 0) {
          diag = rec.label + ": eigenvalue at " + std::to_string(key.ell) +
                 " violates the parity invariant";
          return false;
        }
        // Weil bound at the slot norm
        PrimeSlotK slot = make_slot(key.ell);
        if (e.D == 5) {
          if (!weil_ok(KElt(e.u, e.v), slot.norm)) {
            diag = rec.label + ": eigenvalue at " + std::to_string(key.ell) +
                   " violates the Weil bound";
            return false;
          }
        } else {
          // embeddings (u +- v sqrt(D))/2
          double emb = (e.u.get_d() + e.v.get_d() * std::sqrt(double(e.D))) / 2;
          double emb2 = (e.u.get_d() - e.v.get_d() * std::sqrt(double(e.D))) / 2;
          double bound = 2 * std::sqrt(slot.norm.get_d()) + 1e-9;
          if (std::abs(emb) > bound || std::abs(emb2) > bound) {
            diag = rec.label + ": eigenvalue at " + std::to_string(key.ell) +
                   " violates the Weil bound";
            return false;
          }
        }
      } else if (!e.non_k) {
        diag = rec.label + ": eigenvalue without exact value must carry non_k";
        return false;
      }
      rec.eigenvalues[key] = e;
    }
    return true;
  } catch (const json::exception& ex) {
    diag = std::string("malformed record: ") + ex.what();
    return false;
  }
}

}  // namespace

LoadResult load_newforms(const std::string& source, const RunConfig& cfg) {
  std::string body;
  if (source.rfind("http://", 0) == 0 || source.rfind("https://", 0) == 0) {
    body = fetch_remote(source, cfg);
  } else {
    std::ifstream in(source);
    if (!in) throw data_error("load_newforms: cannot open " + source);
    std::stringstream buf;
    buf << in.rdbuf();
    body = buf.str();
  }
  LoadResult out;
  json j;
  try {
    j = json::parse(body);
  } catch (const json::exception& ex) {
    throw data_error(std::string("load_newforms: invalid JSON: ") + ex.what());
  }
  if (j.is_object() && j.contains("forms")) {
    int li = 0, lj = 0;
    if (j.contains("level") && j.at("level").is_array()) {
      li = j.at("level")[0].get<int>();
      lj = j.at("level")[1].get<int>();
    }
    for (const auto& jf : j.at("forms")) {
      NewformRecord rec;
      std::string diag;
      if (parse_record(jf, li, lj, rec, diag)) {
        out.records.push_back(std::move(rec));
      } else {
        out.diagnostics.push_back(diag);
      }
    }
  }
  return out;
}

std::string report_json(const EliminationReport& rep) {
  json j;
  j["level"] = {rep.level_i, rep.level_j};
  j["non_discardable"] = rep.non_discardable;
  std::vector<std::string> unionp;
  for (auto& p : rep.union_surviving) unionp.push_back(p.get_str());
  j["union_surviving"] = unionp;
  json forms = json::array();
  for (auto& f : rep.forms) {
    json jf;
    jf["label"] = f.label;
    if (!f.cm.empty()) jf["cm"] = f.cm;
    jf["survives_all"] = f.survives_all;
    jf["non_k_shortcut"] = f.non_k_shortcut;
    std::vector<std::string> ps;
    for (auto& p : f.surviving) ps.push_back(p.get_str());
    jf["surviving"] = f.survives_all ? json("ALL") : json(ps);
    json ws = json::array();
    for (auto& w : f.witnesses) {
      ws.push_back({{"slot", w.slot}, {"kind", w.kind}, {"value", w.value},
                    {"norm", w.norm.get_str()}});
    }
    jf["witnesses"] = ws;
    forms.push_back(jf);
  }
  j["forms"] = forms;
  return j.dump(2);
}

std::string EliminationReport::to_json() const { return report_json(*this); }

}  // namespace gfe
