// Command-line surface for the generalized-Fermat computation toolkit:
// Frobenius traces of the (5, p, 3) hypergeometric family, degenerate value
// sets, conductor prediction, ghost-solution search, irreducibility bounds,
// and newform elimination over Q(sqrt5).

#include <omp.h>

#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <json.hpp>

#include "gfe/newforms.hpp"

using namespace gfe;

namespace {

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const domain_error*>(&e)) return 2;
  if (dynamic_cast<const oracle_error*>(&e)) return 3;
  if (dynamic_cast<const data_error*>(&e)) return 4;
  return 1;
}

BigRat parse_rat(const std::string& s) {
  auto slash = s.find('/');
  if (slash == std::string::npos) return make_rat(BigInt(s), BigInt(1));
  return make_rat(BigInt(s.substr(0, slash)), BigInt(s.substr(slash + 1)));
}

void apply_config(RunConfig& cfg, const std::string& path) {
  if (path.empty()) return;
  std::ifstream in(path);
  if (!in) throw data_error("config file not found: " + path);
  nlohmann::json j;
  in >> j;
  if (j.contains("norm_cap")) cfg.norm_cap = BigInt(j["norm_cap"].get<long>());
  if (j.contains("field_budget")) cfg.hyp_field_budget = BigInt(j["field_budget"].get<long>());
  if (j.contains("cache_dir")) cfg.cache_dir = j["cache_dir"].get<std::string>();
  if (j.contains("threads")) cfg.threads = j["threads"].get<unsigned>();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized Fermat (5,p,3) computation toolkit"};
  app.require_subcommand(1);

  std::string config_path, format = "tsv";
  unsigned threads = 0;
  app.add_option("--config", config_path, "JSON config file");
  app.add_option("--format", format, "output format: tsv or json");
  app.add_option("--threads", threads, "parallelism degree (0 = default)");

  // trace
  auto* trace = app.add_subcommand("trace", "Frobenius trace of the family at a residue");
  std::uint32_t tr_ell = 11, tr_t0 = 2;
  std::string tr_route = "both";
  std::vector<unsigned> tr_params{5, 3};
  trace->add_option("--ell", tr_ell, "rational prime of the slot")->required();
  trace->add_option("--t0", tr_t0, "residue in F_ell")->required();
  trace->add_option("--route", tr_route, "count, sum or both");
  trace->add_option("--params", tr_params, "signature exponents q r")->expected(2);

  // degenerate
  auto* degen = app.add_subcommand("degenerate", "degenerate trace value sets");
  std::uint32_t dg_ell = 11;
  std::string dg_point = "0";
  degen->add_option("--ell", dg_ell)->required();
  degen->add_option("--point", dg_point, "0 or inf")->required();

  // conductor
  auto* cond = app.add_subcommand("conductor", "conductor exponent prediction");
  std::string c_a, c_c, c_t0;
  unsigned c_q = 5;
  cond->add_option("--a", c_a);
  cond->add_option("--c", c_c);
  cond->add_option("--t0", c_t0, "ghost/catalan specialization");
  cond->add_option("--q", c_q, "varying-prime exponent for catalan profiles");

  // ghost
  auto* gh = app.add_subcommand("ghost", "search for ghost solutions");
  unsigned g_q = 5, g_r = 3;
  long g_A = 10000, g_C = 10000;
  unsigned g_E = 30;
  bool g_two = false;
  std::string g_out;
  gh->add_option("--q", g_q)->required();
  gh->add_option("--r", g_r)->required();
  gh->add_option("--box-a", g_A, "bound on |a|");
  gh->add_option("--box-c", g_C, "bound on |c|");
  gh->add_option("--box-e", g_E, "bound on the exponents");
  gh->add_flag("--allow-two", g_two, "allow powers of 2 in the middle term");
  gh->add_option("--out", g_out, "write the TSV table to a file");

  // bound
  auto* bd = app.add_subcommand("bound", "irreducibility bound C(ell)");
  std::uint32_t b_ell = 2;
  bd->add_option("--ell", b_ell)->required();

  // eliminate
  auto* el = app.add_subcommand("eliminate", "newform elimination at a level");
  std::vector<int> e_level{2, 2};
  std::string e_data, e_out;
  std::vector<std::uint32_t> e_primes;
  long e_cap = 400;
  el->add_option("--level", e_level, "level exponents i j")->expected(2)->required();
  el->add_option("--data", e_data, "newform JSON file or http:// endpoint")->required();
  el->add_option("--primes", e_primes, "rational primes of the slots to use");
  el->add_option("--norm-cap", e_cap, "slot norm cap when --primes is omitted");
  el->add_option("--out", e_out, "basename for the report twin files");

  // tate
  auto* ta = app.add_subcommand("tate", "local data of an elliptic model");
  std::string ta_curve = "frey_ppp", ta_t = "-1", ta_p = "2";
  bool ta_global = false;
  ta->add_option("--curve", ta_curve, "e3plus, e3minus, e2, frey_ppp, e_t");
  ta->add_option("--t", ta_t, "family parameter (rational)");
  ta->add_option("--p", ta_p, "prime");
  ta->add_flag("--global", ta_global, "print the global conductor too");

  // igusa
  auto* ig = app.add_subcommand("igusa", "Igusa invariants of the genus-2 family");
  std::string ig_t = "3";
  ig->add_option("--t", ig_t, "family parameter (rational)")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    RunConfig cfg;
    apply_config(cfg, config_path);
    if (threads) cfg.threads = threads;
    if (cfg.threads) omp_set_num_threads(static_cast<int>(cfg.threads));

    if (*trace) {
      if (tr_t0 % tr_ell == 0 || tr_t0 % tr_ell == 1)
        throw domain_error("t0 must avoid 0 and 1; use `degenerate` for the boundary residues");
      if (tr_params.size() != 2) throw domain_error("--params takes the two exponents q r");
      // trace recognition lives in the half-integer lattice of Q(sqrt5),
      // which is the coefficient ring of the (5,3) family only
      if (tr_params[0] != 5 || tr_params[1] != 3)
        throw domain_error("trace supports the (5,3) signature (its coefficient field is Q(sqrt5))");
      PrimeSlotK slot = make_slot(tr_ell);
      KElt count_value;
      bool have_count = false;
      if (tr_route == "count" || tr_route == "both") {
        std::uint32_t tc =
            static_cast<std::uint32_t>(inv_mod(BigInt(tr_t0), BigInt(tr_ell)).get_ui());
        LPoly2 L = euler_factor(c53(BigRat(tc)), slot);
        count_value = split_over_K(L).first;
        have_count = true;
      }
      bool have_sum = false;
      TraceValue tv;
      if (tr_route == "sum" || tr_route == "both") {
        HGMParams params(make_rat(1, tr_params[0]), make_rat(-1, tr_params[0]),
                         make_rat(1, tr_params[1]), make_rat(-1, tr_params[1]));
        HypOptions opt;
        opt.field_budget = cfg.hyp_field_budget;
        tv = hyp_trace(params, tr_ell, 0, tr_t0, opt);
        have_sum = true;
      }
      if (have_count && have_sum) {
        KElt l1 = lift_trace(count_value, slot.norm, slot.rel_deg_F());
        KElt l2 = lift_trace(count_value.conj(), slot.norm, slot.rel_deg_F());
        if (!(tv.value == l1) && !(tv.value == l2) && !(tv.value == l1.conj()) &&
            !(tv.value == l2.conj()))
          throw oracle_error("routes disagree: count " + count_value.to_string() + ", sum " +
                             tv.value.to_string());
      }
      if (have_count) {
        std::cout << pair_min_poly(count_value).to_string() << "\n";
      } else {
        std::cout << pair_min_poly(tv.value).to_string() << " (residue-field level, norm "
                  << tv.lambda_norm.get_str() << ")\n";
      }
      return 0;
    }

    if (*degen) {
      DegenerateValues d = (dg_point == "0") ? degenerate0(dg_ell) : degenerate_inf(dg_ell);
      for (auto& p : d.min_polys) std::cout << p.to_string() << "\n";
      return 0;
    }

    if (*cond) {
      if (!c_t0.empty()) {
        BigRat t0 = parse_rat(c_t0);
        ConductorProfile prof = catalan_cond(c_q, t0);
        std::cout << prof.to_string() << "\n";
        return 0;
      }
      if (c_a.empty() || c_c.empty()) throw domain_error("conductor needs --a and --c, or --t0");
      Eps53 e = eps_53(BigInt(c_a), BigInt(c_c));
      std::cout << "3^" << e.eps3 << " * (sqrt5)^" << e.eps5 << "\n";
      return 0;
    }

    if (*gh) {
      SearchBox box;
      box.a_bound = g_A;
      box.c_bound = g_C;
      box.exp_bound = g_E;
      auto sols = ghost_search(g_q, g_r, box, g_two);
      std::string tsv = ghost_tsv(sols);
      if (!g_out.empty()) {
        std::ofstream out(g_out);
        out << tsv;
      }
      std::cout << tsv;
      return 0;
    }

    if (*bd) {
      IrreducibilityBound b = irreducibility_bound(b_ell);
      if (b_ell == 2)
        std::cout << b.product.get_str() << " -> C(2)=" << b.largest_prime.get_str() << "\n";
      else
        std::cout << "C(" << b_ell << ")=" << b.largest_prime.get_str() << "\n";
      return 0;
    }

    if (*el) {
      auto loaded = load_newforms(e_data, cfg);
      for (auto& d : loaded.diagnostics) std::cerr << "record skipped: " << d << "\n";
      std::vector<PrimeSlotK> slot_list;
      if (!e_primes.empty()) {
        for (auto p : e_primes) slot_list.push_back(make_slot(p));
      } else {
        slot_list = slots_up_to(BigInt(e_cap));
      }
      std::vector<CaseValues> values;
      values.reserve(slot_list.size());
      RunConfig run = cfg;
      run.norm_cap = e_cap;
      for (auto& s : slot_list) values.push_back(case_values(s, run));
      EliminationReport rep = run_space(e_level[0], e_level[1], loaded.records, values);
      std::cout << "non-discardable: [";
      for (std::size_t i = 0; i < rep.non_discardable.size(); ++i)
        std::cout << (i ? ", " : "") << rep.non_discardable[i];
      std::cout << "]\nsurviving primes of discardable forms: {";
      bool first = true;
      for (auto& p : rep.union_surviving) {
        std::cout << (first ? "" : ", ") << p.get_str();
        first = false;
      }
      std::cout << "}\n";
      if (!e_out.empty()) {
        std::ofstream tsv(e_out + ".tsv");
        tsv << rep.to_tsv();
        std::ofstream js(e_out + ".json");
        js << rep.to_json();
        std::cout << "report written to " << e_out << ".tsv / .json\n";
      }
      return 0;
    }

    if (*ta) {
      BigRat t = parse_rat(ta_t);
      EllipticModel m = ta_curve == "e3plus"    ? e3_plus(t)
                        : ta_curve == "e3minus" ? e3_minus(t)
                        : ta_curve == "e2"      ? e2(t)
                        : ta_curve == "e_t"     ? e_t_remark_family(t)
                                                : frey_ppp(t);
      LocalData d = tate_algorithm(m, BigInt(ta_p));
      std::cout << "kodaira " << d.kodaira << ", f_p = " << d.f_p << ", v(disc) = " << d.v_disc
                << "\n";
      if (ta_global) std::cout << "conductor = " << conductor_global(m).get_str() << "\n";
      return 0;
    }

    if (*ig) {
      BigRat t = parse_rat(ig_t);
      IgusaVec J = igusa_J(c53(t).f);
      std::cout << "J2 = " << rat_to_string(J.J2) << "\nJ4 = " << rat_to_string(J.J4)
                << "\nJ6 = " << rat_to_string(J.J6) << "\nJ8 = " << rat_to_string(J.J8)
                << "\nJ10 = " << rat_to_string(J.J10) << "\n";
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    const auto* se = dynamic_cast<const std::runtime_error*>(&e);
    return se ? exit_code_for(e) : 1;
  }
  return 0;
}
