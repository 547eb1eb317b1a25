#include <doctest.h>

#include <fstream>

#include "gfe/newforms.hpp"

using namespace gfe;

namespace {
std::string fixture_path() {
  for (const char* p : {"fixtures/level22_norm11.json", "../fixtures/level22_norm11.json",
                        "../../fixtures/level22_norm11.json"}) {
    std::ifstream f(p);
    if (f) return p;
  }
  throw std::runtime_error("fixture not found; run from the repository root or build dir");
}
}  // namespace

TEST_CASE("slots") {
  PrimeSlotK s11 = make_slot(11);
  CHECK(s11.kind == SlotKind::split);
  CHECK(s11.root5 == 4);
  CHECK(s11.norm == 11);
  CHECK(s11.f_F == 2);
  CHECK(s11.rel_deg_F() == 2);
  PrimeSlotK s7 = make_slot(7);
  CHECK(s7.kind == SlotKind::inert);
  CHECK(s7.norm == 49);
  CHECK(s7.f_F == 4);
  CHECK(s7.rel_deg_F() == 2);
  PrimeSlotK s31 = make_slot(31);
  CHECK(s31.f_F == 1);
  CHECK(s31.rel_deg_F() == 1);
  auto all = slots_up_to(BigInt(50));
  // 7 (norm 49), 11, 19, 29, 31, 41 (norms <= 50), not 2/3/5
  for (auto& s : all) {
    CHECK(s.norm <= 50);
    CHECK(s.ell != 2);
    CHECK(s.ell != 3);
    CHECK(s.ell != 5);
  }
}

TEST_CASE("case values at the norm-11 slot") {
  CaseValues cv = case_values(make_slot(11));
  CHECK(cv.case1.size() == 9);  // ell - 2 residues
  // residue 2 carries the rational value -5; residue 9 the pair of
  // x^2 + 3x + 1
  CHECK(pair_min_poly(cv.case1.at(2)).to_string() == "x + 5");
  CHECK(pair_min_poly(cv.case1.at(9)).to_string() == "x^2 + 3*x + 1");
  CHECK(pair_min_poly(cv.case1.at(10)).to_string() == "x^2 + x - 11");
  // case 2 contains the lifted pair of x^2 - 4x - 316 and the value -22
  bool has316 = false, has22 = false;
  for (auto& p : cv.case2_polys) {
    if (p.to_string() == "x^2 - 4*x - 316") has316 = true;
    if (p.to_string() == "x + 22") has22 = true;
  }
  CHECK(has316);
  CHECK(has22);
  CHECK(cv.case2.size() <= 8);
  CHECK(cv.case3 == std::vector<BigInt>{BigInt(12), BigInt(-12)});
}

TEST_CASE("fixture elimination at the single norm-11 slot") {
  auto load = load_newforms(fixture_path());
  CHECK(load.diagnostics.empty());
  REQUIRE(load.records.size() == 14);
  std::vector<CaseValues> slots = {case_values(make_slot(11))};
  EliminationReport rep = run_space(2, 2, load.records, slots);

  std::set<std::string> nd(rep.non_discardable.begin(), rep.non_discardable.end());
  // the three CM forms cannot be discarded
  CHECK(nd.count("3") == 1);
  CHECK(nd.count("9") == 1);
  CHECK(nd.count("12") == 1);
  // at this single slot the other two eigenvalue-0 forms match the same
  // degenerate value and survive too; other slots separate them
  CHECK(nd == std::set<std::string>{"1", "3", "6", "9", "12"});

  for (auto& f : rep.forms) {
    if (f.survives_all) continue;
    CHECK(f.surviving.count(BigInt(2)) == 1);
    CHECK(f.surviving.count(BigInt(3)) == 1);
    CHECK(f.surviving.count(BigInt(5)) == 1);
  }
}

TEST_CASE("conjugating every eigenvalue leaves the survivors unchanged") {
  auto load = load_newforms(fixture_path());
  std::vector<CaseValues> slots = {case_values(make_slot(11))};
  auto conj_records = load.records;
  for (auto& r : conj_records)
    for (auto& [k, e] : r.eigenvalues) e.v = -e.v;
  EliminationReport a = run_space(2, 2, load.records, slots);
  EliminationReport b = run_space(2, 2, conj_records, slots);
  for (std::size_t i = 0; i < a.forms.size(); ++i) {
    CHECK(a.forms[i].survives_all == b.forms[i].survives_all);
    CHECK(a.forms[i].surviving == b.forms[i].surviving);
  }
}

TEST_CASE("adding slots never enlarges a surviving set") {
  auto load = load_newforms(fixture_path());
  std::vector<CaseValues> one = {case_values(make_slot(11))};
  std::vector<CaseValues> two = {one[0], case_values(make_slot(19))};
  // the fixture has no eigenvalues at 19; craft a synthetic record
  NewformRecord r = load.records[1];  // eigenvalue -2 at 11
  Eigenvalue e;
  e.exact = true;
  e.u = 4;
  e.v = 0;
  r.eigenvalues[SlotKey{19, make_slot(19).root5}] = e;
  FormResult f1 = eliminate_form(r, one);
  FormResult f2 = eliminate_form(r, two);
  for (auto& p : f2.surviving) CHECK(f1.surviving.count(p) == 1);
}

TEST_CASE("weil-violating records are rejected at load time") {
  std::string tmp = "/tmp/gfe_badrecord.json";
  {
    std::ofstream out(tmp);
    out << R"json({"field":"Q(sqrt5)","level":[2,2],"forms":[
      {"label":"bad","field_degree":1,"cm":null,
       "eigenvalues":[{"ell":11,"kind":"split","root5":4,"u":"200","v":"0","exact":true}]}]})json";
  }
  auto load = load_newforms(tmp);
  CHECK(load.records.empty());
  CHECK(load.diagnostics.size() == 1);
}

TEST_CASE("empty source yields an empty list") {
  std::string tmp = "/tmp/gfe_empty.json";
  {
    std::ofstream out(tmp);
    out << R"json({"field":"Q(sqrt5)","level":[2,2],"forms":[]})json";
  }
  auto load = load_newforms(tmp);
  CHECK(load.records.empty());
  CHECK(load.diagnostics.empty());
}

TEST_CASE("irreducibility bounds") {
  IrreducibilityBound b2 = irreducibility_bound(2);
  CHECK(b2.product == 6084);
  CHECK(b2.largest_prime == 13);
  IrreducibilityBound b5 = irreducibility_bound(5);
  CHECK(b5.largest_prime == BigInt(335809));
  IrreducibilityBound b3 = irreducibility_bound(3);
  CHECK(b3.largest_prime == BigInt("41363281"));
}

TEST_CASE("oracle agreement between the two case-1 routes") {
  // route disagreement raises; a pass means every residue agreed at these
  // slots (budget covers the lambda field sizes)
  RunConfig cfg;
  CHECK_NOTHROW(case_values(make_slot(19), cfg));
  CHECK_NOTHROW(case_values(make_slot(31), cfg));
}
