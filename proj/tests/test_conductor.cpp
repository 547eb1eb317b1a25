#include <doctest.h>

#include <random>
#include <set>

#include "gfe/conductor.hpp"

using namespace gfe;

namespace {
// the five printed invariant polynomials of the genus-2 family, as functions of t
BigRat J2_of(const BigRat& t) { return -1200 * t * t; }
BigRat J4_of(const BigRat& t) { return BigRat(-480000) * t * t * t * t; }
BigRat J6_of(const BigRat& t) {
  BigRat t5 = t * t * t * t * t;
  return BigRat(43520000) * t5 * t + BigRat(276480000) * t5;
}
BigRat J8_of(const BigRat& t) {
  BigRat t7 = t * t * t * t * t * t * t;
  return BigRat("-70656000000") * t7 * t + BigRat("-82944000000") * t7;
}
BigRat J10_of(const BigRat& t) {
  BigRat t8 = t * t * t * t * t * t * t * t;
  return BigRat("2388787200000") * (t * t * t8 - 2 * t * t8 + t8);
}
}  // namespace

TEST_CASE("igusa invariants of the genus-2 family") {
  // polynomial identity via evaluation at 7 distinct rationals
  std::vector<BigRat> pts = {BigRat(2),        BigRat(3),        BigRat(-1), make_rat(1, 2),
                             make_rat(-3, 7),  make_rat(22, 5),  BigRat(9)};
  for (auto& t : pts) {
    IgusaVec J = igusa_J(c53(t).f);
    CHECK(J.J2 == J2_of(t));
    CHECK(J.J4 == J4_of(t));
    CHECK(J.J6 == J6_of(t));
    CHECK(J.J8 == J8_of(t));
    CHECK(J.J10 == J10_of(t));
    // classical syzygy
    CHECK(4 * J.J8 == J.J2 * J.J6 - J.J4 * J.J4);
  }
  IgusaVec J2v = igusa_J(c53(BigRat(2)).f);
  CHECK(J2v.J2 == -4800);
  CHECK(J2v.J4 == -7680000);
  CHECK(J2v.J10 == BigRat("2388787200000") * 256);
}

TEST_CASE("igusa weighted equivalence of the two genus-2 models") {
  // the (t-1)/t substitution matches the other family up to a weighted scalar
  for (BigRat t : {make_rat(5, 3), BigRat(7), make_rat(-2, 9), BigRat(4)}) {
    BigRat s = (t - 1) / t;
    IgusaVec A = igusa_J(c53(s).f);
    IgusaVec B = igusa_J(cv25b(t).f);
    REQUIRE(A.J2 != 0);
    REQUIRE(B.J2 != 0);
    BigRat lam2 = B.J2 / A.J2;  // lambda^2
    CHECK(B.J4 == A.J4 * lam2 * lam2);
    CHECK(B.J6 == A.J6 * lam2 * lam2 * lam2);
    CHECK(B.J8 == A.J8 * lam2 * lam2 * lam2 * lam2);
    CHECK(B.J10 == A.J10 * lam2 * lam2 * lam2 * lam2 * lam2);
  }
}

TEST_CASE("liu classification of the family") {
  // v5(t-1) > 3 -> potentially multiplicative at 5
  CHECK(reduction_53(BigRat(626)).at5.cls == ReductionClass::potentially_multiplicative);
  // v3(t-1) > 3 -> potentially multiplicative at 3
  CHECK(reduction_53(BigRat(82)).at3.cls == ReductionClass::potentially_multiplicative);
  // v5(t-1) = 0 -> potentially good at 5 via condition (I)
  CHECK(reduction_53(BigRat(2)).at5.cls == ReductionClass::potentially_good_smooth);
  // v3(t-1) = 0, v3(17t+108) <= 3 -> potentially good at 3 via condition (V)
  auto r2 = reduction_53(BigRat(2));
  CHECK(r2.at3.cls == ReductionClass::potentially_good_degenerate);
  CHECK(r2.guard_17t_holds);
  // t0 = 9/8 (a ghost specialization): both places classified
  auto r98 = reduction_53(make_rat(9, 8));
  CHECK(r98.at3.cls != ReductionClass::undetermined);
  CHECK(r98.at5.cls != ReductionClass::undetermined);
}

TEST_CASE("d valuation") {
  // trivial-point instance: F(x) = x^q -+ 4, irreducible over Q_q iff
  // v_q(4^(q-1) - 1) = 1
  for (unsigned q : {5u, 7u, 11u, 13u}) {
    BigInt pw = pow_int(BigInt(4), q - 1) - 1;
    long v = valuation(pw, BigInt(q));
    // the (a, c) = (0, -1)-style instance is not reachable through the
    // public signature (a = 0 is excluded); the rule is checked through
    // trivial_cond below
    (void)v;
  }
  // the q-side polynomial for (a, c) = (1, 1) at (q, r) = (5, 3)
  CHECK(d_valuation_qside(BigInt(1), BigInt(1), 5, 3) == 1);
  // congruence stability mod r^2 on the r-side: shifting both entries by
  // multiples of 9 never changes the verdict
  int compared = 0;
  for (long k = 0; k < 200 && compared < 40; ++k) {
    BigInt a = 2 + k, c = 5 + 3 * k;
    BigInt a2 = a + 9, c2 = c + 81;
    if (gcd(a, c) != 1 || gcd(a2, c2) != 1) continue;
    BigInt bpow = -(pow_int(a, 5) + pow_int(c, 3));
    BigInt bpow2 = -(pow_int(a2, 5) + pow_int(c2, 3));
    if (a % 3 == 0 || bpow % 3 == 0 || a2 % 3 == 0 || bpow2 % 3 == 0) continue;
    CHECK(d_valuation(a, c, 5, 3) == d_valuation(a2, c2, 5, 3));
    ++compared;
  }
  CHECK(compared >= 20);
  CHECK_THROWS_AS(d_valuation(BigInt(3), BigInt(2), 5, 3), domain_error);
}

TEST_CASE("v_r(d) >= 1 over random coprime pairs") {
  std::mt19937_64 rng(12345);
  for (unsigned r : {3u, 5u, 7u, 11u, 13u}) {
    int tested = 0;
    while (tested < 100) {
      BigInt a = static_cast<long>(rng() % 2000) - 1000;
      BigInt c = static_cast<long>(rng() % 2000) - 1000;
      if (a == 0 || c == 0 || gcd(a, c) != 1) continue;
      unsigned q = (r == 3) ? 5 : (r == 5 ? 7 : 17);
      if (q <= r) q = 19;
      BigInt bpow = -(pow_int(a, q) + pow_int(c, r));
      if (bpow == 0 || a % r == 0 || bpow % r == 0) continue;
      long v = d_valuation(a, c, q, r);
      CHECK(v >= 1);
      ++tested;
    }
  }
}

TEST_CASE("predictor for the (5, p, 3) signature") {
  // 3 | a forces the tame value
  CHECK(eps_53(BigInt(3), BigInt(2)).eps3 == 2);
  // (1, 1): 4c^3 = 4 != 1 = a^5 mod 9 and the q-side polynomial is
  // irreducible, so both exponents are 3
  Eps53 e11 = eps_53(BigInt(1), BigInt(1));
  CHECK(e11.eps3 == 3);
  CHECK(e11.eps5 == 3);
  // c^3/a^5 = 6 (mod 25) classes are reducible -> eps5 = 2
  CHECK(eps_53(BigInt(1), BigInt(11)).eps5 == 2);
  CHECK_THROWS_AS(eps_53(BigInt(2), BigInt(2)), domain_error);
}

TEST_CASE("eps5 agrees with the d-valuation verdict mod 25, exhaustively") {
  // reducibility depends only on u = c^3/a^5 mod 25; sweep all unit pairs
  std::set<long> reducible_u;
  for (long a = 1; a < 25; ++a) {
    if (a % 5 == 0) continue;
    for (long c = 1; c < 25; ++c) {
      if (c % 5 == 0) continue;
      if (gcd(BigInt(a), BigInt(c)) != 1) continue;
      BigInt bp = pow_int(BigInt(a), 5) + pow_int(BigInt(c), 3);
      if (bp % 5 == 0) continue;
      Eps53 e = eps_53(BigInt(a), BigInt(c));
      long v = d_valuation_qside(BigInt(a), BigInt(c), 5, 3);
      CHECK(e.eps5 == (v >= 2 ? 2 : 3));
      if (v >= 2) {
        BigInt u = pow_int(BigInt(c), 3) * inv_mod(pow_int(BigInt(a), 5) % 25, BigInt(25)) % 25;
        reducible_u.insert(u.get_si());
      }
    }
  }
  // u = 24 would mean a^5 + c^3 = 0 (mod 25), i.e. 5 | b, which the sweep
  // excludes (that locus takes the 5 | bc branch instead)
  CHECK(reducible_u == std::set<long>{6, 12, 18});
}

TEST_CASE("eps3 matches the supercuspidal residue class") {
  // 3 not dividing abc: the exponent drops to 2 exactly when t0 = 5 (mod 9),
  // equivalently 4c^3 = a^5 (mod 9); cross-checked against the r-side
  // d-valuation
  for (long a = 1; a < 9; ++a)
    for (long c = 1; c < 9; ++c) {
      if (a % 3 == 0 || c % 3 == 0) continue;
      BigInt bp = pow_int(BigInt(a), 5) + pow_int(BigInt(c), 3);
      if (bp % 3 == 0) continue;
      if (gcd(BigInt(a), BigInt(c)) != 1) continue;
      Eps53 e = eps_53(BigInt(a), BigInt(c));
      long v = d_valuation(BigInt(a), BigInt(c), 5, 3);
      CHECK(e.eps3 == (v >= 2 ? 2 : 3));
    }
}

TEST_CASE("table rows") {
  PlaceExponent p = cond2_minus(BigInt(1), BigInt(2), 5, 3);
  CHECK(p.values == std::set<int>{6});  // v2(2) = 1 odd
  PlaceExponent p4 = cond2_minus(BigInt(1), BigInt(4), 5, 3);
  // v2(c) = 2 even, a = 1 (mod 4)
  CHECK(p4.values == std::set<int>{0, 1, 2});
  PlaceExponent p3 = cond2_minus(BigInt(3), BigInt(4), 5, 3);
  CHECK(p3.values == std::set<int>{4});

  Table31Row r5 = table31(BigRat(5));
  CHECK(r5.exp_plus == 2);
  CHECK(r5.exp_minus == 2);
  CHECK(r5.e == 4);
  CHECK(r5.type == "supercuspidal");
  CHECK_THROWS_AS(table31(BigRat(4)), domain_error);

  auto [rm, rp] = cond_r_table(5, 3, BigInt(1), BigInt(7));
  // (a, c) = (1, 7): 3 doesn't divide a*b; reducibility decides
  CHECK((rp.values == std::set<int>{2} || rp.values == std::set<int>{3}));
}

TEST_CASE("table rows match tate on the elliptic pair") {
  // the supercuspidal rows of the local table agree with the algorithm
  for (BigRat t0 : {BigRat(5), BigRat(2), BigRat(17), BigRat(81), BigRat(82)}) {
    Table31Row row = table31(t0);
    CHECK(tate_algorithm(e3_plus(t0), BigInt(3)).f_p == row.exp_plus);
    CHECK(tate_algorithm(e3_minus(t0), BigInt(3)).f_p == row.exp_minus);
  }
}

TEST_CASE("trivial and catalan conductors") {
  ConductorProfile t0 = trivial_cond(5, 3, 0);
  // v5(4^4 - 1) = v5(255) = 1 -> exponent 3 at the q side
  bool found = false;
  for (auto& e : t0.entries)
    if (e.place == "q") {
      CHECK(e.values == std::set<int>{3});
      found = true;
    }
  CHECK(found);

  ConductorProfile c18 = catalan_cond(5, make_rat(-1, 8));
  // conductor 3^3 * (sqrt5)^3
  for (auto& e : c18.entries) {
    if (e.place == "3") CHECK(e.values == std::set<int>{3});
    if (e.place == "q") CHECK(e.values == std::set<int>{3});
  }
  ConductorProfile c98 = catalan_cond(5, make_rat(9, 8));
  for (auto& e : c98.entries)
    if (e.place == "q") CHECK(e.values == std::set<int>{3});

  // published per-signature values: the q-side exponent is 3 except the
  // (13, 3) pair at -1/8, where the polynomial becomes reducible
  struct Row {
    unsigned q;
    long num, den;
    int eq;
  };
  for (auto& r : std::vector<Row>{{7, -1, 8, 3}, {7, 9, 8, 3}, {11, -1, 8, 3}, {11, 9, 8, 3},
                                  {13, -1, 8, 2}, {13, 9, 8, 3}, {5, 1, 9, 3}, {5, 8, 9, 3}}) {
    ConductorProfile p = catalan_cond(r.q, make_rat(r.num, r.den));
    for (auto& e : p.entries)
      if (e.place == "q") CHECK(e.values == std::set<int>{r.eq});
  }

  CHECK_THROWS_AS(catalan_cond(19, make_rat(9, 8)), domain_error);
  CHECK_THROWS_AS(catalan_cond(37, make_rat(9, 8)), domain_error);
  CHECK_NOTHROW(catalan_cond(19, make_rat(-1, 8)));
}
