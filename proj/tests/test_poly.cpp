#include <doctest.h>

#include "gfe/poly.hpp"

using namespace gfe;

namespace {
QPoly qp(std::initializer_list<long> cs) {
  std::vector<BigRat> v;
  for (long c : cs) v.emplace_back(c);
  return QPoly(std::move(v));
}
}  // namespace

TEST_CASE("division and gcd over Q") {
  QPoly a = qp({-1, 0, 0, 0, 1});  // x^4 - 1
  QPoly b = qp({-1, 1});           // x - 1
  auto [q, r] = divmod(a, b);
  CHECK(r.is_zero());
  CHECK(q == qp({1, 1, 1, 1}));
  CHECK(poly_gcd(a, b) == qp({-1, 1}));
}

TEST_CASE("squarefree part") {
  QPoly sq = qp({1, 2, 1});  // (x+1)^2
  CHECK(squarefree_part(sq) == qp({1, 1}));
}

TEST_CASE("resultants") {
  // Res(X-1, X-1) = 0
  CHECK(resultant(qp({-1, 1}), qp({-1, 1})) == 0);
  // Res(x^4 - 1, x^2 + x + 2): product of r^4 - 1 over roots of the quadratic
  BigRat r = resultant(qp({-1, 0, 0, 0, 1}), qp({2, 1, 1}));
  // power sums with e1 = -1, e2 = 2: s1=-1, s2=-3, s3=... res = q^4 - s4 + 1
  KElt rr = resultant_cyclo_quadratic(4, KElt::from_int(-1), BigInt(2));
  CHECK(rr.is_rational());
  CHECK(r == BigRat(rr.rational_value()));
  // sign symmetry: a -> -a for even exponent
  KElt rs = resultant_cyclo_quadratic(4, KElt::from_int(1), BigInt(2));
  CHECK(rr == rs);
}

TEST_CASE("resultant vanishes iff common root (small sweep)") {
  for (long a = -3; a <= 3; ++a)
    for (long b = -3; b <= 3; ++b) {
      QPoly f = qp({a, 1});         // x + a
      QPoly g = qp({b, -2, 1});     // x^2 - 2x + b
      BigRat res = resultant(f, g);
      bool common = (BigRat(a * a) + 2 * a + b == 0);
      CHECK((res == 0) == common);
    }
}

TEST_CASE("resultants over K") {
  // agree with the rational resultant on rational inputs
  std::vector<KElt> f{KElt(-1), KElt(0), KElt(0), KElt(0), KElt(1)};
  std::vector<KElt> g{KElt(2), KElt(1), KElt(1)};
  KElt rk = resultant(KPoly(f), KPoly(g));
  BigRat rq = resultant(qp({-1, 0, 0, 0, 1}), qp({2, 1, 1}));
  CHECK(rk.is_rational());
  CHECK(BigRat(rk.rational_value()) == rq);
  // agree with the power-sum form for quadratics with irrational traces
  KElt a(BigInt(4), BigInt(4));  // 2 + 2 sqrt5
  std::vector<KElt> quad{KElt(11), -a, KElt(1)};
  KElt r1 = resultant(KPoly(f), KPoly(quad));
  KElt r2 = resultant_cyclo_quadratic(4, a, BigInt(11));
  CHECK(r1 == r2);
}

TEST_CASE("content valuation") {
  QPoly p = qp({6, 12, 18});
  CHECK(content_valuation(p, BigInt(3)) == 1);
  CHECK(content_valuation(p, BigInt(2)) == 1);
  QPoly h(std::vector<BigRat>{make_rat(1, 9), BigRat(3)});
  CHECK(content_valuation(h, BigInt(3)) == -2);
  CHECK(content_valuation(QPoly(), BigInt(3)) == kValInfinity);
}

TEST_CASE("printing") {
  ZPoly p(std::vector<BigInt>{BigInt(-316), BigInt(-4), BigInt(1)});
  CHECK(p.to_string() == "x^2 - 4*x - 316");
  ZPoly q(std::vector<BigInt>{BigInt(5), BigInt(1)});
  CHECK(q.to_string() == "x + 5");
}
