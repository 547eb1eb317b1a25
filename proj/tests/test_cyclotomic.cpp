#include <doctest.h>

#include <cmath>

#include "gfe/cyclotomic.hpp"

using namespace gfe;

TEST_CASE("Phi_15") {
  const ZPoly& phi = cyclotomic_polynomial(15);
  CHECK(phi.degree() == 8);
  // x^8 - x^7 + x^5 - x^4 + x^3 - x + 1
  CHECK(phi.coeff(8) == 1);
  CHECK(phi.coeff(7) == -1);
  CHECK(phi.coeff(6) == 0);
  CHECK(phi.coeff(5) == 1);
  CHECK(phi.coeff(4) == -1);
  CHECK(phi.coeff(0) == 1);
}

TEST_CASE("minimal polynomials") {
  CHECK(CycInt::zeta_power(15, 1).min_poly_over_Q() == cyclotomic_polynomial(15));
  CHECK(CycInt::from_int(15, BigInt(1)).min_poly_over_Q().to_string() == "x - 1");
  // zeta^3 + zeta^-3 = 2cos(2pi/5): x^2 + x - 1
  CycInt v = CycInt::zeta_power(15, 3) + CycInt::zeta_power(15, -3);
  CHECK(v.min_poly_over_Q().to_string() == "x^2 + x - 1");
}

TEST_CASE("complex embeddings are roots of the minimal polynomial") {
  CycInt v = CycInt::zeta_power(15, 2) + CycInt::zeta_power(15, 11) +
             CycInt::from_int(15, BigInt(3));
  ZPoly mp = v.min_poly_over_Q();
  for (unsigned k = 1; k < 15; ++k) {
    if (std::gcd(k, 15u) != 1) continue;
    std::complex<double> z = v.embed(k);
    std::complex<double> acc(0, 0);
    for (long i = mp.degree(); i >= 0; --i) acc = acc * z + mp.coeff(i).get_d();
    CHECK(std::abs(acc) < 1e-9 * std::pow(std::abs(z) + 1, mp.degree()));
  }
}

TEST_CASE("K pair extraction") {
  // zeta + zeta^4 + zeta^11 + zeta^14 lies in Q(sqrt5) (fixed by k = +-1 mod 5)
  CycInt v = CycInt::zeta_power(15, 1) + CycInt::zeta_power(15, 4) + CycInt::zeta_power(15, 11) +
             CycInt::zeta_power(15, 14);
  auto pair = v.as_K_pair();
  REQUIRE(pair);
  CHECK(pair->first.conj() == pair->second);
}
