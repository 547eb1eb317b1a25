#include <doctest.h>

#include <numeric>

#include "gfe/fq.hpp"

using namespace gfe;

TEST_CASE("field sizes from the cyclotomic construction") {
  CHECK(Fq::make_cyclotomic(11, 15)->q() == 121);
  CHECK(Fq::make_cyclotomic(31, 15)->q() == 31);
  CHECK(Fq::make_cyclotomic(7, 15)->q() == 2401);
  CHECK_THROWS_AS(Fq::make_cyclotomic(5, 15), domain_error);
  CHECK_THROWS_AS(Fq::make_cyclotomic(3, 15), domain_error);
}

TEST_CASE("embedded root of unity and logs") {
  auto F = Fq::make_cyclotomic(11, 15);
  std::uint32_t z = F->zeta();
  // zeta^15 = 1 and zeta^m != 1 for 0 < m < 15
  CHECK(F->pow(z, 15) == 1);
  for (unsigned m = 1; m < 15; ++m) CHECK(F->pow(z, m) != 1);
  // log/exp consistency on every nonzero element
  for (std::uint32_t x = 1; x < F->q(); ++x) CHECK(F->pow(F->generator(), F->dlog(x)) == x);
}

TEST_CASE("field arithmetic") {
  auto F = Fq::make(13, 2);
  CHECK(F->q() == 169);
  for (std::uint32_t a = 1; a < 50; ++a) {
    CHECK(F->mul(a, F->inv(a)) == 1);
    CHECK(F->add(a, F->neg(a)) == 0);
  }
  // Frobenius additivity of trace
  for (std::uint32_t a = 0; a < 40; ++a)
    for (std::uint32_t b = 0; b < 40; ++b)
      CHECK(F->trace_to_prime_field(F->add(a, b)) ==
            (F->trace_to_prime_field(a) + F->trace_to_prime_field(b)) % 13);
}

TEST_CASE("chi_lambda is a character of order N") {
  auto F = Fq::make_cyclotomic(11, 15);
  CHECK(F->chi_log(1) == 0);
  long kg = F->chi_log(F->generator());
  // the generator's character value generates Z/15
  CHECK(std::gcd(kg, 15L) == 1);
  // multiplicativity
  std::uint32_t g = F->generator();
  CHECK(F->chi_log(F->mul(g, g)) == (2 * kg) % 15);
  CHECK(F->chi_log(0) == -1);
}

TEST_CASE("factor choice selects a different prime above ell") {
  auto F0 = Fq::make_cyclotomic(11, 15, 0);
  auto F1 = Fq::make_cyclotomic(11, 15, 1);
  CHECK(F0->modulus() != F1->modulus());
  CHECK(F0->q() == F1->q());
}
