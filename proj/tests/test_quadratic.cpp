#include <doctest.h>

#include "gfe/quadratic.hpp"

using namespace gfe;

TEST_CASE("norm, trace, conjugate") {
  KElt x(BigInt(4), BigInt(4));  // 2 + 2 sqrt5
  CHECK(x.norm() == -16);
  CHECK(x.trace() == 4);
  KElt phi = KElt::phi();
  CHECK(phi.conj() == KElt(BigInt(1), BigInt(-1)));
  CHECK(phi.norm() == -1);
  KElt two = KElt(BigInt(4), BigInt(0));
  CHECK(two.trace() == 4);
  CHECK(two.rational_value() == 2);
}

TEST_CASE("parity invariant is enforced") {
  CHECK_THROWS_AS(KElt(BigInt(1), BigInt(2)), domain_error);
  CHECK_NOTHROW(KElt(BigInt(3), BigInt(1)));
}

TEST_CASE("multiplicativity of the norm") {
  KElt a(BigInt(3), BigInt(1)), b(BigInt(-5), BigInt(7));
  CHECK((a * b).norm() == a.norm() * b.norm());
  CHECK((a * b).trace() == (a * b + (a * b).conj()).rational_value());
}

TEST_CASE("sqrt in K") {
  CHECK(sqrt_in_K(BigInt(80))->norm() == -80 / 1);  // 80 = 5*16 -> 4 sqrt5, norm -80
  CHECK(*sqrt_in_K(BigInt(49)) == KElt::from_int(7));
  CHECK(!sqrt_in_K(BigInt(7)));
}

TEST_CASE("printing") {
  CHECK(KElt(BigInt(4), BigInt(4)).to_string() == "2+2*sqrt5");
  CHECK(KElt(BigInt(1), BigInt(1)).to_string() == "(1+sqrt5)/2");
  CHECK(KElt(BigInt(-10), BigInt(0)).to_string() == "-5");
  CHECK(KElt(BigInt(9), BigInt(1)).to_string() == "(9+sqrt5)/2");
}
