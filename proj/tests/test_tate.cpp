#include <doctest.h>

#include "gfe/tate.hpp"

using namespace gfe;

namespace {
EllipticModel curve(long a1, long a2, long a3, long a4, long a6, const char* name) {
  return EllipticModel{BigRat(a1), BigRat(a2), BigRat(a3), BigRat(a4), BigRat(a6), name};
}
}  // namespace

TEST_CASE("known conductors over Q") {
  // classical small-conductor curves with standard models
  CHECK(conductor_global(curve(0, -1, 1, 0, 0, "11a3")) == 11);
  CHECK(conductor_global(curve(0, 0, 1, -1, 0, "37a1")) == 37);
  CHECK(conductor_global(curve(0, 0, 0, -1, 0, "32a3")) == 32);
  CHECK(conductor_global(curve(0, 0, 1, 0, 0, "27a3")) == 27);
  CHECK(conductor_global(curve(1, -1, 0, -2, -1, "49a1")) == 49);
  CHECK(conductor_global(curve(1, 0, 1, 4, -6, "14a1")) == 14);
  CHECK(conductor_global(curve(1, 1, 1, -10, -10, "15a1")) == 15);
  CHECK(conductor_global(curve(1, -1, 1, -1, -14, "17a1")) == 17);
  CHECK(conductor_global(curve(0, 0, 0, 0, 1, "36a4")) == 36);
  CHECK(conductor_global(curve(0, 0, 1, 0, -7, "27a1")) == 27);
}

TEST_CASE("kodaira data at 2 for y^2 = x^3 - x") {
  LocalData d = tate_algorithm(curve(0, 0, 0, -1, 0, "32a3"), BigInt(2));
  CHECK(d.kodaira == "III");
  CHECK(d.f_p == 5);
  CHECK(d.v_disc == 6);
  CHECK(d.reduction == ReductionType::additive);
}

TEST_CASE("multiplicative split and nonsplit") {
  // 11a3 at 11: split multiplicative, f = 1
  LocalData d = tate_algorithm(curve(0, -1, 1, 0, 0, "11a3"), BigInt(11));
  CHECK(d.kodaira == "I1");
  CHECK(d.f_p == 1);
  // 37a1 at 37 is split I1
  LocalData e = tate_algorithm(curve(0, 0, 1, -1, 0, "37a1"), BigInt(37));
  CHECK(e.f_p == 1);
  CHECK(e.n == 1);
}

TEST_CASE("ppp family ghost conductors") {
  CHECK(conductor_global(frey_ppp(BigRat(-1))) == 32);
  CHECK(conductor_global(frey_ppp(BigRat(2))) == 32);
  CHECK(conductor_global(frey_ppp(make_rat(1, 2))) == 64);
}

TEST_CASE("even-place exponents of the e2 family") {
  CHECK(tate_algorithm(e2(make_rat(1, 9)), BigInt(2)).f_p == 6);
  CHECK(tate_algorithm(e2(make_rat(8, 9)), BigInt(2)).f_p == 5);
}

TEST_CASE("rational parameter family from the reducibility discussion") {
  // t = 27/16 gives conductor 176, t = -11/16 gives conductor 11
  CHECK(conductor_global(e_t_remark_family(make_rat(27, 16))) == 176);
  CHECK(conductor_global(e_t_remark_family(make_rat(-11, 16))) == 11);
}

TEST_CASE("local table of the r=3 elliptic pair at 3") {
  struct Row {
    BigRat t0;
    int ep, em;
  };
  std::vector<Row> rows = {
      {BigRat(81), 1, 2},        // v3(t0) > 3
      {BigRat(82), 2, 2},        // v3(t0 - 1) > 3
      {BigRat(5), 2, 2},         // t0 = 5 (mod 9)
      {BigRat(2), 3, 3},         // t0 = 2, 8 (mod 9)
      {BigRat(17), 3, 3},        // 17 = 8 (mod 9)
      {make_rat(2, 27), 2, 2},   // t0' = 2 (mod 9), v3 = -3
      {make_rat(4, 27), 3, 3},   // t0' = 4 (mod 9)
  };
  for (auto& r : rows) {
    CHECK(tate_algorithm(e3_plus(r.t0), BigInt(3)).f_p == r.ep);
    CHECK(tate_algorithm(e3_minus(r.t0), BigInt(3)).f_p == r.em);
  }
  // the supercuspidal row with e = 4 has Kodaira type III
  CHECK(tate_algorithm(e3_plus(BigRat(5)), BigInt(3)).kodaira == "III");
}

TEST_CASE("deep additive types at 3") {
  // y^2 + y = x^3 - 7 has the star type with five extra components at 3
  LocalData d = tate_algorithm(curve(0, 0, 1, 0, -7, "27a1"), BigInt(3));
  CHECK(d.kodaira == "IV*");
  CHECK(d.f_p == 3);
}

TEST_CASE("tate handles non-minimal input models") {
  // scale 11a3 by u = 2: (a1,a2,a3,a4,a6) -> (2a1, 4a2, 8a3, 16a4, 64a6)
  EllipticModel big = curve(0, -4, 8, 0, 0, "11a3-scaled");
  CHECK(conductor_global(big) == 11);
  LocalData d = tate_algorithm(big, BigInt(2));
  CHECK(d.f_p == 0);
}
