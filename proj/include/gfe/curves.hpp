#pragma once

#include <cstdint>

#include "gfe/fq.hpp"
#include "gfe/hgm.hpp"
#include "gfe/poly.hpp"
#include "gfe/quadratic.hpp"
#include "gfe/slots.hpp"

namespace gfe {

// y^2 = f(x) with f of degree 5 or 6 over Q; genus 2 when the reduction is
// squarefree of degree >= 5.
struct SexticModel {
  QPoly f;
  std::string name;
};

// long Weierstrass model over Q
struct EllipticModel {
  BigRat a1, a2, a3, a4, a6;
  std::string name;

  BigRat b2() const { return a1 * a1 + 4 * a2; }
  BigRat b4() const { return 2 * a4 + a1 * a3; }
  BigRat b6() const { return a3 * a3 + 4 * a6; }
  BigRat b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  BigRat c4() const { return b2() * b2() - 24 * b4(); }
  BigRat c6() const { return -b2() * b2() * b2() + 36 * b2() * b4() - 216 * b6(); }
  BigRat discriminant() const;
};

// Genus-2 Euler factor data at a prime of norm q: the full local factor
// q^2 x^4 - q a1 x^3 + a2 x^2 - a1 x + 1 (equivalently the characteristic
// polynomial of Frobenius x^4 - a1 x^3 + a2 x^2 - q a1 x + q^2) is implied.
struct LPoly2 {
  BigInt q;
  BigInt a1, a2;
  ZPoly frobenius_char_poly() const;
};

// ---- model constructors ----

// f_r(x) = (-1)^((r-1)/2) x h(2 - x^2), h = min poly of zeta_r + zeta_r^{-1}
ZPoly build_f_r(unsigned r);

SexticModel c53(const BigRat& t);               // y^2 = 5x^6 - 12x^5 + 10 t x^3 + t^2
SexticModel cv25b(const BigRat& t);             // completed square of the even-place genus-2 family
SexticModel darmon_plus(unsigned r, const BigRat& t);   // y^2 = (x+2)(f_r(x) + 2 - 4t)
SexticModel darmon_minus(unsigned r, const BigRat& t);  // y^2 = f_r(x) + 2 - 4t
// integral model F(x) = c^r f_r(x/c) + 2 c^r + 4 a^q
ZPoly F_integral(unsigned q, unsigned r, const BigInt& a, const BigInt& c);

// Clear denominators of y^2 = g(x) by the substitution x -> x/m, y -> y/m^3
// with the least m; an isomorphism away from primes dividing m.
SexticModel integral_rescale(const SexticModel& m);

EllipticModel e3_plus(const BigRat& t);       // y^2 + 3xy + ty = x^3
EllipticModel e3_minus(const BigRat& t);      // y^2 = x^3 - 3x + 4t - 2
EllipticModel e2(const BigRat& t);            // y^2 + xy = x^3 + (t/64) x
EllipticModel frey_ppp(const BigRat& t);      // y^2 = x(x-1)(1-tx)
EllipticModel e_t_remark_family(const BigRat& t);  // y^2 + xy = x^3 - t/432

// ---- point counting ----

// #C(F_q) for the smooth projective model of y^2 = f(x); throws domain_error
// on singular or degenerate reduction. Serial reference and the parallel
// kernel compute identical values.
std::int64_t count_points_serial(const SexticModel& m, const Fq& field);
std::int64_t count_points(const SexticModel& m, const Fq& field);

std::int64_t count_points_elliptic(const EllipticModel& e, const Fq& field);

// Euler factor of a genus-2 model over F_q with q = ell^fdeg (counts over
// F_q and F_{q^2}).
LPoly2 euler_factor(const SexticModel& m, std::uint32_t ell, std::uint32_t fdeg);
LPoly2 euler_factor(const SexticModel& m, const PrimeSlotK& slot);

// Roots of z^2 - a1 z + (a2 - 2q): the conjugate pair of K-traces of a
// GL2-type surface. Throws oracle_error when the quadratic does not split
// in K ("not GL2(K)-compatible").
std::pair<KElt, KElt> split_over_K(const LPoly2& L);

// ---- congruence checks ----

struct CongruenceSlotReport {
  PrimeSlotK slot;
  bool checked = false;  // false when a model has bad reduction at the slot
  bool pass = false;
  std::string detail;
};

// mod 3: Tate-twist A's quartic (x -> N(l) x) and compare with B's quartic
// coefficientwise mod 3.
CongruenceSlotReport congruence_mod3(const SexticModel& A, const SexticModel& B,
                                     const PrimeSlotK& slot);
// mod sqrt5: compare A's twisted quartic with the square of B's elliptic
// quadratic mod 5.
CongruenceSlotReport congruence_mod_sqrt5(const SexticModel& A, const EllipticModel& B,
                                          const PrimeSlotK& slot);

std::vector<CongruenceSlotReport> congruence_check_mod3(const SexticModel& A,
                                                        const SexticModel& B,
                                                        const std::vector<PrimeSlotK>& slots);
std::vector<CongruenceSlotReport> congruence_check_mod_sqrt5(
    const SexticModel& A, const EllipticModel& B, const std::vector<PrimeSlotK>& slots);

}  // namespace gfe
