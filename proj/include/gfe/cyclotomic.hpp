#pragma once

#include <complex>
#include <numeric>
#include <optional>

#include "gfe/poly.hpp"

namespace gfe {

// Phi_N as an integer polynomial (cached).
const ZPoly& cyclotomic_polynomial(unsigned N);

// Exact element of Z[zeta_N] on the power basis 1, zeta, ..., zeta^{phi(N)-1},
// reduced canonically modulo Phi_N.
class CycInt {
 public:
  explicit CycInt(unsigned N);
  static CycInt from_int(unsigned N, const BigInt& n);
  static CycInt zeta_power(unsigned N, long k);
  static unsigned euler_phi(unsigned n);

  unsigned level() const { return N_; }
  const std::vector<BigInt>& coeffs() const { return c_; }

  CycInt operator+(const CycInt& o) const;
  CycInt operator-(const CycInt& o) const;
  CycInt operator-() const;
  CycInt operator*(const CycInt& o) const;
  bool operator==(const CycInt& o) const { return N_ == o.N_ && c_ == o.c_; }
  bool operator<(const CycInt& o) const { return c_ < o.c_; }

  CycInt mul_zeta_power(long k) const;
  // sigma_k : zeta -> zeta^k, gcd(k, N) = 1
  CycInt galois(unsigned k) const;
  bool is_rational_integer() const;
  bool is_zero() const {
    for (auto& x : c_)
      if (x != 0) return false;
    return true;
  }

  // complex embedding zeta -> exp(2 pi i k / N)
  std::complex<double> embed(unsigned k = 1) const;

  // Monic minimal polynomial over Q, computed exactly as the squarefree part
  // of the Galois orbit product; throws oracle_error if integrality or the
  // power identity fails.
  ZPoly min_poly_over_Q() const;

  // When the value lies in Q(sqrt5) (degree <= 2), the conjugate pair in K.
  std::optional<std::pair<KElt, KElt>> as_K_pair() const;

 private:
  void check_same(const CycInt& o) const;
  static std::vector<BigInt> reduce(unsigned N, std::vector<BigInt> raw);

  unsigned N_;
  std::vector<BigInt> c_;
};

}  // namespace gfe
