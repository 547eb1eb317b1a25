#pragma once

#include "gfe/numeric.hpp"

namespace gfe {

// Element of the ring of integers of Q(sqrt5) in half-integer coordinates:
// the pair (u, v) stands for (u + v*sqrt5)/2, with u = v (mod 2).
class KElt {
 public:
  KElt() : u_(0), v_(0) {}
  explicit KElt(int n) : u_(2 * n), v_(0) {}
  KElt(BigInt u, BigInt v) : u_(std::move(u)), v_(std::move(v)) {
    if (((u_ - v_) % 2) != 0) throw domain_error("KElt: u and v must have equal parity");
  }
  static KElt from_int(const BigInt& n) { return KElt(2 * n, 0); }
  static KElt from_int(long n) { return from_int(BigInt(n)); }
  // golden ratio (1+sqrt5)/2
  static KElt phi() { return KElt(1, 1); }

  const BigInt& u() const { return u_; }
  const BigInt& v() const { return v_; }

  bool is_rational() const { return v_ == 0; }
  bool is_zero() const { return u_ == 0 && v_ == 0; }
  // When v = 0, u is even and the value equals u/2.
  BigInt rational_value() const {
    if (!is_rational()) throw domain_error("KElt: not rational");
    return u_ / 2;
  }

  KElt conj() const { return KElt(u_, -v_); }
  BigInt trace() const { return u_; }
  BigInt norm() const { return (u_ * u_ - 5 * v_ * v_) / 4; }
  double embed(int sign) const {
    double s = sign >= 0 ? 1.0 : -1.0;
    return (u_.get_d() + s * v_.get_d() * 2.2360679774997896964) / 2.0;
  }

  KElt operator-() const { return KElt(-u_, -v_); }
  KElt operator+(const KElt& o) const { return KElt(u_ + o.u_, v_ + o.v_); }
  KElt operator-(const KElt& o) const { return KElt(u_ - o.u_, v_ - o.v_); }
  KElt operator*(const KElt& o) const {
    // ((u + v s)/2)((u' + v' s)/2) = ((uu' + 5vv')/2 + (uv' + vu')/2 * s)/2, s = sqrt5
    return KElt((u_ * o.u_ + 5 * v_ * o.v_) / 2, (u_ * o.v_ + v_ * o.u_) / 2);
  }
  KElt operator*(const BigInt& n) const { return KElt(u_ * n, v_ * n); }
  bool operator==(const KElt& o) const { return u_ == o.u_ && v_ == o.v_; }
  bool operator!=(const KElt& o) const { return !(*this == o); }
  bool operator<(const KElt& o) const {
    return u_ < o.u_ || (u_ == o.u_ && v_ < o.v_);
  }

  // Minimal polynomial over Q: x - a for rational a, else x^2 - trace*x + norm.
  // Returned as (monic coefficients c0, c1[, c2]) low to high.
  std::vector<BigInt> min_poly() const;

  std::string to_string() const;

 private:
  BigInt u_, v_;
};

// Solve z^2 = n in the ring of integers of K (n a rational integer viewed in K).
// Returns a root if n = s^2 or n = 5 s^2; the other root is its negative.
std::optional<KElt> sqrt_in_K(const BigInt& n);

}  // namespace gfe
