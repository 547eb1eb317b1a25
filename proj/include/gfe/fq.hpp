#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "gfe/numeric.hpp"

namespace gfe {

// Small finite field F_{p^f} with eagerly built discrete-log tables.
// Elements are encoded as integers in [0, q): base-p digits give the
// coefficients of the residue polynomial.
//
// Two construction modes:
//   - make(p, f): any small field, modulus found deterministically;
//   - make_cyclotomic(p, N, factor_index): modulus is an irreducible factor
//     of Phi_N mod p, so the class of x is a primitive N-th root of unity.
//     Different factor indices correspond to different primes above p in
//     Q(zeta_N).
class Fq {
 public:
  static constexpr std::uint64_t kMaxTableSize = 1u << 24;

  static std::shared_ptr<const Fq> make(std::uint32_t p, std::uint32_t f);
  static std::shared_ptr<const Fq> make_cyclotomic(std::uint32_t p, std::uint32_t N,
                                                   std::uint32_t factor_index = 0);

  std::uint32_t p() const { return p_; }
  std::uint32_t f() const { return f_; }
  std::uint32_t q() const { return q_; }
  std::uint32_t N() const { return N_; }
  std::uint32_t generator() const { return exp_[1]; }
  const std::vector<std::uint32_t>& modulus() const { return mod_; }
  std::uint32_t factor_index() const { return factor_index_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    if (a == 0 || b == 0) return 0;
    std::uint64_t e = static_cast<std::uint64_t>(log_[a]) + log_[b];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }
  std::uint32_t inv(std::uint32_t a) const {
    if (a == 0) throw domain_error("Fq: inverse of zero");
    std::uint32_t e = log_[a];
    return exp_[e == 0 ? 0 : q_ - 1 - e];
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const;
  std::uint32_t dlog(std::uint32_t a) const {
    if (a == 0) throw domain_error("Fq: log of zero");
    return log_[a];
  }
  // +1 square, -1 non-square, 0 for zero
  int chi2(std::uint32_t a) const {
    if (a == 0) return 0;
    return (log_[a] & 1) ? -1 : 1;
  }
  // embed a residue of the prime field
  std::uint32_t from_prime_field(std::uint32_t r) const { return r % p_; }
  std::uint32_t trace_to_prime_field(std::uint32_t a) const;

  // exponent k in Z/N with x^((q-1)/N) = zeta^k, where zeta is the canonical
  // embedded N-th root (the class of x for cyclotomic fields); -1 encodes
  // the zero input ("chi(0) = 0").
  long chi_log(std::uint32_t a) const {
    if (N_ == 0) throw domain_error("Fq: chi_log needs a cyclotomic field");
    if (a == 0) return -1;
    return static_cast<long>((static_cast<std::uint64_t>(log_[a]) * winv_) % N_);
  }
  std::uint32_t zeta() const {
    if (N_ == 0) throw domain_error("Fq: no embedded root of unity");
    return zeta_;
  }
  std::uint32_t zeta_index() const { return zeta_index_; }

 private:
  Fq() = default;
  void build_tables();

  std::uint32_t p_ = 0, f_ = 0, q_ = 0;
  std::uint32_t N_ = 0;
  std::uint32_t factor_index_ = 0;
  std::uint32_t zeta_ = 0;       // encoded primitive N-th root (class of x)
  std::uint32_t zeta_index_ = 0; // dlog of zeta
  std::uint64_t winv_ = 0;       // inverse mod N of zeta_index/((q-1)/N)
  std::vector<std::uint32_t> mod_;
  std::vector<std::uint32_t> exp_;
  std::vector<std::uint32_t> log_;
};

// multiplicative order of a modulo n (gcd(a, n) = 1)
std::uint32_t mult_order(std::uint32_t a, std::uint32_t n);

}  // namespace gfe
