#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gfe {

using BigInt = mpz_class;
using BigRat = mpq_class;

// Error taxonomy used across the toolkit. CLI exit codes depend on it:
// domain_error -> 2, oracle_error -> 3, data_error -> 4.
struct domain_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct oracle_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct data_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// v_p(0) sentinel.
inline constexpr long kValInfinity = std::numeric_limits<long>::max();

BigRat make_rat(const BigInt& num, const BigInt& den);
BigRat make_rat(long num, long den);

// Exact p-adic valuation; kValInfinity for 0.
long valuation(const BigInt& n, const BigInt& p);
long valuation(const BigRat& r, const BigInt& p);

// Exact integer r-th root (r >= 1). For even r, n must be >= 0.
std::optional<BigInt> exact_root(const BigInt& n, unsigned r);

inline bool is_square(const BigInt& n) {
  return n >= 0 && mpz_perfect_square_p(n.get_mpz_t());
}
BigInt isqrt(const BigInt& n);

BigInt pow_int(const BigInt& base, unsigned long e);
BigInt pow_int(long base, unsigned long e);

// base^e mod m, e >= 0
BigInt pow_mod(const BigInt& base, const BigInt& e, const BigInt& m);
// inverse of a mod m; throws domain_error if gcd(a,m) != 1
BigInt inv_mod(const BigInt& a, const BigInt& m);

inline BigInt gcd(const BigInt& a, const BigInt& b) {
  BigInt g;
  mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return g;
}

inline bool is_probable_prime(const BigInt& n) {
  return mpz_probab_prime_p(n.get_mpz_t(), 32) != 0;
}

// Reduce a rational into F_p; throws domain_error when p divides the denominator.
std::uint32_t reduce_mod_p(const BigRat& r, std::uint32_t p);
std::uint32_t reduce_mod_p(const BigInt& n, std::uint32_t p);

// Legendre symbol (a|p), p an odd prime.
int legendre(const BigInt& a, const BigInt& p);

// Full factorization (trial division + Pollard rho); returns prime -> exponent.
std::map<BigInt, unsigned> factorize(BigInt n);

// Distinct prime divisors of |n| (n != 0).
std::vector<BigInt> prime_support(const BigInt& n);

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound);

std::string rat_to_string(const BigRat& r);

}  // namespace gfe
