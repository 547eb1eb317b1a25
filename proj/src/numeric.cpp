#include "gfe/numeric.hpp"

#include <algorithm>

namespace gfe {

BigRat make_rat(const BigInt& num, const BigInt& den) {
  if (den == 0) throw domain_error("rational with zero denominator");
  BigRat r(num, den);
  r.canonicalize();
  return r;
}

BigRat make_rat(long num, long den) { return make_rat(BigInt(num), BigInt(den)); }

long valuation(const BigInt& n, const BigInt& p) {
  if (n == 0) return kValInfinity;
  if (p < 2) throw domain_error("valuation: p must be >= 2");
  BigInt rest;
  unsigned long v = mpz_remove(rest.get_mpz_t(), n.get_mpz_t(), p.get_mpz_t());
  return static_cast<long>(v);
}

long valuation(const BigRat& r, const BigInt& p) {
  if (r == 0) return kValInfinity;
  return valuation(BigInt(r.get_num()), p) - valuation(BigInt(r.get_den()), p);
}

std::optional<BigInt> exact_root(const BigInt& n, unsigned r) {
  if (r == 0) throw domain_error("exact_root: r must be positive");
  if (n < 0) {
    if (r % 2 == 0) return std::nullopt;
    auto s = exact_root(-n, r);
    if (!s) return std::nullopt;
    return -*s;
  }
  BigInt root;
  int exactp = mpz_root(root.get_mpz_t(), n.get_mpz_t(), r);
  if (!exactp) return std::nullopt;
  return root;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw domain_error("isqrt of negative");
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

BigInt pow_int(const BigInt& base, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

BigInt pow_int(long base, unsigned long e) { return pow_int(BigInt(base), e); }

BigInt pow_mod(const BigInt& base, const BigInt& e, const BigInt& m) {
  BigInt r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
  return r;
}

BigInt inv_mod(const BigInt& a, const BigInt& m) {
  BigInt r;
  if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
    throw domain_error("inv_mod: not invertible");
  return r;
}

std::uint32_t reduce_mod_p(const BigInt& n, std::uint32_t p) {
  BigInt r = n % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

std::uint32_t reduce_mod_p(const BigRat& r, std::uint32_t p) {
  BigInt den(r.get_den());
  if (den % p == 0) throw domain_error("reduce_mod_p: denominator divisible by p");
  BigInt num(r.get_num());
  BigInt inv = inv_mod(den % p, BigInt(p));
  BigInt prod = num * inv;
  return reduce_mod_p(prod, p);
}

int legendre(const BigInt& a, const BigInt& p) {
  return mpz_legendre(a.get_mpz_t(), p.get_mpz_t());
}

namespace {

BigInt pollard_rho(const BigInt& n) {
  if (n % 2 == 0) return 2;
  gmp_randclass rng(gmp_randinit_default);
  rng.seed(0x9e3779b9UL);
  while (true) {
    BigInt x = rng.get_z_range(n - 2) + 2;
    BigInt y = x;
    BigInt c = rng.get_z_range(n - 1) + 1;
    BigInt d = 1;
    while (d == 1) {
      x = (x * x + c) % n;
      y = (y * y + c) % n;
      y = (y * y + c) % n;
      d = gcd(abs(x - y), n);
    }
    if (d != n) return d;
  }
}

void factor_rec(BigInt n, std::map<BigInt, unsigned>& out) {
  if (n == 1) return;
  if (is_probable_prime(n)) {
    out[n]++;
    return;
  }
  BigInt d = pollard_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

std::map<BigInt, unsigned> factorize(BigInt n) {
  if (n == 0) throw domain_error("factorize(0)");
  if (n < 0) n = -n;
  std::map<BigInt, unsigned> out;
  for (std::uint32_t p : {2u, 3u, 5u, 7u, 11u, 13u, 17u, 19u, 23u, 29u, 31u, 37u}) {
    while (n % p == 0) {
      out[BigInt(p)]++;
      n /= p;
    }
  }
  BigInt p = 41;
  while (p * p <= n && p < 100000) {
    while (n % p == 0) {
      out[p]++;
      n /= p;
    }
    p += 2;
  }
  if (n > 1) factor_rec(n, out);
  return out;
}

std::vector<BigInt> prime_support(const BigInt& n) {
  std::vector<BigInt> out;
  for (auto& [p, e] : factorize(n)) out.push_back(p);
  return out;
}

std::vector<std::uint32_t> primes_up_to(std::uint32_t bound) {
  std::vector<bool> sieve(bound + 1, true);
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i <= bound; ++i) {
    if (!sieve[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = static_cast<std::uint64_t>(i) * i; j <= bound; j += i)
      sieve[j] = false;
  }
  return out;
}

std::string rat_to_string(const BigRat& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

}  // namespace gfe
