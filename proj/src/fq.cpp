#include "gfe/fq.hpp"

#include "gfe/cyclotomic.hpp"

#include <algorithm>
#include <numeric>

namespace gfe {

namespace {

using Vec = std::vector<std::uint32_t>;

// dense poly arithmetic over F_p, coefficients low->high, used only at
// field-construction time

Vec pmul_mod(const Vec& a, const Vec& b, const Vec& mod, std::uint32_t p) {
  std::size_t f = mod.size() - 1;
  std::vector<std::uint64_t> res(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    for (std::size_t j = 0; j < b.size(); ++j)
      res[i + j] = (res[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p;
  }
  for (std::size_t i = res.size(); i-- > f;) {
    std::uint64_t c = res[i];
    if (!c) continue;
    res[i] = 0;
    for (std::size_t j = 0; j < f; ++j) {
      std::uint64_t sub = (c * mod[j]) % p;
      res[i - f + j] = (res[i - f + j] + p - sub) % p;
    }
  }
  res.resize(f);
  Vec out(f);
  for (std::size_t i = 0; i < f; ++i) out[i] = static_cast<std::uint32_t>(res[i]);
  return out;
}

Vec ppow_mod(Vec a, BigInt e, const Vec& mod, std::uint32_t p) {
  std::size_t f = mod.size() - 1;
  Vec r(f, 0);
  r[0] = 1;
  a.resize(std::max(a.size(), f), 0);
  while (e > 0) {
    if (mpz_odd_p(e.get_mpz_t())) r = pmul_mod(r, a, mod, p);
    a = pmul_mod(a, a, mod, p);
    e >>= 1;
  }
  return r;
}

// remainder of a (any degree) modulo monic g, over F_p
Vec prem(Vec a, const Vec& g, std::uint32_t p) {
  long dg = static_cast<long>(g.size()) - 1;
  for (long i = static_cast<long>(a.size()) - 1; i >= dg; --i) {
    std::uint64_t c = a[i];
    if (!c) continue;
    a[i] = 0;
    for (long j = 0; j < dg; ++j) {
      std::uint64_t sub = (c * g[j]) % p;
      a[i - dg + j] = static_cast<std::uint32_t>((a[i - dg + j] + p - sub) % p);
    }
  }
  a.resize(std::max<long>(dg, 1));
  while (a.size() > 1 && a.back() == 0) a.pop_back();
  return a;
}

Vec pgcd(Vec a, Vec b, std::uint32_t p) {
  auto deg = [](const Vec& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  while (deg(b) >= 0) {
    // make b monic
    long db = deg(b);
    std::uint64_t lc = b[db];
    std::uint64_t lcinv = 1;
    {
      // Fermat inverse
      std::uint64_t base = lc, e = p - 2, r = 1;
      while (e) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
      }
      lcinv = r;
    }
    Vec bm(b.begin(), b.begin() + db + 1);
    for (auto& c : bm) c = static_cast<std::uint32_t>(c * lcinv % p);
    Vec r = prem(a, bm, p);
    a = std::move(bm);
    b = std::move(r);
  }
  long da = deg(a);
  Vec out(a.begin(), a.begin() + std::max<long>(da, 0) + 1);
  return out;
}

// All monic irreducible degree-f factors of Phi_N mod p, sorted by
// coefficient tuple. Deterministic equal-degree splitting (fixed-seed LCG),
// with a brute-force path for p = 2.
std::vector<Vec> phi_factors(std::uint32_t N, std::uint32_t p, std::uint32_t f) {
  // Phi_N mod p
  const ZPoly& phi = cyclotomic_polynomial(N);
  Vec target(phi.degree() + 1);
  for (long i = 0; i <= phi.degree(); ++i) target[i] = reduce_mod_p(phi.coeff(i), p);

  std::vector<Vec> done;
  auto deg = [](const Vec& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };

  if (p == 2) {
    // tiny search space: iterate monic degree-f polynomials
    for (std::uint32_t mask = 0; mask < (1u << f); ++mask) {
      Vec g(f + 1, 0);
      g[f] = 1;
      for (std::uint32_t i = 0; i < f; ++i) g[i] = (mask >> i) & 1;
      Vec r = prem(target, g, 2);
      if (deg(r) < 0) done.push_back(g);
    }
    std::sort(done.begin(), done.end());
    return done;
  }

  std::vector<Vec> work{target};
  std::uint64_t state = 0x2545F4914F6CDD1Dull;
  auto next_rand = [&]() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 16;
  };
  BigInt half = (pow_int(BigInt(p), f) - 1) / 2;
  while (!work.empty()) {
    Vec g = work.back();
    work.pop_back();
    long dg = deg(g);
    if (dg == static_cast<long>(f)) {
      Vec out(g.begin(), g.begin() + f + 1);
      // normalize monic
      done.push_back(out);
      continue;
    }
    // random split
    for (int attempt = 0; attempt < 200; ++attempt) {
      Vec r(dg, 0);
      for (auto& c : r) c = static_cast<std::uint32_t>(next_rand() % p);
      if (deg(r) < 1) continue;
      Vec gm(g.begin(), g.begin() + dg + 1);
      Vec pw = ppow_mod(r, half, gm, p);
      if (pw.size() < 1) continue;
      pw[0] = (pw[0] + p - 1) % p;  // r^((q-1)/2) - 1
      Vec h = pgcd(gm, pw, p);
      long dh = deg(h);
      if (dh <= 0 || dh == dg) continue;
      // h and g/h
      // divide g by monic-normalized h
      std::uint64_t lc = h[dh];
      std::uint64_t e = p - 2, base = lc, inv = 1;
      while (e) {
        if (e & 1) inv = inv * base % p;
        base = base * base % p;
        e >>= 1;
      }
      Vec hm(h.begin(), h.begin() + dh + 1);
      for (auto& c : hm) c = static_cast<std::uint32_t>(c * inv % p);
      // synthetic division g / hm
      Vec quot(dg - dh + 1, 0);
      Vec rem(gm);
      for (long i = dg; i >= dh; --i) {
        std::uint64_t c = rem[i];
        if (!c) continue;
        quot[i - dh] = static_cast<std::uint32_t>(c);
        for (long j = 0; j <= dh; ++j) {
          std::uint64_t sub = c * hm[j] % p;
          rem[i - dh + j] = static_cast<std::uint32_t>((rem[i - dh + j] + p - sub) % p);
        }
      }
      work.push_back(hm);
      work.push_back(quot);
      break;
    }
  }
  std::sort(done.begin(), done.end());
  return done;
}

Vec find_irreducible(std::uint32_t p, std::uint32_t f) {
  if (f == 1) return Vec{0, 1};
  auto deg = [](const Vec& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  auto is_irred = [&](const Vec& g) {
    Vec x{0, 1};
    // x^(p^f) == x mod g
    Vec r = ppow_mod(x, pow_int(BigInt(p), f), g, p);
    Vec xe(g.size() - 1, 0);
    if (xe.size() > 1) xe[1] = 1;
    if (r != xe) return false;
    for (std::uint32_t d = 1; d < f; ++d) {
      if (f % d != 0) continue;
      bool dprime = false;
      // only need maximal proper divisors, but checking all divisors is fine
      (void)dprime;
      Vec rd = ppow_mod(x, pow_int(BigInt(p), d), g, p);
      Vec diff = rd;
      // diff -= x
      if (diff.size() < 2) diff.resize(2, 0);
      diff[1] = (diff[1] + p - 1) % p;
      Vec gg = pgcd(g, diff, p);
      if (deg(gg) > 0) return false;
    }
    return true;
  };
  // deterministic scan over constant-coefficient patterns
  std::vector<std::uint32_t> counter(f, 0);
  while (true) {
    Vec g(f + 1, 0);
    g[f] = 1;
    for (std::uint32_t i = 0; i < f; ++i) g[i] = counter[i];
    if (is_irred(g)) return g;
    std::size_t i = 0;
    while (i < f && ++counter[i] == p) counter[i++] = 0;
    if (i == f) throw oracle_error("find_irreducible: exhausted search space");
  }
}

}  // namespace

std::uint32_t mult_order(std::uint32_t a, std::uint32_t n) {
  if (std::gcd(a, n) != 1) throw domain_error("mult_order: gcd != 1");
  std::uint64_t x = a % n;
  std::uint32_t o = 1;
  while (x != 1) {
    x = x * a % n;
    ++o;
  }
  return o;
}

void Fq::build_tables() {
  q_ = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    std::uint64_t next = static_cast<std::uint64_t>(q_) * p_;
    if (next > kMaxTableSize) throw domain_error("Fq: field too large for eager tables");
    q_ = static_cast<std::uint32_t>(next);
  }
  auto decode = [&](std::uint32_t v) {
    Vec d(f_);
    for (std::uint32_t i = 0; i < f_; ++i) {
      d[i] = v % p_;
      v /= p_;
    }
    return d;
  };
  auto encode = [&](const Vec& d) {
    std::uint32_t v = 0;
    for (std::uint32_t i = f_; i-- > 0;) v = v * p_ + (i < d.size() ? d[i] : 0);
    return v;
  };
  // find a generator: factor q-1, test candidates in encoding order
  BigInt qm1(q_ - 1);
  std::vector<BigInt> prime_divs = prime_support(qm1);
  std::uint32_t gen = 0;
  for (std::uint32_t cand = 2; cand < q_; ++cand) {
    Vec cd = decode(cand);
    bool ok = true;
    for (auto& pd : prime_divs) {
      BigInt e = qm1 / pd;
      Vec r = ppow_mod(cd, e, mod_, p_);
      Vec one(f_, 0);
      one[0] = 1;
      if (r == one) {
        ok = false;
        break;
      }
    }
    if (ok) {
      gen = cand;
      break;
    }
  }
  if (!gen) throw oracle_error("Fq: no generator found");
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, 0);
  Vec cur(f_, 0);
  cur[0] = 1;
  Vec gd = decode(gen);
  for (std::uint32_t e = 0; e < q_ - 1; ++e) {
    std::uint32_t v = encode(cur);
    exp_[e] = v;
    log_[v] = e;
    cur = pmul_mod(cur, gd, mod_, p_);
  }
  Vec one(f_, 0);
  one[0] = 1;
  if (cur != one) throw oracle_error("Fq: generator order check failed");
}

std::uint32_t Fq::add(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t s = da + db;
    if (s >= p_) s -= p_;
    out += s * mul;
    mul *= p_;
  }
  return out;
}

std::uint32_t Fq::sub(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t out = 0, mul = 1;
  for (std::uint32_t i = 0; i < f_; ++i) {
    std::uint32_t da = a % p_, db = b % p_;
    a /= p_;
    b /= p_;
    std::uint32_t s = da + p_ - db;
    if (s >= p_) s -= p_;
    out += s * mul;
    mul *= p_;
  }
  return out;
}

std::uint32_t Fq::pow(std::uint32_t a, std::uint64_t e) const {
  if (a == 0) return e == 0 ? 1 : 0;
  std::uint64_t le = static_cast<std::uint64_t>(log_[a]) % (q_ - 1);
  std::uint64_t idx = (le * (e % (q_ - 1))) % (q_ - 1);
  return exp_[idx];
}

std::uint32_t Fq::trace_to_prime_field(std::uint32_t a) const {
  // Tr(a) = a + a^p + ... + a^{p^{f-1}}
  std::uint32_t acc = 0, cur = a;
  for (std::uint32_t i = 0; i < f_; ++i) {
    acc = add(acc, cur);
    cur = pow(cur, p_);
  }
  if (acc >= p_) throw oracle_error("Fq: trace not in prime field");
  return acc;
}

std::shared_ptr<const Fq> Fq::make(std::uint32_t p, std::uint32_t f) {
  if (p < 2 || !is_probable_prime(BigInt(p))) throw domain_error("Fq: p must be prime");
  auto fq = std::shared_ptr<Fq>(new Fq());
  fq->p_ = p;
  fq->f_ = f;
  fq->mod_ = find_irreducible(p, f);
  fq->build_tables();
  return fq;
}

std::shared_ptr<const Fq> Fq::make_cyclotomic(std::uint32_t p, std::uint32_t N,
                                              std::uint32_t factor_index) {
  if (!is_probable_prime(BigInt(p))) throw domain_error("Fq: p must be prime");
  if (N % p == 0) throw domain_error("Fq: p divides N");
  std::uint32_t f = mult_order(p, N);
  auto fq = std::shared_ptr<Fq>(new Fq());
  fq->p_ = p;
  fq->f_ = f;
  fq->N_ = N;
  auto factors = phi_factors(N, p, f);
  if (factors.empty()) throw oracle_error("Fq: Phi_N splitting failed");
  fq->factor_index_ = factor_index % factors.size();
  fq->mod_ = factors[fq->factor_index_];
  fq->build_tables();
  // class of x (for f = 1 the root of the linear factor)
  if (f == 1) {
    // modulus x + c -> root is -c
    std::uint32_t c = fq->mod_[0];
    fq->zeta_ = (p - c) % p;
  } else {
    fq->zeta_ = fq->p_;  // encoding of the polynomial "x"
  }
  fq->zeta_index_ = fq->log_[fq->zeta_];
  std::uint32_t step = (fq->q_ - 1) / N;
  if (fq->zeta_index_ % step != 0)
    throw oracle_error("Fq: embedded root of unity has wrong order");
  std::uint64_t w = fq->zeta_index_ / step;
  if (std::gcd<std::uint64_t>(w, N) != 1)
    throw oracle_error("Fq: embedded root of unity not primitive");
  fq->winv_ = inv_mod(BigInt(static_cast<unsigned long>(w)), BigInt(N)).get_ui();
  return fq;
}

}  // namespace gfe
