#include "gfe/cyclotomic.hpp"

#include <map>

namespace gfe {

namespace {

// exact division of integer polynomials, used by the Phi_N recursion
ZPoly zdiv_exact(const ZPoly& a, const ZPoly& b) {
  std::vector<BigInt> rem(a.coeffs());
  long db = b.degree();
  if (db < 0) throw domain_error("division by zero polynomial");
  std::vector<BigInt> q(rem.size() >= static_cast<std::size_t>(db) + 1
                            ? rem.size() - db
                            : 0,
                        BigInt(0));
  for (long i = static_cast<long>(rem.size()) - 1; i >= db; --i) {
    BigInt c = rem[i];
    if (c == 0) continue;
    if (c % b.leading() != 0) throw domain_error("non-exact polynomial division");
    BigInt f = c / b.leading();
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
  }
  for (auto& c : rem)
    if (c != 0) throw domain_error("non-exact polynomial division (remainder)");
  return ZPoly(std::move(q));
}

}  // namespace

const ZPoly& cyclotomic_polynomial(unsigned N) {
  static std::map<unsigned, ZPoly> cache;
  auto it = cache.find(N);
  if (it != cache.end()) return it->second;
  // x^N - 1 = prod_{d | N} Phi_d
  std::vector<BigInt> xn(N + 1, BigInt(0));
  xn[0] = -1;
  xn[N] = 1;
  ZPoly result(std::move(xn));
  for (unsigned d = 1; d < N; ++d) {
    if (N % d == 0) result = zdiv_exact(result, cyclotomic_polynomial(d));
  }
  return cache.emplace(N, std::move(result)).first->second;
}

CycInt::CycInt(unsigned N) : N_(N), c_(euler_phi(N), BigInt(0)) {
  if (N < 2) throw domain_error("CycInt: N must be >= 2");
}

unsigned CycInt::euler_phi(unsigned n) {
  unsigned r = n;
  for (unsigned p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      while (n % p == 0) n /= p;
      r -= r / p;
    }
  }
  if (n > 1) r -= r / n;
  return r;
}

CycInt CycInt::from_int(unsigned N, const BigInt& n) {
  CycInt v(N);
  v.c_[0] = n;
  return v;
}

CycInt CycInt::zeta_power(unsigned N, long k) {
  CycInt v(N);
  long kk = ((k % static_cast<long>(N)) + N) % N;
  std::vector<BigInt> raw(N, BigInt(0));
  raw[kk] = 1;
  v.c_ = reduce(N, std::move(raw));
  return v;
}

std::vector<BigInt> CycInt::reduce(unsigned N, std::vector<BigInt> raw) {
  const ZPoly& phi = cyclotomic_polynomial(N);
  std::size_t deg = static_cast<std::size_t>(phi.degree());
  for (long i = static_cast<long>(raw.size()) - 1; i >= static_cast<long>(deg); --i) {
    BigInt c = raw[i];
    if (c == 0) continue;
    raw[i] = 0;
    for (std::size_t j = 0; j < deg; ++j) raw[i - deg + j] -= c * phi.coeff(j);
  }
  raw.resize(deg);
  return raw;
}

CycInt CycInt::operator+(const CycInt& o) const {
  check_same(o);
  CycInt r(N_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] + o.c_[i];
  return r;
}

CycInt CycInt::operator-(const CycInt& o) const {
  check_same(o);
  CycInt r(N_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] - o.c_[i];
  return r;
}

CycInt CycInt::operator-() const {
  CycInt r(N_);
  for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
  return r;
}

CycInt CycInt::operator*(const CycInt& o) const {
  check_same(o);
  std::vector<BigInt> raw(2 * c_.size(), BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) raw[i + j] += c_[i] * o.c_[j];
  }
  CycInt r(N_);
  r.c_ = reduce(N_, std::move(raw));
  return r;
}

CycInt CycInt::mul_zeta_power(long k) const {
  long kk = ((k % static_cast<long>(N_)) + N_) % N_;
  std::vector<BigInt> raw(c_.size() + kk, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) raw[i + kk] = c_[i];
  CycInt r(N_);
  r.c_ = reduce(N_, std::move(raw));
  return r;
}

CycInt CycInt::galois(unsigned k) const {
  if (std::gcd(k, N_) != 1) throw domain_error("galois: k not coprime to N");
  std::vector<BigInt> raw(N_, BigInt(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    raw[(i * k) % N_] += c_[i];
  }
  CycInt r(N_);
  r.c_ = reduce(N_, std::move(raw));
  return r;
}

bool CycInt::is_rational_integer() const {
  for (std::size_t i = 1; i < c_.size(); ++i)
    if (c_[i] != 0) return false;
  return true;
}

std::complex<double> CycInt::embed(unsigned k) const {
  std::complex<double> z(0.0, 0.0);
  const double two_pi = 6.283185307179586476925;
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    double arg = two_pi * static_cast<double>((i * k) % N_) / static_cast<double>(N_);
    z += c_[i].get_d() * std::complex<double>(std::cos(arg), std::sin(arg));
  }
  return z;
}

ZPoly CycInt::min_poly_over_Q() const {
  // Orbit product over the Galois group sigma_k : zeta -> zeta^k, then the
  // squarefree part. Every coefficient of the product must be an exact
  // rational integer; any drift is an internal arithmetic bug.
  std::vector<CycInt> poly;  // coefficients (in Z[zeta]) of prod (x - sigma_k(v)), low->high
  poly.push_back(from_int(N_, 1));
  for (unsigned k = 1; k < N_; ++k) {
    if (std::gcd(k, N_) != 1) continue;
    CycInt s = galois(k);
    std::vector<CycInt> next;
    next.reserve(poly.size() + 1);
    for (std::size_t i = 0; i <= poly.size(); ++i) {
      CycInt term(N_);
      if (i > 0) term = term + poly[i - 1];
      if (i < poly.size()) term = term - poly[i] * s;
      next.push_back(term);
    }
    poly = std::move(next);
  }
  std::vector<BigInt> zc;
  zc.reserve(poly.size());
  for (auto& coef : poly) {
    if (!coef.is_rational_integer())
      throw oracle_error("min_poly_over_Q: orbit product has non-integer coefficients");
    zc.push_back(coef.coeffs()[0]);
  }
  ZPoly full(std::move(zc));
  QPoly sq = squarefree_part(to_qpoly(full));
  ZPoly mp = primitive_integer_poly(sq);
  if (mp.leading() < 0) mp = -mp;
  // exactness check: mp^(phi(N)/deg) == full
  long deg = mp.degree();
  if (deg <= 0 || full.degree() % deg != 0)
    throw oracle_error("min_poly_over_Q: squarefree part degree mismatch");
  ZPoly pw = ZPoly::x_power(0);
  for (long i = 0; i < full.degree() / deg; ++i) pw = pw * mp;
  if (!(pw == full)) throw oracle_error("min_poly_over_Q: verification failed");
  return mp;
}

std::optional<std::pair<KElt, KElt>> CycInt::as_K_pair() const {
  ZPoly mp = min_poly_over_Q();
  if (mp.degree() == 1) {
    KElt a = KElt::from_int(-mp.coeff(0));
    return std::make_pair(a, a);
  }
  if (mp.degree() != 2) return std::nullopt;
  // x^2 + b x + c with roots (-b +- sqrt(b^2-4c))/2
  BigInt b = mp.coeff(1), c = mp.coeff(0);
  BigInt disc = b * b - 4 * c;
  if (disc % 5 == 0) {
    if (auto s = exact_root(disc / 5, 2)) {
      KElt a(-b, *s);
      return std::make_pair(a, a.conj());
    }
  }
  if (auto s = exact_root(disc, 2)) {
    // two rational roots; both are "conjugates" in the degenerate sense
    return std::make_pair(KElt(-b + *s, BigInt(0)), KElt(-b - *s, BigInt(0)));
  }
  return std::nullopt;
}

void CycInt::check_same(const CycInt& o) const {
  if (N_ != o.N_) throw domain_error("CycInt: mixed cyclotomic levels");
}

}  // namespace gfe
