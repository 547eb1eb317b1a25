#include "gfe/poly.hpp"

namespace gfe {

QPoly to_qpoly(const ZPoly& p) {
  std::vector<BigRat> v;
  v.reserve(p.coeffs().size());
  for (auto& c : p.coeffs()) v.emplace_back(c);
  return QPoly(std::move(v));
}

ZPoly primitive_integer_poly(const QPoly& p) {
  if (p.is_zero()) return ZPoly();
  BigInt den = 1;
  for (auto& c : p.coeffs()) {
    BigInt d(c.get_den());
    den = den / gcd(den, d) * d;
  }
  std::vector<BigInt> v;
  v.reserve(p.coeffs().size());
  for (auto& c : p.coeffs()) {
    BigRat s = c * BigRat(den);
    v.emplace_back(s.get_num());
  }
  BigInt content = 0;
  for (auto& c : v) content = gcd(content, c);
  if (content > 1)
    for (auto& c : v) c /= content;
  return ZPoly(std::move(v));
}

std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
  if (b.is_zero()) throw domain_error("polynomial division by zero");
  std::vector<BigRat> rem(a.coeffs());
  long db = b.degree();
  long da = a.degree();
  if (da < db) return {QPoly(), a};
  std::vector<BigRat> q(da - db + 1, BigRat(0));
  for (long i = da; i >= db; --i) {
    BigRat c = rem[i];
    if (c == 0) continue;
    BigRat f = c / b.leading();
    q[i - db] = f;
    for (long j = 0; j <= db; ++j) rem[i - db + j] -= f * b.coeff(j);
  }
  return {QPoly(std::move(q)), QPoly(std::move(rem))};
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.is_zero()) {
    auto [q, r] = divmod(a, b);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) return a;
  return a * (BigRat(1) / a.leading());
}

QPoly squarefree_part(const QPoly& p) {
  if (p.degree() <= 1) return p;
  QPoly g = poly_gcd(p, p.derivative());
  if (g.degree() <= 0) return p;
  return divmod(p, g).first;
}

BigRat resultant(const QPoly& a, const QPoly& b) {
  if (a.is_zero() || b.is_zero()) throw domain_error("resultant of zero polynomial");
  QPoly f = a, g = b;
  BigRat acc(1);
  int sign = 1;
  while (true) {
    if (g.degree() == 0) {
      BigRat r(1);
      for (long i = 0; i < f.degree(); ++i) r *= g.leading();
      return acc * r * sign;
    }
    if (f.degree() == 0) {
      BigRat r(1);
      for (long i = 0; i < g.degree(); ++i) r *= f.leading();
      return acc * r * sign;
    }
    if (f.degree() < g.degree()) {
      if ((f.degree() % 2) && (g.degree() % 2)) sign = -sign;
      std::swap(f, g);
      continue;
    }
    // f = q g + r:  Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r)
    auto [q, rem] = divmod(f, g);
    if (rem.is_zero()) return BigRat(0);
    if ((f.degree() % 2) && (g.degree() % 2)) sign = -sign;
    long drop = f.degree() - rem.degree();
    for (long i = 0; i < drop; ++i) acc *= g.leading();
    f = std::move(g);
    g = std::move(rem);
  }
}

namespace {

// exact division in O_K: requires b | a
KElt kdiv_exact(const KElt& a, const KElt& b) {
  BigInt n = b.norm();
  if (n == 0) throw domain_error("KElt division by zero");
  KElt prod = a * b.conj();
  if (prod.u() % n != 0 || prod.v() % n != 0)
    throw domain_error("KElt division is not exact");
  return KElt(prod.u() / n, prod.v() / n);
}

KElt kpow(const KElt& x, long e) {
  KElt r(1);
  for (long i = 0; i < e; ++i) r = r * x;
  return r;
}

}  // namespace

KElt resultant(const KPoly& a, const KPoly& b) {
  if (a.is_zero() || b.is_zero()) throw domain_error("resultant of zero polynomial");
  // subresultant pseudo-remainder sequence (Collins); all divisions exact
  KPoly f = a, g = b;
  int sign = 1;
  KElt acc_num(1), acc_den(1);
  while (true) {
    if (g.degree() == 0) {
      KElt r = kpow(g.leading(), f.degree());
      KElt num = acc_num * r;
      if (sign < 0) num = -num;
      return kdiv_exact(num, acc_den);
    }
    if (f.degree() == 0) {
      KElt r = kpow(f.leading(), g.degree());
      KElt num = acc_num * r;
      if (sign < 0) num = -num;
      return kdiv_exact(num, acc_den);
    }
    if (f.degree() < g.degree()) {
      if ((f.degree() % 2) && (g.degree() % 2)) sign = -sign;
      std::swap(f, g);
      continue;
    }
    // pseudo-division: lc(g)^(df-dg+1) f = q g + r
    long df = f.degree(), dg = g.degree();
    KPoly rem = f * kpow(g.leading(), df - dg + 1);
    for (long i = rem.degree(); i >= dg; --i) {
      KElt c = rem.coeff(static_cast<std::size_t>(i));
      if (c.is_zero()) continue;
      KElt fac = kdiv_exact(c, g.leading());
      std::vector<KElt> sub(i - dg + 1, KElt(0));
      sub[i - dg] = fac;
      rem = rem - g * KPoly(std::move(sub));
    }
    if (rem.is_zero()) return KElt(0);
    // Res(f, g) = (-1)^(df dg) lc(g)^(df - dr) Res(g, r) with
    // r = prem / lc(g)^(df-dg+1) tracked through numerator/denominator
    if ((df % 2) && (dg % 2)) sign = -sign;
    long dr = rem.degree();
    acc_num = acc_num * kpow(g.leading(), df - dr);
    acc_den = acc_den * kpow(g.leading(), (df - dg + 1) * dg);
    f = std::move(g);
    g = std::move(rem);
  }
}

long content_valuation(const QPoly& p, const BigInt& prime) {
  if (p.is_zero()) return kValInfinity;
  long best = kValInfinity;
  for (auto& c : p.coeffs()) {
    if (c == 0) continue;
    best = std::min(best, valuation(c, prime));
  }
  return best;
}

KElt resultant_cyclo_quadratic(unsigned long n, const KElt& a, const BigInt& q) {
  // power sums of the two roots of x^2 - a x + q
  KElt qe = KElt::from_int(q);
  KElt s_prev = KElt(2);  // s_0
  KElt s_cur = a;         // s_1
  if (n == 0) return KElt();
  for (unsigned long k = 2; k <= n; ++k) {
    KElt s_next = a * s_cur - qe * s_prev;
    s_prev = s_cur;
    s_cur = s_next;
  }
  BigInt qn = pow_int(q, n);
  return KElt::from_int(qn) - s_cur + KElt(1);
}

}  // namespace gfe
