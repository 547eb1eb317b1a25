#include "gfe/curves.hpp"

#include <omp.h>

namespace gfe {

BigRat EllipticModel::discriminant() const {
  BigRat b2v = b2(), b4v = b4(), b6v = b6(), b8v = b8();
  return -b2v * b2v * b8v - 8 * b4v * b4v * b4v - 27 * b6v * b6v + 9 * b2v * b4v * b6v;
}

ZPoly LPoly2::frobenius_char_poly() const {
  return ZPoly(std::vector<BigInt>{q * q, -q * a1, a2, -a1, BigInt(1)});
}

ZPoly build_f_r(unsigned r) {
  if (r < 3 || !is_probable_prime(BigInt(r))) throw domain_error("build_f_r: r must be an odd prime");
  CycInt zeta_sum = CycInt::zeta_power(r, 1) + CycInt::zeta_power(r, -1);
  ZPoly h = zeta_sum.min_poly_over_Q();
  // f(x) = (-1)^((r-1)/2) * x * h(2 - x^2)
  QPoly hx = to_qpoly(h);
  QPoly sub(std::vector<BigRat>{BigRat(2), BigRat(0), BigRat(-1)});  // 2 - x^2
  QPoly acc = QPoly::constant(BigRat(0));
  QPoly pw = QPoly::constant(BigRat(1));
  for (long i = 0; i <= hx.degree(); ++i) {
    acc = acc + pw * hx.coeff(i);
    pw = pw * sub;
  }
  QPoly xpoly = QPoly::x_power(1);
  QPoly f = xpoly * acc;
  if (((r - 1) / 2) % 2 == 1) f = -f;
  ZPoly out = primitive_integer_poly(f);
  // f is monic of degree r by construction
  if (out.degree() != static_cast<long>(r) || out.leading() != 1)
    throw oracle_error("build_f_r: unexpected shape");
  return out;
}

namespace {

void require_param(const BigRat& t, bool exclude_one = true) {
  if (t == 0) throw domain_error("model: t = 0 is outside the family domain");
  if (exclude_one && t == 1) throw domain_error("model: t = 1 is outside the family domain");
}

}  // namespace

SexticModel c53(const BigRat& t) {
  require_param(t);
  std::vector<BigRat> cs(7, BigRat(0));
  cs[6] = 5;
  cs[5] = -12;
  cs[3] = 10 * t;
  cs[0] = t * t;
  return SexticModel{QPoly(std::move(cs)), "c53(" + rat_to_string(t) + ")"};
}

SexticModel cv25b(const BigRat& t) {
  // completed square of y^2 + y(x^3 + t(1-t)^2) = 2t(1-t)^2 x^3 + 3t^2(1-t)^3 x + t^2(1-t)^4:
  // y^2 = x^6 + 10t(1-t)^2 x^3 + 12 t^2 (1-t)^3 x + 5 t^2 (1-t)^4
  require_param(t);
  BigRat s = 1 - t;
  std::vector<BigRat> cs(7, BigRat(0));
  cs[6] = 1;
  cs[3] = 10 * t * s * s;
  cs[1] = 12 * t * t * s * s * s;
  cs[0] = 5 * t * t * s * s * s * s;
  return SexticModel{QPoly(std::move(cs)), "cv25b(" + rat_to_string(t) + ")"};
}

SexticModel darmon_minus(unsigned r, const BigRat& t) {
  require_param(t);
  QPoly f = to_qpoly(build_f_r(r));
  QPoly g = f + QPoly::constant(BigRat(2) - 4 * t);
  return SexticModel{g, "darmon_minus(" + std::to_string(r) + "," + rat_to_string(t) + ")"};
}

SexticModel darmon_plus(unsigned r, const BigRat& t) {
  require_param(t);
  QPoly f = to_qpoly(build_f_r(r));
  QPoly g = f + QPoly::constant(BigRat(2) - 4 * t);
  QPoly lin(std::vector<BigRat>{BigRat(2), BigRat(1)});
  return SexticModel{lin * g, "darmon_plus(" + std::to_string(r) + "," + rat_to_string(t) + ")"};
}

ZPoly F_integral(unsigned q, unsigned r, const BigInt& a, const BigInt& c) {
  // c^r f_r(x/c) + 2 c^r + 4 a^q, exact in Z
  ZPoly f = build_f_r(r);
  std::vector<BigInt> cs(f.degree() + 1, BigInt(0));
  for (long i = 0; i <= f.degree(); ++i)
    cs[i] = f.coeff(i) * pow_int(c, static_cast<unsigned long>(f.degree() - i));
  cs[0] += 2 * pow_int(c, r) + 4 * pow_int(a, q);
  return ZPoly(std::move(cs));
}

SexticModel integral_rescale(const SexticModel& m) {
  long deg = m.f.degree();
  if (deg < 5 || deg > 6) throw domain_error("integral_rescale: degree must be 5 or 6");
  // least m with m^(deg-i) * g_i integral for all i
  BigInt mm = 1;
  for (long i = 0; i < deg; ++i) {
    BigInt den(m.f.coeff(i).get_den());
    if (den == 1) continue;
    unsigned long e = static_cast<unsigned long>(deg - i);
    // smallest k with den | k^e: take the radical-refined growth of k
    BigInt k = 1;
    for (auto& [p, a] : factorize(den)) {
      unsigned long need = (a + e - 1) / e;  // ceil(a / e)
      k *= pow_int(p, need);
    }
    mm = mm / gcd(mm, k) * k;
  }
  if (BigRat(m.f.leading()).get_den() != 1)
    throw domain_error("integral_rescale: leading coefficient must be integral");
  std::vector<BigRat> out(deg + 1, BigRat(0));
  for (long i = 0; i <= deg; ++i)
    out[i] = m.f.coeff(i) * BigRat(pow_int(mm, static_cast<unsigned long>(deg - i)));
  return SexticModel{QPoly(std::move(out)), m.name + "-integral"};
}

EllipticModel e3_plus(const BigRat& t) {
  require_param(t);
  return EllipticModel{BigRat(3), BigRat(0), t, BigRat(0), BigRat(0),
                       "e3_plus(" + rat_to_string(t) + ")"};
}

EllipticModel e3_minus(const BigRat& t) {
  require_param(t);
  return EllipticModel{BigRat(0), BigRat(0), BigRat(0), BigRat(-3), 4 * t - 2,
                       "e3_minus(" + rat_to_string(t) + ")"};
}

EllipticModel e2(const BigRat& t) {
  require_param(t);
  return EllipticModel{BigRat(1), BigRat(0), BigRat(0), t / 64, BigRat(0),
                       "e2(" + rat_to_string(t) + ")"};
}

EllipticModel frey_ppp(const BigRat& t) {
  require_param(t);
  // y^2 = x(x-1)(1-tx); scaling x -> x/(-t), y -> y/(-t) gives the monic model
  // y^2 = x^3 + (1+t) x^2 + t x
  return EllipticModel{BigRat(0), 1 + t, BigRat(0), t, BigRat(0),
                       "frey_ppp(" + rat_to_string(t) + ")"};
}

EllipticModel e_t_remark_family(const BigRat& t) {
  require_param(t, false);
  return EllipticModel{BigRat(1), BigRat(0), BigRat(0), BigRat(0), -t / 432,
                       "e_t(" + rat_to_string(t) + ")"};
}

namespace {

// reduce a genus-2 model at a prime: coefficients into F_ell, checks
std::vector<std::uint32_t> reduce_sextic(const SexticModel& m, const Fq& field) {
  std::uint32_t p = field.p();
  if (m.f.degree() > 6) throw domain_error("count_points: degree > 6");
  std::vector<std::uint32_t> cs(7, 0);
  for (long i = 0; i <= m.f.degree(); ++i) cs[i] = reduce_mod_p(m.f.coeff(i), p);
  long deg = 6;
  while (deg >= 0 && cs[deg] == 0) --deg;
  if (deg < 5)
    throw domain_error("count_points: reduction of " + m.name + " drops below degree 5 at " +
                       std::to_string(p));
  // squarefree check over F_p: gcd(f, f') must be constant
  std::vector<std::uint32_t> f(cs.begin(), cs.begin() + deg + 1);
  std::vector<std::uint32_t> df(deg);
  for (long i = 1; i <= deg; ++i)
    df[i - 1] = static_cast<std::uint32_t>((static_cast<std::uint64_t>(f[i]) * i) % p);
  auto degf = [](const std::vector<std::uint32_t>& v) {
    long d = static_cast<long>(v.size()) - 1;
    while (d >= 0 && v[d] == 0) --d;
    return d;
  };
  auto a = f, b = df;
  while (degf(b) >= 0) {
    long da = degf(a), db = degf(b);
    if (da < db) {
      std::swap(a, b);
      continue;
    }
    // a -= lc(a)/lc(b) x^(da-db) b
    std::uint64_t lcb = b[db];
    std::uint64_t inv = 1, base = lcb, e = p - 2;
    while (e) {
      if (e & 1) inv = inv * base % p;
      base = base * base % p;
      e >>= 1;
    }
    std::uint64_t fac = a[da] * inv % p;
    for (long j = 0; j <= db; ++j) {
      std::uint64_t sub = fac * b[j] % p;
      a[da - db + j] = static_cast<std::uint32_t>((a[da - db + j] + p - sub) % p);
    }
  }
  if (degf(a) > 0)
    throw domain_error("count_points: singular reduction of " + m.name + " at " +
                       std::to_string(p) + " (discriminant vanishes)");
  return cs;
}

template <bool kParallel>
std::int64_t count_sextic_impl(const std::vector<std::uint32_t>& cs, const Fq& field) {
  std::uint32_t q = field.q();
  std::int64_t affine = 0;
  const Fq* F = &field;
#pragma omp parallel for schedule(static) reduction(+ : affine) if (kParallel)
  for (long xs = 0; xs < static_cast<long>(q); ++xs) {
    std::uint32_t x = static_cast<std::uint32_t>(xs);
    std::uint32_t acc = 0;
    for (int i = 6; i >= 0; --i) {
      acc = F->mul(acc, x);
      if (cs[i]) acc = F->add(acc, cs[i]);
    }
    affine += 1 + F->chi2(acc);
  }
  long deg = 6;
  while (deg >= 0 && cs[deg] == 0) --deg;
  std::int64_t infinity = (deg == 6) ? (1 + field.chi2(cs[6])) : 1;
  return affine + infinity;
}

}  // namespace

std::int64_t count_points_serial(const SexticModel& m, const Fq& field) {
  auto cs = reduce_sextic(m, field);
  return count_sextic_impl<false>(cs, field);
}

std::int64_t count_points(const SexticModel& m, const Fq& field) {
  auto cs = reduce_sextic(m, field);
  return count_sextic_impl<true>(cs, field);
}

std::int64_t count_points_elliptic(const EllipticModel& e, const Fq& field) {
  std::uint32_t p = field.p();
  if (p == 2) throw domain_error("count_points_elliptic: characteristic 2 not supported");
  // complete the square: (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
  std::uint32_t c3 = 4 % p;
  std::uint32_t c2 = reduce_mod_p(e.b2(), p);
  std::uint32_t c1 = reduce_mod_p(2 * e.b4(), p);
  std::uint32_t c0 = reduce_mod_p(e.b6(), p);
  // smoothness: discriminant of the model must be nonzero mod p
  if (reduce_mod_p(e.discriminant(), p) == 0)
    throw domain_error("count_points_elliptic: singular reduction at " + std::to_string(p));
  std::uint32_t q = field.q();
  std::int64_t affine = 0;
  for (std::uint32_t x = 0; x < q; ++x) {
    std::uint32_t acc = c3;
    acc = field.add(field.mul(acc, x), c2);
    acc = field.add(field.mul(acc, x), c1);
    acc = field.add(field.mul(acc, x), c0);
    affine += 1 + field.chi2(acc);
  }
  return affine + 1;
}

LPoly2 euler_factor(const SexticModel& m, std::uint32_t ell, std::uint32_t fdeg) {
  auto F1 = Fq::make(ell, fdeg);
  auto F2 = Fq::make(ell, 2 * fdeg);
  std::int64_t n1 = count_points(m, *F1);
  std::int64_t n2 = count_points(m, *F2);
  std::int64_t q = 1;
  for (std::uint32_t i = 0; i < fdeg; ++i) q *= ell;
  LPoly2 L;
  L.q = q;
  L.a1 = q + 1 - n1;
  BigInt s2 = BigInt(q) * q + 1 - n2;
  BigInt a2twice = L.a1 * L.a1 - s2;
  if (a2twice % 2 != 0) throw oracle_error("euler_factor: parity failure in a2");
  L.a2 = a2twice / 2;
  if (!weil_ok(KElt::from_int(L.a1), BigInt(q) * 4))  // |a1| <= 4 sqrt q
    throw oracle_error("euler_factor: a1 violates the Weil bound");
  if (abs(L.a2) > 6 * BigInt(q)) throw oracle_error("euler_factor: a2 violates the Weil bound");
  return L;
}

LPoly2 euler_factor(const SexticModel& m, const PrimeSlotK& slot) {
  return euler_factor(m, slot.ell, slot.f_K);
}

std::pair<KElt, KElt> split_over_K(const LPoly2& L) {
  BigInt b = L.a1;
  BigInt c = L.a2 - 2 * L.q;
  BigInt disc = b * b - 4 * c;
  auto root = sqrt_in_K(disc);
  if (!root)
    throw oracle_error("split_over_K: not GL2(K)-compatible (discriminant " + disc.get_str() +
                       " is not a square or 5*square)");
  KElt s = *root;  // a square root of disc in O_K
  KElt bK = KElt::from_int(b);
  KElt num1 = bK + s, num2 = bK - s;
  if (num1.u() % 2 != 0 || num1.v() % 2 != 0)
    throw oracle_error("split_over_K: roots are not algebraic integers");
  KElt a1(num1.u() / 2, num1.v() / 2);
  KElt a2(num2.u() / 2, num2.v() / 2);
  if (!((a1 + a2) == bK) || !((a1 * a2) == KElt::from_int(c)))
    throw oracle_error("split_over_K: root verification failed");
  return {a1, a2};
}

namespace {

std::vector<std::uint32_t> quartic_mod(const LPoly2& L, std::uint32_t p) {
  // char poly x^4 - a1 x^3 + a2 x^2 - q a1 x + q^2 reduced mod p
  ZPoly cp = L.frobenius_char_poly();
  std::vector<std::uint32_t> v(5);
  for (int i = 0; i <= 4; ++i) v[i] = reduce_mod_p(cp.coeff(i), p);
  return v;
}

std::vector<std::uint32_t> tate_twist_mod(const std::vector<std::uint32_t>& quartic,
                                          const BigInt& norm, std::uint32_t p) {
  // x -> N(l) x
  std::vector<std::uint32_t> v = quartic;
  std::uint32_t n = reduce_mod_p(norm, p);
  std::uint64_t pw = 1;
  for (int i = 0; i <= 4; ++i) {
    v[i] = static_cast<std::uint32_t>(v[i] * pw % p);
    pw = pw * n % p;
  }
  return v;
}

}  // namespace

CongruenceSlotReport congruence_mod3(const SexticModel& A, const SexticModel& B,
                                     const PrimeSlotK& slot) {
  CongruenceSlotReport rep;
  rep.slot = slot;
  LPoly2 LA, LB;
  try {
    LA = euler_factor(A, slot);
    LB = euler_factor(B, slot);
  } catch (const domain_error& e) {
    rep.detail = std::string("skipped: ") + e.what();
    return rep;
  }
  rep.checked = true;
  auto lhs = tate_twist_mod(quartic_mod(LA, 3), slot.norm, 3);
  auto rhs = quartic_mod(LB, 3);
  rep.pass = lhs == rhs;
  rep.detail = rep.pass ? "match mod 3" : "mismatch mod 3";
  return rep;
}

CongruenceSlotReport congruence_mod_sqrt5(const SexticModel& A, const EllipticModel& B,
                                          const PrimeSlotK& slot) {
  CongruenceSlotReport rep;
  rep.slot = slot;
  LPoly2 LA;
  BigInt aB;
  try {
    LA = euler_factor(A, slot);
    auto field = Fq::make(slot.ell, slot.f_K);
    std::int64_t n = count_points_elliptic(B, *field);
    aB = slot.norm + 1 - n;
  } catch (const domain_error& e) {
    rep.detail = std::string("skipped: ") + e.what();
    return rep;
  }
  rep.checked = true;
  auto lhs = tate_twist_mod(quartic_mod(LA, 5), slot.norm, 5);
  // (x^2 - aB x + norm)^2 mod 5
  std::uint32_t a = reduce_mod_p(aB, 5), nn = reduce_mod_p(slot.norm, 5);
  std::vector<std::uint32_t> quad{nn, static_cast<std::uint32_t>((5 - a) % 5), 1};
  std::vector<std::uint32_t> rhs(5, 0);
  for (int i = 0; i <= 2; ++i)
    for (int j = 0; j <= 2; ++j) rhs[i + j] = (rhs[i + j] + quad[i] * quad[j]) % 5;
  rep.pass = lhs == rhs;
  rep.detail = rep.pass ? "match mod sqrt5" : "mismatch mod sqrt5";
  return rep;
}

std::vector<CongruenceSlotReport> congruence_check_mod3(const SexticModel& A,
                                                        const SexticModel& B,
                                                        const std::vector<PrimeSlotK>& slots) {
  std::vector<CongruenceSlotReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(congruence_mod3(A, B, s));
  return out;
}

std::vector<CongruenceSlotReport> congruence_check_mod_sqrt5(
    const SexticModel& A, const EllipticModel& B, const std::vector<PrimeSlotK>& slots) {
  std::vector<CongruenceSlotReport> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(congruence_mod_sqrt5(A, B, s));
  return out;
}

}  // namespace gfe
