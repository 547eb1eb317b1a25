#include "gfe/tate.hpp"

namespace gfe {

namespace {

struct IntModel {
  BigInt a1, a2, a3, a4, a6;

  BigInt b2() const { return a1 * a1 + 4 * a2; }
  BigInt b4() const { return 2 * a4 + a1 * a3; }
  BigInt b6() const { return a3 * a3 + 4 * a6; }
  BigInt b8() const {
    return a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
  }
  BigInt c4() const { return b2() * b2() - 24 * b4(); }
  BigInt c6() const {
    BigInt B2 = b2();
    return -B2 * B2 * B2 + 36 * B2 * b4() - 216 * b6();
  }
  BigInt disc() const {
    BigInt B2 = b2(), B4 = b4(), B6 = b6(), B8 = b8();
    return -B2 * B2 * B8 - 8 * B4 * B4 * B4 - 27 * B6 * B6 + 9 * B2 * B4 * B6;
  }

  // x = x' + r, y = y' + s x' + t
  void translate(const BigInt& r, const BigInt& s, const BigInt& t) {
    BigInt A1 = a1, A2 = a2, A3 = a3, A4 = a4, A6 = a6;
    a1 = A1 + 2 * s;
    a2 = A2 - s * A1 + 3 * r - s * s;
    a3 = A3 + r * A1 + 2 * t;
    a4 = A4 - s * A3 + 2 * r * A2 - (t + r * s) * A1 + 3 * r * r - 2 * s * t;
    a6 = A6 + r * A4 + r * r * A2 + r * r * r - t * A3 - t * t - r * t * A1;
  }

  // x = p^2 x', y = p^3 y' (valid only when all resulting ai are integral)
  void rescale_down(const BigInt& p) {
    a1 /= p;
    a2 /= p * p;
    a3 /= p * p * p;
    a4 /= p * p * p * p;
    a6 /= p * p * p * p * p * p;
  }
};

long val_or_big(const BigInt& x, const BigInt& p) {
  long v = valuation(x, p);
  return v == kValInfinity ? 1000000 : v;
}

std::uint32_t mod_p(const BigInt& x, const BigInt& p) {
  BigInt r = x % p;
  if (r < 0) r += p;
  return static_cast<std::uint32_t>(r.get_ui());
}

BigInt inv2_mod(const BigInt& p, unsigned k) {
  // inverse of 2 modulo p^k, p odd
  return inv_mod(BigInt(2), pow_int(p, k));
}

// splits the multiplicative case by counting affine points of the reduced
// singular cubic: split nodal cubics have p - 1 affine points, nonsplit
// ones p + 1
bool split_by_count(const IntModel& m, const BigInt& pz) {
  std::uint32_t p = static_cast<std::uint32_t>(pz.get_ui());
  std::uint64_t count = 0;
  auto red = [&](const BigInt& x) { return mod_p(x, pz); };
  std::uint64_t A1 = red(m.a1), A2 = red(m.a2), A3 = red(m.a3), A4 = red(m.a4), A6 = red(m.a6);
  for (std::uint64_t x = 0; x < p; ++x)
    for (std::uint64_t y = 0; y < p; ++y) {
      std::uint64_t lhs = (y * y + A1 * x % p * y + A3 * y) % p;
      std::uint64_t rhs = (((x * x % p) * x) % p + A2 * x % p * x + A4 * x + A6) % p;
      if (lhs == rhs % p) ++count;
    }
  return count == p - 1;
}

// mod-p polynomial gcd of small-degree polynomials, coefficients low->high
using PVec = std::vector<std::uint32_t>;

long pdeg(const PVec& v) {
  long d = static_cast<long>(v.size()) - 1;
  while (d >= 0 && v[d] == 0) --d;
  return d;
}

PVec pmod_reduce(PVec a, const PVec& b, std::uint64_t p) {
  long db = pdeg(b);
  std::uint64_t lcb = b[db];
  std::uint64_t inv = 1, base = lcb, e = p - 2;
  while (e) {
    if (e & 1) inv = inv * base % p;
    base = base * base % p;
    e >>= 1;
  }
  for (long i = pdeg(a); i >= db; i = pdeg(a)) {
    std::uint64_t f = a[i] * inv % p;
    for (long j = 0; j <= db; ++j) {
      std::uint64_t sub = f * b[j] % p;
      a[i - db + j] = static_cast<std::uint32_t>((a[i - db + j] + p - sub) % p);
    }
  }
  return a;
}

PVec pgcd_small(PVec a, PVec b, std::uint64_t p) {
  while (pdeg(b) >= 0) {
    if (pdeg(a) < pdeg(b)) {
      std::swap(a, b);
      continue;
    }
    PVec r = pmod_reduce(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

LocalData tate_algorithm(const EllipticModel& e, const BigInt& p) {
  if (!is_probable_prime(p)) throw domain_error("tate_algorithm: p must be prime");
  // integral model
  BigInt u = 1;
  for (const BigRat* a : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6}) {
    BigInt d(a->get_den());
    u = u / gcd(u, d) * d;
  }
  IntModel m;
  auto scale = [&](const BigRat& a, unsigned k) {
    BigRat s = a * BigRat(pow_int(u, k));
    if (s.get_den() != 1) throw oracle_error("tate: integral scaling failed");
    return BigInt(s.get_num());
  };
  m.a1 = scale(e.a1, 1);
  m.a2 = scale(e.a2, 2);
  m.a3 = scale(e.a3, 3);
  m.a4 = scale(e.a4, 4);
  m.a6 = scale(e.a6, 6);
  if (m.disc() == 0) throw domain_error("tate_algorithm: singular curve (disc = 0)");

  const bool p2 = (p == 2), p3 = (p == 3);
  LocalData out;

  while (true) {
    long n = val_or_big(m.disc(), p);
    if (n == 0) {
      out.kodaira = "I0";
      out.f_p = 0;
      out.v_disc = 0;
      out.reduction = ReductionType::good;
      return out;
    }
    // Step 2: multiplicative when v(c4) = 0
    if (val_or_big(m.c4(), p) == 0) {
      out.kodaira = "I" + std::to_string(n);
      out.n = n;
      out.f_p = 1;
      out.v_disc = n;
      bool split;
      if (p <= 1000) {
        split = split_by_count(m, p);
      } else {
        split = legendre(-m.c6(), p) == 1;
      }
      out.reduction =
          split ? ReductionType::multiplicative_split : ReductionType::multiplicative_nonsplit;
      return out;
    }
    out.reduction = ReductionType::additive;

    // move the singular point to the origin mod p
    {
      BigInt r, t;
      if (p2 || p3) {
        bool found = false;
        std::uint32_t pp = static_cast<std::uint32_t>(p.get_ui());
        for (std::uint32_t x0 = 0; x0 < pp && !found; ++x0)
          for (std::uint32_t y0 = 0; y0 < pp && !found; ++y0) {
            // F = y^2 + a1 x y + a3 y - x^3 - a2 x^2 - a4 x - a6
            BigInt F = BigInt(y0) * y0 + m.a1 * x0 * y0 + m.a3 * y0 - BigInt(x0) * x0 * x0 -
                       m.a2 * x0 * x0 - m.a4 * x0 - m.a6;
            BigInt Fx = m.a1 * y0 - 3 * BigInt(x0) * x0 - 2 * m.a2 * x0 - m.a4;
            BigInt Fy = 2 * BigInt(y0) + m.a1 * x0 + m.a3;
            if (F % p == 0 && Fx % p == 0 && Fy % p == 0) {
              r = x0;
              t = y0;
              found = true;
            }
          }
        if (!found) throw oracle_error("tate: singular point not found");
      } else {
        // odd p: the completed-square cubic 4x^3 + b2 x^2 + 2 b4 x + b6 has a
        // repeated root x0; y0 = -(a1 x0 + a3)/2
        std::uint64_t pp = p.get_ui();
        PVec cubic{mod_p(m.b6(), p), mod_p(2 * m.b4(), p), mod_p(m.b2(), p), mod_p(BigInt(4), p)};
        PVec deriv{mod_p(2 * m.b4(), p), mod_p(2 * m.b2(), p), mod_p(BigInt(12), p)};
        PVec g = pgcd_small(cubic, deriv, pp);
        BigInt r0;
        if (pdeg(g) == 1)
          r0 = mod_p(BigInt(pp - g[0]) * inv_mod(BigInt(g[1]), p), p);
        else if (pdeg(g) == 2)
          r0 = mod_p(BigInt(pp - g[1]) * inv_mod(2 * BigInt(g[2]), p), p);
        else
          throw oracle_error("tate: repeated root not found");
        BigInt y0 = ((-(m.a1 * r0 + m.a3)) * inv2_mod(p, 1)) % p;
        if (y0 < 0) y0 += p;
        r = r0;
        t = y0;
      }
      m.translate(r, BigInt(0), t);
    }

    // Step 3
    if (val_or_big(m.a6, p) < 2) {
      out.kodaira = "II";
      out.f_p = n;
      out.v_disc = n;
      return out;
    }
    // Step 4
    if (val_or_big(m.b8(), p) < 3) {
      out.kodaira = "III";
      out.f_p = n - 1;
      out.v_disc = n;
      return out;
    }
    // Step 5
    if (val_or_big(m.b6(), p) < 3) {
      out.kodaira = "IV";
      out.f_p = n - 2;
      out.v_disc = n;
      return out;
    }

    // prep for step 6: reach v(a1)>=1, v(a2)>=1, v(a3)>=2, v(a4)>=2, v(a6)>=3
    {
      bool done = false;
      if (p2 || p3) {
        std::uint32_t pp = static_cast<std::uint32_t>(p.get_ui());
        for (std::uint32_t s = 0; s < pp && !done; ++s)
          for (std::uint32_t t = 0; t < pp * pp && !done; ++t) {
            IntModel trial = m;
            trial.translate(BigInt(0), BigInt(s), BigInt(t));
            if (val_or_big(trial.a1, p) >= 1 && val_or_big(trial.a2, p) >= 1 &&
                val_or_big(trial.a3, p) >= 2 && val_or_big(trial.a4, p) >= 2 &&
                val_or_big(trial.a6, p) >= 3) {
              m = trial;
              done = true;
            }
          }
      } else {
        BigInt s = ((-m.a1) * inv2_mod(p, 1)) % p;
        if (s < 0) s += p;
        m.translate(BigInt(0), s, BigInt(0));
        BigInt p2v = p * p;
        BigInt t = ((-m.a3) * inv2_mod(p, 2)) % p2v;
        if (t < 0) t += p2v;
        m.translate(BigInt(0), BigInt(0), t);
        done = val_or_big(m.a1, p) >= 1 && val_or_big(m.a2, p) >= 1 &&
               val_or_big(m.a3, p) >= 2 && val_or_big(m.a4, p) >= 2 && val_or_big(m.a6, p) >= 3;
      }
      if (!done) throw oracle_error("tate: step-6 normalization failed");
    }

    // Step 6: cubic P(T) = T^3 + a2,1 T^2 + a4,2 T + a6,3 over F_p
    std::uint64_t pp = p.get_ui();
    PVec P{mod_p(m.a6 / (p * p * p), p), mod_p(m.a4 / (p * p), p), mod_p(m.a2 / p, p), 1};
    PVec Pd{P[1], static_cast<std::uint32_t>(2 * static_cast<std::uint64_t>(P[2]) % pp),
            static_cast<std::uint32_t>(3 % pp)};
    PVec g = pgcd_small(P, Pd, pp);
    long dg = pdeg(g);
    if (dg == 0) {
      out.kodaira = "I0*";
      out.f_p = n - 4;
      out.v_disc = n;
      return out;
    }

    // classify the repeated root: in characteristic 2 a degree-2 gcd occurs
    // for both double and triple roots, so compare against (T - a)^3 directly
    bool triple = false;
    std::uint32_t rep_root = 0;
    if (dg == 1) {
      rep_root = static_cast<std::uint32_t>(
          mod_p(BigInt(pp - g[0]) * inv_mod(BigInt(g[1]), p), p));
    } else if (dg == 2) {
      if (p2) {
        rep_root = g[0];  // (T + a)^2 = T^2 + a^2 and squaring fixes F_2
        std::uint32_t b3 = rep_root, c3 = static_cast<std::uint32_t>(
                                        (static_cast<std::uint64_t>(rep_root) * rep_root) % 2);
        std::uint32_t d3 = static_cast<std::uint32_t>(
            (static_cast<std::uint64_t>(c3) * rep_root) % 2);
        triple = (P[2] == b3 && P[1] == c3 && P[0] == d3);
      } else {
        rep_root = static_cast<std::uint32_t>(
            mod_p(BigInt(pp - g[1]) * inv_mod(2 * BigInt(g[2]), p), p));
        triple = true;
      }
    } else {
      // P' vanished identically (p = 3, P = T^3 + d): triple root
      triple = true;
      rep_root = static_cast<std::uint32_t>(mod_p(BigInt(pp - P[0]), p));
    }

    if (!triple) {
      // double root: translate it to 0 and run the In* subloop
      m.translate(p * BigInt(rep_root), BigInt(0), BigInt(0));
      // invariants here: v(a2) = 1, v(a3) >= 2, v(a4) >= 3, v(a6) >= 4
      long mstar = 1;
      long k = 2;
      while (true) {
        // Y-quadratic Y^2 + a3,k Y - a6,2k
        BigInt a3k = m.a3 / pow_int(p, k);
        BigInt a62k = m.a6 / pow_int(p, 2 * k);
        bool sep;
        if (p2)
          sep = mod_p(a3k, p) != 0;
        else
          sep = mod_p(a3k * a3k + 4 * a62k, p) != 0;
        if (sep) {
          mstar = 2 * k - 3;
          break;
        }
        // translate y by p^k * Y0
        BigInt y0;
        if (p2)
          y0 = mod_p(a62k, p);
        else
          y0 = mod_p((-a3k) * inv2_mod(p, 1), p);
        m.translate(BigInt(0), BigInt(0), pow_int(p, k) * y0);
        // X-quadratic a2,1 X^2 + a4,k+1 X + a6,2k+1
        BigInt c2 = m.a2 / p;
        BigInt ck = m.a4 / pow_int(p, k + 1);
        BigInt c0 = m.a6 / pow_int(p, 2 * k + 1);
        if (p2)
          sep = mod_p(ck, p) != 0;
        else
          sep = mod_p(ck * ck - 4 * c2 * c0, p) != 0;
        if (sep) {
          mstar = 2 * k - 2;
          break;
        }
        BigInt x0;
        if (p2)
          x0 = mod_p(c0 * c2, p);  // c2 is a unit; root of X^2 + (c0/c2)
        else
          x0 = mod_p((-ck) * inv_mod(2 * c2 % p, p), p);
        m.translate(pow_int(p, k) * x0, BigInt(0), BigInt(0));
        ++k;
      }
      out.kodaira = "I" + std::to_string(mstar) + "*";
      out.n = mstar;
      out.f_p = n - 4 - mstar;
      out.v_disc = n;
      return out;
    }

    // triple root: translate it to 0
    m.translate(p * BigInt(rep_root), BigInt(0), BigInt(0));

    // Step 8: Y^2 + a3,2 Y - a6,4
    {
      BigInt a32 = m.a3 / (p * p);
      BigInt a64 = m.a6 / pow_int(p, 4);
      bool sep;
      if (p2)
        sep = mod_p(a32, p) != 0;
      else
        sep = mod_p(a32 * a32 + 4 * a64, p) != 0;
      if (sep) {
        out.kodaira = "IV*";
        out.f_p = n - 6;
        out.v_disc = n;
        return out;
      }
      BigInt y0;
      if (p2)
        y0 = mod_p(a64, p);
      else
        y0 = mod_p((-a32) * inv2_mod(p, 1), p);
      m.translate(BigInt(0), BigInt(0), p * p * y0);
    }

    // Step 9
    if (val_or_big(m.a4, p) < 4) {
      out.kodaira = "III*";
      out.f_p = n - 7;
      out.v_disc = n;
      return out;
    }
    // Step 10
    if (val_or_big(m.a6, p) < 6) {
      out.kodaira = "II*";
      out.f_p = n - 8;
      out.v_disc = n;
      return out;
    }
    // non-minimal: rescale and restart
    m.rescale_down(p);
  }
}

BigInt conductor_global(const EllipticModel& e) {
  // integral model for the discriminant support
  BigInt u = 1;
  for (const BigRat* a : {&e.a1, &e.a2, &e.a3, &e.a4, &e.a6}) {
    BigInt d(a->get_den());
    u = u / gcd(u, d) * d;
  }
  EllipticModel scaled{e.a1 * BigRat(u), e.a2 * BigRat(pow_int(u, 2)), e.a3 * BigRat(pow_int(u, 3)),
                       e.a4 * BigRat(pow_int(u, 4)), e.a6 * BigRat(pow_int(u, 6)), e.name};
  BigRat drat = scaled.discriminant();
  if (drat == 0) throw domain_error("conductor_global: singular curve");
  BigInt d(drat.get_num());
  BigInt cond = 1;
  for (auto& [q, ex] : factorize(d)) {
    LocalData ld = tate_algorithm(e, q);
    cond *= pow_int(q, static_cast<unsigned long>(ld.f_p));
  }
  return cond;
}

}  // namespace gfe
