#include "gfe/ghost.hpp"

#include <omp.h>

#include <algorithm>
#include <map>
#include <sstream>

namespace gfe {

BigRat GhostSolution::t0() const {
  // -a^q q^(s-u) r^(l-v) / c^r
  BigInt num = -pow_int(a, q) * pow_int(BigInt(q), s) * pow_int(BigInt(r), l);
  BigInt den = pow_int(c, r) * pow_int(BigInt(q), u) * pow_int(BigInt(r), v);
  return make_rat(num, den);
}

bool GhostSolution::verify() const {
  BigInt lhs = pow_int(BigInt(q), s) * pow_int(BigInt(r), l) * pow_int(a, q) +
               BigInt(sign) * pow_int(BigInt(2), two_exp) * pow_int(BigInt(q), m) *
                   pow_int(BigInt(r), n) +
               pow_int(BigInt(q), u) * pow_int(BigInt(r), v) * pow_int(c, r);
  if (lhs != 0) return false;
  if (a == 0 || c == 0) return false;
  if (gcd(a, BigInt(q * r)) != 1 || gcd(c, BigInt(q * r)) != 1) return false;
  if (std::min({s, m, u}) != 0 || std::min({l, n, v}) != 0) return false;
  return true;
}

std::string GhostSolution::to_string() const {
  std::ostringstream os;
  os << "(" << a.get_str() << ", " << c.get_str() << ", " << s << "," << l << "," << m << "," << n
     << "," << u << "," << v << ", " << (sign > 0 ? "+" : "-") << ")  t0 = "
     << rat_to_string(t0());
  return os.str();
}

namespace {

struct Collector {
  std::map<BigRat, GhostSolution> by_t0;

  void add(GhostSolution g) {
    if (!g.verify()) return;
    BigRat t = g.t0();
    auto it = by_t0.find(t);
    if (it == by_t0.end()) by_t0.emplace(std::move(t), std::move(g));
  }
};

// Solve q^u r^v c^r = R for (u, v, c) given the full right-hand side; the
// valuations are forced because gcd(c, qr) = 1.
std::optional<std::tuple<unsigned, unsigned, BigInt>> extract_c(const BigInt& R, unsigned q,
                                                                unsigned r, const SearchBox& box) {
  if (R == 0) return std::nullopt;
  BigInt rest = R;
  unsigned u = 0, v = 0;
  while (rest % q == 0) {
    rest /= q;
    if (++u > box.exp_bound) return std::nullopt;
  }
  while (rest % r == 0) {
    rest /= r;
    if (++v > box.exp_bound) return std::nullopt;
  }
  auto c = exact_root(rest, r);
  if (!c) return std::nullopt;
  if (*c == 0 || abs(*c) > box.c_bound) return std::nullopt;
  return std::make_tuple(u, v, *c);
}

struct PowerTables {
  std::vector<BigInt> q, r;
  BigInt c_r_bound;  // c_bound^r
  PowerTables(unsigned qv, unsigned rv, const SearchBox& box) {
    q.resize(box.exp_bound + 1);
    r.resize(box.exp_bound + 1);
    q[0] = 1;
    r[0] = 1;
    for (unsigned i = 1; i <= box.exp_bound; ++i) {
      q[i] = q[i - 1] * qv;
      r[i] = r[i - 1] * rv;
    }
    c_r_bound = pow_int(box.c_bound, rv);
  }
};

// indices i in [1, E] with powers[i] in [lo, hi]
template <typename F>
void powers_in_range(const std::vector<BigInt>& powers, const BigInt& lo, const BigInt& hi,
                     F&& f) {
  for (std::size_t i = 1; i < powers.size(); ++i) {
    if (powers[i] > hi) break;
    if (powers[i] >= lo) f(static_cast<unsigned>(i));
  }
}

// The 9 normalized exponent patterns. In any solution the minimum
// q-valuation of the three terms is attained twice (and equals 0), and the
// same holds on the r side, so two of (s, m, u) and two of (l, n, v) vanish.
// Patterns whose c-term carries no q, r powers bound the remaining term to a
// narrow window of size 2 c_bound^r, which prunes the double loops.
template <typename Emit>
void search_for_a(const BigInt& a, unsigned q, unsigned r, const SearchBox& box,
                  const PowerTables& pw, Emit&& emit) {
  const unsigned E = box.exp_bound;
  BigInt aq = pow_int(a, q);
  const BigInt& Cr = pw.c_r_bound;
  for (int sign : {1, -1}) {
    BigInt sg(sign);
    // s = m = 0, l = n = 0
    emit(a, 0u, 0u, 0u, 0u, sign, -(aq + sg));
    for (unsigned n = 1; n <= E; ++n)  // s = m = 0, l = 0 (v forced 0)
      emit(a, 0u, 0u, 0u, n, sign, -(aq + sg * pw.r[n]));
    for (unsigned l = 1; l <= E; ++l)  // s = m = 0, n = 0
      emit(a, 0u, l, 0u, 0u, sign, -(pw.r[l] * aq + sg));
    for (unsigned m = 1; m <= E; ++m)  // s = u = 0, l = n = 0
      emit(a, 0u, 0u, m, 0u, sign, -(aq + sg * pw.q[m]));
    // s = u = 0, l = v = 0: bare c^r, so sg * q^m r^n lies within c_bound^r
    // of -a^q
    {
      BigInt center = -sg * aq;
      BigInt lo = center - Cr, hi = center + Cr;
      if (hi >= 1) {
        if (lo < 1) lo = 1;
        for (unsigned m = 1; m <= E && pw.q[m] <= hi; ++m) {
          BigInt rlo = (lo + pw.q[m] - 1) / pw.q[m];
          BigInt rhi = hi / pw.q[m];
          powers_in_range(pw.r, rlo, rhi,
                          [&](unsigned n) { emit(a, 0u, 0u, m, n, sign, -(aq + sg * pw.q[m] * pw.r[n])); });
        }
      }
    }
    // s = u = 0, n = v = 0: bare c^r; sg * q^m near -(r^l a^q)
    for (unsigned l = 1; l <= E; ++l) {
      BigInt X = pw.r[l] * aq;
      BigInt center = -sg * X;
      BigInt lo = center - Cr, hi = center + Cr;
      if (hi < 1) continue;
      if (lo < 1) lo = 1;
      powers_in_range(pw.q, lo, hi,
                      [&](unsigned m) { emit(a, 0u, l, m, 0u, sign, -(X + sg * pw.q[m])); });
    }
    for (unsigned s = 1; s <= E; ++s)  // m = u = 0, l = n = 0
      emit(a, s, 0u, 0u, 0u, sign, -(pw.q[s] * aq + sg));
    // m = u = 0, l = v = 0: bare c^r; sg * r^n near -(q^s a^q)
    for (unsigned s = 1; s <= E; ++s) {
      BigInt X = pw.q[s] * aq;
      BigInt center = -sg * X;
      BigInt lo = center - Cr, hi = center + Cr;
      if (hi < 1) continue;
      if (lo < 1) lo = 1;
      powers_in_range(pw.r, lo, hi,
                      [&](unsigned n) { emit(a, s, 0u, 0u, n, sign, -(X + sg * pw.r[n])); });
    }
    // m = u = 0, n = v = 0: bare c^r; q^s r^l |a|^q <= c_bound^r + 1
    {
      BigInt cap = Cr + 1;
      BigInt absaq = abs(aq);
      for (unsigned s = 1; s <= E && pw.q[s] * absaq <= cap; ++s) {
        BigInt limit = cap / (pw.q[s] * absaq);
        for (unsigned l = 1; l <= E && pw.r[l] <= limit; ++l)
          emit(a, s, l, 0u, 0u, sign, -(pw.q[s] * pw.r[l] * aq + sg));
      }
    }
  }
}

std::vector<GhostSolution> collect(unsigned q, unsigned r, const SearchBox& box, bool allow_two,
                                   bool parallel) {
  if (q <= r || !is_probable_prime(BigInt(q)) ||
      (r != 2 && !is_probable_prime(BigInt(r))))
    throw domain_error("ghost_search: need primes q > r >= 2");
  // budget guard: the windowed pattern loops are ~ E per (a, sign); the
  // power-of-two variant scans an extra E^2
  BigInt work = BigInt(box.a_bound) * 200 * (box.exp_bound + 1) *
                (allow_two ? (box.exp_bound + 1) * (box.exp_bound + 1) : 1);
  if (work > BigInt("400000000000"))
    throw domain_error("ghost_search: box exceeds the configured search budget");

  long amax = box.a_bound.get_si();
  PowerTables pw(q, r, box);
  std::vector<Collector> partial;
  int nthreads = 1;
#pragma omp parallel if (parallel)
  {
#pragma omp single
    {
      nthreads = omp_get_num_threads();
      partial.resize(nthreads);
    }
  }
  if (partial.empty()) partial.resize(1);

#pragma omp parallel for schedule(dynamic, 8) if (parallel)
  for (long ai = 1; ai <= amax; ++ai) {
    int tid = omp_get_thread_num();
    for (long sa : {1L, -1L}) {
      BigInt a(ai * sa);
      if (gcd(a, BigInt(q * r)) != 1) continue;
      auto emit = [&](const BigInt& av, unsigned s, unsigned l, unsigned m, unsigned n, int sign,
                      const BigInt& R) {
        auto sol = extract_c(R, q, r, box);
        if (!sol) return;
        auto [u, v, c] = *sol;
        GhostSolution g;
        g.a = av;
        g.c = c;
        g.s = s;
        g.l = l;
        g.m = m;
        g.n = n;
        g.u = u;
        g.v = v;
        g.sign = sign;
        g.q = q;
        g.r = r;
        partial[tid].add(std::move(g));
      };
      search_for_a(a, q, r, box, pw, emit);
      if (allow_two) {
        // minus-family variant: a power of 2 may enter the middle term
        const unsigned E = box.exp_bound;
        BigInt aq = pow_int(a, q);
        for (int sign : {1, -1}) {
          for (unsigned w = 1; w <= E; ++w) {
            BigInt two_w = pow_int(BigInt(2), w);
            for (unsigned m = 0; m <= E; ++m)
              for (unsigned n = 0; n <= E; ++n) {
                BigInt mid = BigInt(sign) * two_w * pw.q[m] * pw.r[n];
                auto sol = extract_c(-(aq + mid), q, r, box);
                if (!sol) continue;
                auto [u, v, c] = *sol;
                GhostSolution g;
                g.a = a;
                g.c = c;
                g.m = m;
                g.n = n;
                g.u = u;
                g.v = v;
                g.sign = sign;
                g.q = q;
                g.r = r;
                g.two_exp = w;
                partial[tid].add(std::move(g));
              }
          }
        }
      }
    }
  }
  Collector merged;
  for (auto& pc : partial)
    for (auto& [t, g] : pc.by_t0) merged.add(g);
  std::vector<GhostSolution> out;
  out.reserve(merged.by_t0.size());
  for (auto& [t, g] : merged.by_t0) out.push_back(g);
  return out;
}

}  // namespace

std::vector<GhostSolution> ghost_search(unsigned q, unsigned r, const SearchBox& box,
                                        bool allow_two) {
  return collect(q, r, box, allow_two, true);
}

std::vector<GhostSolution> ghost_search_serial(unsigned q, unsigned r, const SearchBox& box,
                                               bool allow_two) {
  return collect(q, r, box, allow_two, false);
}

GhostClassification classify_ghost(const GhostSolution& g) {
  GhostClassification out;
  BigRat t = g.t0();
  if (g.r == 3 && (t == make_rat(-1, 8) || t == make_rat(9, 8))) {
    try {
      out.profile = catalan_cond(g.q, t);
      out.source = "catalan";
      return out;
    } catch (const domain_error&) {
      // excluded q: fall through to the tables
    }
  }
  if (g.r == 2 && (t == make_rat(1, 9) || t == make_rat(8, 9))) {
    out.profile = catalan_cond(g.q, t);
    out.source = "catalan";
    return out;
  }
  if (g.s == 0 && g.l == 0 && g.u == 0 && g.v == 0 && g.m == 0 && g.n == 0 && g.two_exp == 0 &&
      g.r != 2) {
    // genuine-solution shape with unit middle term: the standard tables
    // apply soundly (nonzero m, n put prime powers into the middle term that
    // the table hypotheses on b do not cover)
    try {
      auto [rm, rp] = cond_r_table(g.q, g.r, g.a, g.c);
      auto [qm, qp] = cond_q_table(g.q, g.r, g.a, g.c);
      out.profile.entries = {qp, rp};
      out.source = "tables";
      return out;
    } catch (const domain_error& e) {
      out.profile.classified = false;
      out.profile.note = e.what();
      out.source = "unclassified";
      return out;
    }
  }
  out.profile.classified = false;
  out.profile.note = "exponent pattern outside table coverage";
  out.source = "unclassified";
  return out;
}

std::vector<GhostSolution> example_catalog(unsigned q) {
  if (q <= 3) throw domain_error("example_catalog: q must be > 3");
  std::vector<GhostSolution> out;
  // (-1, -2, 0,0,0,2,0,0): (-1)^q + 3^2 + (-2)^3 = 0, t0 = -1/8
  GhostSolution g1{BigInt(-1), BigInt(-2), 0, 0, 0, 2, 0, 0, 1, q, 3};
  // (1, -2, 0,2,0,0,0,0): 3^2 * 1^q - 1 + (-2)^3 = 0, t0 = 9/8
  GhostSolution g2{BigInt(1), BigInt(-2), 0, 2, 0, 0, 0, 0, -1, q, 3};
  // Catalan pair for exponents (q, 2): t0 = 1/9 and 8/9
  GhostSolution g3{BigInt(-1), BigInt(3), 0, 0, 0, 3, 0, 0, -1, q, 2};
  GhostSolution g4{BigInt(-1), BigInt(3), 0, 3, 0, 0, 0, 0, -1, q, 2};
  for (auto& g : {g1, g2, g3, g4}) {
    if (!g.verify()) throw oracle_error("example_catalog: tuple fails its defining equation");
    out.push_back(g);
  }
  return out;
}

std::string ghost_tsv(const std::vector<GhostSolution>& sols) {
  std::ostringstream os;
  os << "t0_num\tt0_den\ta\tc\ts\tl\tm\tn\tu\tv\tsign\tvq\tvr\tclassification_source\n";
  for (auto& g : sols) {
    BigRat t = g.t0();
    GhostClassification cls = classify_ghost(g);
    std::string vq = "-", vr = "-";
    if (cls.profile.classified) {
      for (auto& e : cls.profile.entries) {
        std::ostringstream v;
        bool first = true;
        for (int x : e.values) {
          if (!first) v << ",";
          first = false;
          v << x;
        }
        if (e.place == "q" || e.place == "2") vq = v.str();
        if (e.place == "r" || e.place == "3") vr = v.str();
      }
    }
    os << BigInt(t.get_num()).get_str() << "\t" << BigInt(t.get_den()).get_str() << "\t"
       << g.a.get_str() << "\t" << g.c.get_str() << "\t" << g.s << "\t" << g.l << "\t" << g.m
       << "\t" << g.n << "\t" << g.u << "\t" << g.v << "\t" << (g.sign > 0 ? "+" : "-") << "\t"
       << vq << "\t" << vr << "\t" << cls.source << "\n";
  }
  return os.str();
}

}  // namespace gfe
