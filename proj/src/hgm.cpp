#include "gfe/hgm.hpp"

#include <fftw3.h>

#include <algorithm>
#include <cmath>

namespace gfe {

namespace {

long lcm_den(const BigRat& x, long acc) {
  BigInt d(x.get_den());
  BigInt l = acc / gcd(BigInt(acc), d) * d;
  return l.get_si();
}

// exponent m with chi^m = the character x -> chi(x)^{rN} attached to a
// parameter r (denominator dividing N): m = r*N as an integer mod N
long param_exponent(const BigRat& r, unsigned N) {
  BigRat m = r * BigRat(N);
  if (m.get_den() != 1) throw domain_error("HGM parameter denominator does not divide N");
  BigInt v = m.get_num() % N;
  if (v < 0) v += N;
  return v.get_si();
}

}  // namespace

HGMParams::HGMParams(BigRat a_, BigRat b_, BigRat c_, BigRat d_)
    : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {
  long l = 1;
  for (auto* x : {&a, &b, &c, &d}) l = lcm_den(*x, l);
  if (l <= 1) throw domain_error("HGMParams: parameters must be non-integral");
  N = static_cast<unsigned>(l);
}

HGMParams HGMParams::signature(unsigned q, unsigned r) {
  return HGMParams(make_rat(1, q), make_rat(-1, q), make_rat(1, r), make_rat(-1, r));
}

bool HGMParams::generic() const {
  for (const BigRat* x : {&a, &b})
    for (const BigRat* y : {&c, &d}) {
      BigRat diff = *x - *y;
      if (diff.get_den() == 1) return false;
    }
  return true;
}

std::optional<long> chi_lambda(const Fq& field, std::uint32_t x) {
  long k = field.chi_log(x);
  if (k < 0) return std::nullopt;
  return k;
}

std::complex<double> gauss_sum(const Fq& field, long j) {
  const double two_pi = 6.283185307179586476925;
  std::uint32_t q = field.q();
  long jj = ((j % static_cast<long>(q - 1)) + (q - 1)) % (q - 1);
  std::complex<double> s(0, 0);
  std::uint32_t x = 1;
  for (std::uint32_t e = 0; e < q - 1; ++e) {
    x = field.pow(field.generator(), e);
    double arg_add = two_pi * field.trace_to_prime_field(x) / field.p();
    double arg_mul = two_pi * static_cast<double>((static_cast<std::uint64_t>(jj) * e) % (q - 1)) /
                     (q - 1);
    s += std::complex<double>(std::cos(arg_add + arg_mul), std::sin(arg_add + arg_mul));
  }
  return s;
}

std::vector<std::complex<double>> gauss_sum_table(const Fq& field) {
  const double two_pi = 6.283185307179586476925;
  std::uint32_t q = field.q();
  std::uint32_t n = q - 1;
  // G[j] = sum_e psi(g^e) exp(2 pi i j e / n): a forward DFT with e^{+i...}
  // convention, i.e. FFTW_BACKWARD applied to the psi sequence.
  std::vector<std::complex<double>> in(n), out(n);
  for (std::uint32_t e = 0; e < n; ++e) {
    std::uint32_t x = field.pow(field.generator(), e);
    double arg = two_pi * field.trace_to_prime_field(x) / field.p();
    in[e] = {std::cos(arg), std::sin(arg)};
  }
  fftw_plan plan = fftw_plan_dft_1d(static_cast<int>(n), reinterpret_cast<fftw_complex*>(in.data()),
                                    reinterpret_cast<fftw_complex*>(out.data()), FFTW_BACKWARD,
                                    FFTW_ESTIMATE);
  fftw_execute(plan);
  fftw_destroy_plan(plan);
  return out;
}

namespace {

struct Recognized {
  KElt value;
  bool ok = false;
};

// nearest element of (1/2)Z[sqrt5] within tol, subject to the Weil box for
// the given norm; requires a unique candidate
Recognized recognize_half_integer(double x, const BigInt& norm, double tol) {
  const double s5 = 2.2360679774997896964;
  double bound = 4.0 * std::sqrt(norm.get_d()) + 1.0;
  long vmax = static_cast<long>(bound / s5) + 2;
  Recognized best;
  int hits = 0;
  for (long v = -vmax; v <= vmax; ++v) {
    double u_real = 2.0 * x - v * s5;
    long u = std::lround(u_real);
    // match parity of v
    if (((u % 2) + 2) % 2 != ((v % 2) + 2) % 2) {
      long up = u + 1, um = u - 1;
      u = (std::abs(up - u_real) < std::abs(um - u_real)) ? up : um;
    }
    double approx = (u + v * s5) / 2.0;
    if (std::abs(approx - x) > tol) continue;
    double conj = (u - v * s5) / 2.0;
    if (std::abs(conj) > bound || std::abs(approx) > bound) continue;
    best.value = KElt(BigInt(u), BigInt(v));
    ++hits;
  }
  best.ok = (hits == 1);
  return best;
}

}  // namespace

bool weil_ok(const KElt& a, const BigInt& norm) {
  // integer comparison after squaring: (u +- v sqrt5)/2 bounded by 2 sqrt(norm)
  // <=> (u +- v sqrt5)^2 <= 16 norm with cross terms handled exactly:
  // check u^2 + 5 v^2 + |2uv| sqrt5 <= 16 norm via squaring once more.
  BigInt u = a.u(), v = a.v();
  BigInt lhs_base = u * u + 5 * v * v;
  BigInt cross = 2 * u * v;
  if (cross < 0) cross = -cross;
  BigInt rhs = 16 * norm;
  // need lhs_base + cross*sqrt5 <= rhs i.e. cross*sqrt5 <= rhs - lhs_base
  BigInt margin = rhs - lhs_base;
  if (margin < 0) return false;
  return 5 * cross * cross <= margin * margin;
}

ZPoly pair_min_poly(const KElt& a) {
  return ZPoly(a.min_poly());
}

TraceValue hyp_trace_with(const HGMParams& params, const Fq& field,
                          const std::vector<std::complex<double>>& gauss, std::uint32_t t0,
                          const HypOptions& opt) {
  const double two_pi = 6.283185307179586476925;
  std::uint32_t q = field.q();
  std::uint32_t n = q - 1;
  std::uint32_t ell = field.p();
  std::uint32_t t = t0 % ell;
  if (t == 0 || t == 1)
    throw domain_error("hyp_trace: t0 must avoid 0 and 1 in the residue field");
  unsigned N = field.N();
  if (N != params.N) throw domain_error("hyp_trace: field level differs from parameter level");
  std::uint64_t step = n / N;
  long mA = param_exponent(-params.a, N), mB = param_exponent(-params.b, N);
  long mC = param_exponent(params.c, N), mD = param_exponent(params.d, N);
  std::uint64_t iA = mA * step, iB = mB * step, iC = mC * step, iD = mD * step;
  std::uint32_t lt = field.dlog(field.from_prime_field(t));

  std::complex<double> den =
      gauss[iA % n] * gauss[iC % n] * gauss[iB % n] * gauss[iD % n];
  if (std::abs(den) < 1e-9) throw domain_error("hyp_trace: degenerate parameter characters");

  // fixed-size blocks summed in index order: the result does not depend on
  // the thread count
  constexpr std::uint32_t kBlock = 4096;
  std::uint32_t nblocks = (n + kBlock - 1) / kBlock;
  std::vector<std::complex<double>> partial(nblocks, {0.0, 0.0});
#pragma omp parallel for schedule(static)
  for (long b = 0; b < static_cast<long>(nblocks); ++b) {
    std::complex<double> acc(0, 0);
    std::uint32_t lo = static_cast<std::uint32_t>(b) * kBlock;
    std::uint32_t hi = std::min(n, lo + kBlock);
    for (std::uint32_t k = lo; k < hi; ++k) {
      std::complex<double> num = gauss[(iA + k) % n] * gauss[(iC + n - k) % n] *
                                 gauss[(iB + k) % n] * gauss[(iD + n - k) % n];
      double arg = two_pi * static_cast<double>((static_cast<std::uint64_t>(k) * lt) % n) / n;
      acc += num * std::complex<double>(std::cos(arg), std::sin(arg));
    }
    partial[b] = acc;
  }
  std::complex<double> sum(0, 0);
  for (auto& p : partial) sum += p;
  std::complex<double> H = sum / den / (1.0 - static_cast<double>(q));
  std::complex<double> normalized = H * static_cast<double>(q);

  TraceValue tv;
  tv.ell = ell;
  tv.factor_index = field.factor_index();
  tv.lambda_norm = BigInt(q);
  tv.raw_re = normalized.real();
  tv.raw_im = normalized.imag();
  if (std::abs(normalized.imag()) > opt.tolerance)
    throw oracle_error("hyp_trace: non-real normalized value " + std::to_string(tv.raw_re) + "+" +
                       std::to_string(tv.raw_im) + "i");
  Recognized rec = recognize_half_integer(normalized.real(), tv.lambda_norm, opt.tolerance);
  if (!rec.ok)
    throw oracle_error("hyp_trace: recognition failed for raw value " +
                       std::to_string(tv.raw_re));
  if (!weil_ok(rec.value, tv.lambda_norm))
    throw oracle_error("hyp_trace: recognized value violates the Weil bound");
  tv.value = rec.value;
  return tv;
}

TraceValue hyp_trace(const HGMParams& params, std::uint32_t ell, std::uint32_t factor_index,
                     std::uint32_t t0, const HypOptions& opt) {
  if (params.N % ell == 0) throw domain_error("hyp_trace: ell must not divide N");
  std::uint32_t f = mult_order(ell, params.N);
  BigInt qsize = pow_int(BigInt(ell), f);
  if (qsize > opt.field_budget)
    throw domain_error("hyp_trace: residue field exceeds the precision budget");
  auto field = Fq::make_cyclotomic(ell, params.N, factor_index);
  auto gauss = gauss_sum_table(*field);
  return hyp_trace_with(params, *field, gauss, t0, opt);
}

CycInt cm_trace(const HGMParams& params, const Fq& field) {
  unsigned N = params.N;
  if (field.N() != N) throw domain_error("cm_trace: field level differs from parameter level");
  if (!params.generic()) throw domain_error("cm_trace: parameters are not generic");
  auto integral = [](const BigRat& r) { return r.get_den() == 1; };
  if (!integral(params.a + params.b)) throw domain_error("cm_trace: a+b is not an integer");
  if (!integral(params.c + params.d)) throw domain_error("cm_trace: c+d is not an integer");
  if (integral(params.c - params.d)) throw domain_error("cm_trace: c-d must not be an integer");

  long A1 = param_exponent(params.d - params.b, N);
  long B1 = param_exponent(params.b - params.c, N);
  long A2 = param_exponent(params.d - params.c, N);
  long B2 = param_exponent(params.a - params.d, N);
  CycInt J1 = jacobi_sum(field, A1, B1);
  CycInt J2 = jacobi_sum(field, A2, B2);

  std::uint32_t q = field.q();
  long chi_m1 = *chi_lambda(field, field.from_prime_field(field.p() - 1));
  // chi(-1)^{(d-b)(N(lambda)-1)}
  BigRat e1r = (params.d - params.b) * BigRat(q - 1);
  if (e1r.get_den() != 1) throw oracle_error("cm_trace: exponent (d-b)(N-1) not integral");
  BigInt e1 = ((BigInt(e1r.get_num()) % N) + N) % N;
  long pref1 = static_cast<long>((chi_m1 * e1.get_si()) % N);
  // chi(-1)^{(b-c)N}
  long e2 = param_exponent(params.b - params.c, N);
  long pref2 = static_cast<long>((static_cast<long long>(chi_m1) * e2) % N);

  // weight-2: the formula carries N(lambda)^eps; for eps = -1 multiplying by
  // N(lambda) leaves the bare Jacobi-sum combination, already an algebraic
  // integer.
  bool eps_minus1 = params.a.get_den() != 1 && params.c.get_den() != 1;
  CycInt inner = J1 + J2.mul_zeta_power(pref2);
  CycInt result = -(inner.mul_zeta_power(pref1));
  if (!eps_minus1) {
    // eps = 0: weight-2 normalization multiplies by N(lambda)
    result = result * CycInt::from_int(N, BigInt(q));
  }
  return result;
}

CycInt jacobi_sum(const Fq& field, long i, long j) {
  if (field.N() == 0) throw domain_error("jacobi_sum: needs a cyclotomic field");
  unsigned N = field.N();
  std::uint32_t q = field.q();
  // accumulate counts of zeta exponents, then build the cyclotomic integer
  std::vector<long> counts(N, 0);
  for (std::uint32_t x = 2; x < q; ++x) {  // x != 0, 1
    std::uint32_t one_minus = field.sub(field.from_prime_field(1), x);
    long kx = field.chi_log(x);
    long ky = field.chi_log(one_minus);
    long e = ((i * kx + j * ky) % static_cast<long>(N) + N) % N;
    counts[e]++;
  }
  // x = ... note x runs over all field elements except 0 and 1; encoded
  // values 0 and 1 are exactly those elements
  CycInt acc(N);
  for (unsigned e = 0; e < N; ++e) {
    if (counts[e] == 0) continue;
    acc = acc + CycInt::zeta_power(N, e) * CycInt::from_int(N, BigInt(counts[e]));
  }
  return acc;
}

namespace {

DegenerateValues degenerate_common(std::uint32_t ell, std::uint32_t factor_index, bool at_zero) {
  if (ell == 3 || ell == 5) throw domain_error("degenerate: ell must not divide 15");
  auto field = Fq::make_cyclotomic(ell, 15, factor_index);
  CycInt Ja = at_zero ? jacobi_sum(*field, 2, -8) : jacobi_sum(*field, 2, 8);
  CycInt Jb = at_zero ? jacobi_sum(*field, -6, 8) : jacobi_sum(*field, 10, -8);
  long tw = at_zero ? 3 : 5;
  DegenerateValues out;
  std::set<std::vector<BigInt>> seen;
  for (std::uint32_t t = 1; t < ell; ++t) {
    long k = field->chi_log(field->from_prime_field(t));
    CycInt v = -(Ja.mul_zeta_power(-tw * k) + Jb.mul_zeta_power(tw * k));
    if (seen.insert(v.coeffs()).second) out.values.push_back(v);
  }
  std::set<std::vector<BigInt>> polys;
  for (auto& v : out.values) {
    ZPoly mp = v.min_poly_over_Q();
    if (polys.insert(mp.coeffs()).second) {
      out.min_polys.push_back(mp);
      auto pair = v.as_K_pair();
      if (!pair)
        throw oracle_error("degenerate: value does not lie in Q(sqrt5)");
      out.pairs.push_back(*pair);
    }
  }
  // sort polys (and pairs in step) for deterministic output
  std::vector<std::size_t> idx(out.min_polys.size());
  for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
  std::sort(idx.begin(), idx.end(), [&](std::size_t x, std::size_t y) {
    return out.min_polys[x].coeffs() < out.min_polys[y].coeffs();
  });
  DegenerateValues sorted;
  sorted.values = out.values;
  for (std::size_t i : idx) {
    sorted.min_polys.push_back(out.min_polys[i]);
    sorted.pairs.push_back(out.pairs[i]);
  }
  std::size_t cap = at_zero ? 5 : 3;
  if (sorted.min_polys.size() > cap)
    throw oracle_error("degenerate: more distinct values than the character order allows");
  return sorted;
}

}  // namespace

DegenerateValues degenerate0(std::uint32_t ell, std::uint32_t factor_index) {
  return degenerate_common(ell, factor_index, true);
}

DegenerateValues degenerate_inf(std::uint32_t ell, std::uint32_t factor_index) {
  return degenerate_common(ell, factor_index, false);
}

KElt lift_trace(const KElt& a, const BigInt& q, unsigned d) {
  if (d != 1 && d != 2 && d != 4) throw domain_error("lift_trace: d must be 1, 2 or 4");
  if (d == 1) return a;
  KElt a2 = a * a - KElt::from_int(2 * q);
  if (d == 2) return a2;
  return a2 * a2 - KElt::from_int(2 * q * q);
}

}  // namespace gfe
