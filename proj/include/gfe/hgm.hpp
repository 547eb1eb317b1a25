#pragma once

#include <complex>
#include <memory>
#include <set>

#include "gfe/cyclotomic.hpp"
#include "gfe/fq.hpp"
#include "gfe/quadratic.hpp"
#include "gfe/slots.hpp"

namespace gfe {

// Parameters ((a,b),(c,d)) of a rank-2 hypergeometric family; all
// denominators divide N and N is their least common denominator.
struct HGMParams {
  BigRat a, b, c, d;
  unsigned N = 0;

  HGMParams(BigRat a_, BigRat b_, BigRat c_, BigRat d_);
  // the (q,r) family: ((1/q, -1/q), (1/r, -1/r)), N = qr
  static HGMParams signature(unsigned q, unsigned r);
  bool generic() const;  // none of a-c, a-d, b-c, b-d integral
};

// chi_lambda exponent of x: the k in Z/N with x^((q-1)/N) equal to the
// canonical embedded N-th root raised to k; nullopt encodes chi(0) = 0.
std::optional<long> chi_lambda(const Fq& field, std::uint32_t x);

// Gauss sum g(psi, omega0^j) for the standard additive character
// psi(x) = exp(2 pi i Tr(x)/p) and omega0 the character dual to the
// field generator. Direct O(q) evaluation.
std::complex<double> gauss_sum(const Fq& field, long j);

// All Gauss sums at once (a DFT of psi along the generator ordering).
std::vector<std::complex<double>> gauss_sum_table(const Fq& field);

// Exact Jacobi sum J(chi^i, chi^j) in Z[zeta_N].
CycInt jacobi_sum(const Fq& field, long i, long j);

// A recognized weight-2 Frobenius trace at a prime lambda of Q(zeta_N).
// The value is one member of an unordered conjugate pair {value, conj}.
struct TraceValue {
  KElt value;
  std::uint32_t ell = 0;
  std::uint32_t factor_index = 0;
  BigInt lambda_norm;  // ell^{f_F}
  double raw_re = 0.0, raw_im = 0.0;
};

struct HypOptions {
  BigInt field_budget = 1000000;  // refuse residue fields above this size
  double tolerance = 1e-4;        // lattice-recognition tolerance
};

// The finite hypergeometric trace at lambda = (ell, factor_index) and
// residue t0 in F_ell \ {0,1}, multiplied by N(lambda) (weight-2
// normalization) and recognized exactly in (1/2)Z[sqrt5].
TraceValue hyp_trace(const HGMParams& params, std::uint32_t ell, std::uint32_t factor_index,
                     std::uint32_t t0, const HypOptions& opt = {});

// Same but with a prebuilt field and Gauss table (for sweeps).
TraceValue hyp_trace_with(const HGMParams& params, const Fq& field,
                          const std::vector<std::complex<double>>& gauss, std::uint32_t t0,
                          const HypOptions& opt = {});

// Weight-2 trace of Frobenius of the degenerate specialization at 0:
// exact value in Z[zeta_N] (Jacobi-sum formula).
CycInt cm_trace(const HGMParams& params, const Fq& field);

// Value sets of the two degenerate trace formulas at ell (weight-2,
// t0-unit scan over the prime field), as exact values and as minimal
// polynomials. Sizes are bounded by 5 (point 0) and 3 (point infinity).
struct DegenerateValues {
  std::vector<CycInt> values;
  std::vector<ZPoly> min_polys;              // deduplicated, sorted
  std::vector<std::pair<KElt, KElt>> pairs;  // conjugate pairs in K
};
DegenerateValues degenerate0(std::uint32_t ell, std::uint32_t factor_index = 0);
DegenerateValues degenerate_inf(std::uint32_t ell, std::uint32_t factor_index = 0);

// Lift a Frobenius trace through a degree-d residue extension, d in {1,2,4}:
// Newton recursion on the two eigenvalues with product q.
KElt lift_trace(const KElt& a, const BigInt& q, unsigned d);

// Weil bound check: both real embeddings bounded by 2 sqrt(norm).
bool weil_ok(const KElt& a, const BigInt& norm);

// min poly of a conjugate pair (monic, degree 1 for rational values):
// x^2 - trace*x + norm or x - a.
ZPoly pair_min_poly(const KElt& a);

}  // namespace gfe
