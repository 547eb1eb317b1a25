#pragma once

#include <set>

#include "gfe/curves.hpp"
#include "gfe/tate.hpp"

namespace gfe {

struct IgusaVec {
  BigRat J2, J4, J6, J8, J10;
};

// Classical Igusa invariants of y^2 = f(x), deg f in {5, 6}, normalized so
// that they agree with the weighted invariants of the binary form 4*f.
IgusaVec igusa_J(const QPoly& sextic);

enum class ReductionClass {
  potentially_good_smooth,      // condition (I)
  potentially_good_degenerate,  // condition (V): split degenerate special fiber
  potentially_multiplicative,
  undetermined,
};
std::string to_string(ReductionClass c);

struct LiuResult {
  ReductionClass cls = ReductionClass::undetermined;
  std::string witness;
};

// Liu's criterion at ell in {3, 5}: potentially good iff (I) or (V) holds.
LiuResult liu_classify(const IgusaVec& J, unsigned ell);

struct Reduction53 {
  LiuResult at3, at5;
  bool guard_17t_checked = false;  // v3(17 t0 + 108) <= 3
  bool guard_17t_holds = false;
};
Reduction53 reduction_53(const BigRat& t0);

// v_r(d(a,c)) capped at 2, for the degree-r polynomial
// F(x) = c^r f_r(x/c) + 2 c^r + 4 a^q and d = F(-(2 c^r + 4 a^q)).
// Verdict: 1 -> F irreducible over Q_r, >= 2 -> reducible.
// Requires r not dividing a*b (b-divisibility derived from a^q + c^r).
long d_valuation(const BigInt& a, const BigInt& c, unsigned q, unsigned r);
// the q-side variant (roles of (a, q) and (c, r) exchanged)
long d_valuation_qside(const BigInt& a, const BigInt& c, unsigned q, unsigned r);

// Conductor-exponent predictor for the (5, p, 3) signature. b-divisibility
// flags are derived from a^5 + c^3.
struct Eps53 {
  int eps3 = 0;
  int eps5 = 0;
};
Eps53 eps_53(const BigInt& a, const BigInt& c, unsigned p = 7);

// One local entry of a conductor profile: a value or a finite candidate set,
// with the rule that produced it.
struct PlaceExponent {
  std::string place;  // "2", "3", "r", "q", "sqrt5", ...
  std::set<int> values;
  std::string provenance;
};
struct ConductorProfile {
  std::vector<PlaceExponent> entries;
  bool classified = true;
  std::string note;
  std::string to_string() const;
};

// Table-backed conductor exponents.
PlaceExponent cond3_table(const BigInt& a, const BigInt& c, unsigned q);
// (v(h-), v(h+)) at a prime above r, given the divisibility pattern
std::pair<PlaceExponent, PlaceExponent> cond_r_table(unsigned q, unsigned r, const BigInt& a,
                                                     const BigInt& c);
std::pair<PlaceExponent, PlaceExponent> cond_q_table(unsigned q, unsigned r, const BigInt& a,
                                                     const BigInt& c);
PlaceExponent cond2_minus(const BigInt& a, const BigInt& c, unsigned q, unsigned r);

struct Table31Row {
  int exp_plus = 0, exp_minus = 0;
  int e = 0;  // good-reduction field degree when listed
  std::string type;
};
// Local data of the r = 3 elliptic pair at 3 by congruence row; throws
// domain_error for parameters matching no row.
Table31Row table31(const BigRat& t0);

// Conductor of the specialization at a trivial point (0 or infinity).
ConductorProfile trivial_cond(unsigned q, unsigned r, int point);
// Catalan specializations t0 in {1/9, 8/9} (r = 2) and {-1/8, 9/8} (r = 3).
ConductorProfile catalan_cond(unsigned q, const BigRat& t0);

}  // namespace gfe
