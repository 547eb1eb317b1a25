#pragma once

#include "gfe/curves.hpp"

namespace gfe {

enum class ReductionType { good, multiplicative_split, multiplicative_nonsplit, additive };

struct LocalData {
  std::string kodaira;      // I0, In, II, III, IV, I0*, In*, IV*, III*, II*
  long n = 0;               // the n of In / In*
  long f_p = 0;             // conductor exponent
  long v_disc = 0;          // valuation of the minimal discriminant
  ReductionType reduction = ReductionType::good;
};

// Tate's algorithm over Q at any prime, including 2 and 3. The model is
// first cleared to an integral one; minimality at p is reached through the
// algorithm's own rescaling step.
LocalData tate_algorithm(const EllipticModel& e, const BigInt& p);

// Product of p^{f_p} over the bad primes of an integral model.
BigInt conductor_global(const EllipticModel& e);

}  // namespace gfe
