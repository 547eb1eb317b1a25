#pragma once

#include <cstdint>
#include <vector>

#include "gfe/numeric.hpp"

namespace gfe {

enum class SlotKind { split, inert, ramified };

// Prime ideal of K = Q(sqrt5). Split primes come in conjugate pairs
// distinguished by the chosen square root of 5 mod ell; the canonical
// choice is the smaller root.
struct PrimeSlotK {
  std::uint32_t ell = 0;
  SlotKind kind = SlotKind::split;
  std::uint32_t root5 = 0;  // r with r^2 = 5 mod ell (split slots only)
  std::uint32_t f_K = 1;    // residue degree over Q
  std::uint32_t f_F = 1;    // residue degree of a prime of Q(zeta15) over Q
  BigInt norm;              // ell^f_K

  // relative residue degree of a prime of Q(zeta15) above this slot
  std::uint32_t rel_deg_F() const { return f_F / f_K; }
  std::string to_string() const;
};

// The slot above ell with the canonical (smaller) square root of 5; pass
// pin_root to select the conjugate slot instead.
PrimeSlotK make_slot(std::uint32_t ell, std::optional<std::uint32_t> pin_root = std::nullopt);

// All slots of norm <= cap with ell not dividing `skip_divisors` (default 30),
// one canonical slot per rational prime, ordered by norm then ell.
std::vector<PrimeSlotK> slots_up_to(const BigInt& norm_cap, std::uint32_t skip_divisors = 30);

}  // namespace gfe
