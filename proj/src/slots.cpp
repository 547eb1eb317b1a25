#include "gfe/slots.hpp"

#include <algorithm>
#include <sstream>

#include "gfe/fq.hpp"

namespace gfe {

std::string PrimeSlotK::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case SlotKind::split:
      os << "split(" << ell << ",r=" << root5 << ")";
      break;
    case SlotKind::inert:
      os << "inert(" << ell << ")";
      break;
    case SlotKind::ramified:
      os << "ramified(5)";
      break;
  }
  return os.str();
}

PrimeSlotK make_slot(std::uint32_t ell, std::optional<std::uint32_t> pin_root) {
  if (!is_probable_prime(BigInt(ell))) throw domain_error("make_slot: ell must be prime");
  PrimeSlotK s;
  s.ell = ell;
  if (ell == 5) {
    s.kind = SlotKind::ramified;
    s.f_K = 1;
    s.norm = 5;
    s.f_F = 4;  // order of 5 mod 3 ... not used; the ramified slot never enters sums
    return s;
  }
  std::uint32_t m = ell % 5;
  if (m == 1 || m == 4) {
    s.kind = SlotKind::split;
    s.f_K = 1;
    s.norm = ell;
    std::uint32_t r = 0;
    for (std::uint32_t x = 1; x < ell; ++x) {
      if ((static_cast<std::uint64_t>(x) * x) % ell == 5 % ell) {
        r = x;
        break;
      }
    }
    if (!r) throw oracle_error("make_slot: no square root of 5 found");
    std::uint32_t other = ell - r;
    std::uint32_t canonical = std::min(r, other);
    if (pin_root) {
      if (*pin_root != r && *pin_root != other)
        throw domain_error("make_slot: pinned root is not a square root of 5");
      s.root5 = *pin_root;
    } else {
      s.root5 = canonical;
    }
  } else {
    s.kind = SlotKind::inert;
    s.f_K = 2;
    s.norm = BigInt(ell) * ell;
  }
  if (ell != 3 && ell != 5) s.f_F = mult_order(ell, 15);
  return s;
}

std::vector<PrimeSlotK> slots_up_to(const BigInt& norm_cap, std::uint32_t skip_divisors) {
  std::vector<PrimeSlotK> out;
  std::uint32_t bound = static_cast<std::uint32_t>(norm_cap.get_ui());
  for (std::uint32_t ell : primes_up_to(bound)) {
    if (skip_divisors % ell == 0) continue;
    PrimeSlotK s = make_slot(ell);
    if (s.norm > norm_cap) continue;
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(), [](const PrimeSlotK& a, const PrimeSlotK& b) {
    if (a.norm != b.norm) return a.norm < b.norm;
    return a.ell < b.ell;
  });
  return out;
}

}  // namespace gfe
