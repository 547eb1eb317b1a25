#include "gfe/quadratic.hpp"

#include <sstream>

namespace gfe {

std::vector<BigInt> KElt::min_poly() const {
  if (is_rational()) return {-rational_value(), BigInt(1)};
  return {norm(), -trace(), BigInt(1)};
}

std::string KElt::to_string() const {
  if (is_rational()) return rational_value().get_str();
  std::ostringstream os;
  bool half = (u_ % 2) != 0;  // parity forces v odd too
  BigInt u = u_, v = v_;
  if (!half) {
    u /= 2;
    v /= 2;
  }
  if (half) os << "(";
  if (u != 0) os << u.get_str();
  if (v > 0 && u != 0) os << "+";
  if (v == 1)
    os << "sqrt5";
  else if (v == -1)
    os << "-sqrt5";
  else
    os << v.get_str() << "*sqrt5";
  if (half) os << ")/2";
  return os.str();
}

std::optional<KElt> sqrt_in_K(const BigInt& n) {
  if (n >= 0) {
    if (auto s = exact_root(n, 2)) return KElt(2 * *s, 0);
  }
  if (n % 5 == 0) {
    BigInt m = n / 5;
    if (m >= 0) {
      if (auto s = exact_root(m, 2)) return KElt(0, 2 * *s);
    }
  }
  return std::nullopt;
}

}  // namespace gfe
