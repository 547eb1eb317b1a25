#pragma once

#include <sstream>
#include <vector>

#include "gfe/numeric.hpp"
#include "gfe/quadratic.hpp"

namespace gfe {

// Dense univariate polynomial, coefficients low to high. The zero polynomial
// is the empty vector and has degree kDegZero.
inline constexpr long kDegZero = -1;

template <typename T>
class Poly {
 public:
  Poly() = default;
  explicit Poly(std::vector<T> cs) : c_(std::move(cs)) { trim(); }
  static Poly x_power(std::size_t k, T lead = T(1)) {
    std::vector<T> v(k + 1, T(0));
    v[k] = std::move(lead);
    return Poly(std::move(v));
  }
  static Poly constant(T c) { return Poly(std::vector<T>{std::move(c)}); }

  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const std::vector<T>& coeffs() const { return c_; }
  T coeff(std::size_t i) const { return i < c_.size() ? c_[i] : T(0); }
  const T& leading() const {
    if (c_.empty()) throw domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator+(const Poly& o) const {
    std::vector<T> v(std::max(c_.size(), o.c_.size()), T(0));
    for (std::size_t i = 0; i < c_.size(); ++i) v[i] = v[i] + c_[i];
    for (std::size_t i = 0; i < o.c_.size(); ++i) v[i] = v[i] + o.c_[i];
    return Poly(std::move(v));
  }
  Poly operator-() const {
    std::vector<T> v = c_;
    for (auto& x : v) x = -x;
    return Poly(std::move(v));
  }
  Poly operator-(const Poly& o) const { return *this + (-o); }
  Poly operator*(const Poly& o) const {
    if (is_zero() || o.is_zero()) return Poly();
    std::vector<T> v(c_.size() + o.c_.size() - 1, T(0));
    for (std::size_t i = 0; i < c_.size(); ++i)
      for (std::size_t j = 0; j < o.c_.size(); ++j) v[i + j] = v[i + j] + c_[i] * o.c_[j];
    return Poly(std::move(v));
  }
  Poly operator*(const T& s) const {
    std::vector<T> v = c_;
    for (auto& x : v) x = x * s;
    return Poly(std::move(v));
  }
  bool operator==(const Poly& o) const { return c_ == o.c_; }

  T eval(const T& x) const {
    T acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
    return acc;
  }

  Poly derivative() const {
    if (c_.size() <= 1) return Poly();
    std::vector<T> v(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i) v[i - 1] = c_[i] * T(static_cast<long>(i));
    return Poly(std::move(v));
  }

  // substitute x -> x + a
  Poly shift(const T& a) const {
    Poly res;
    Poly base = Poly::constant(T(1));
    Poly lin(std::vector<T>{a, T(1)});
    for (std::size_t i = 0; i < c_.size(); ++i) {
      res = res + base * c_[i];
      base = base * lin;
    }
    return res;
  }

  // substitute x -> s*x
  Poly scale_arg(const T& s) const {
    std::vector<T> v = c_;
    T pw(1);
    for (std::size_t i = 0; i < v.size(); ++i) {
      v[i] = v[i] * pw;
      pw = pw * s;
    }
    return Poly(std::move(v));
  }

  std::string to_string(const std::string& var = "x") const;

 private:
  void trim() {
    while (!c_.empty() && c_.back() == T(0)) c_.pop_back();
  }
  std::vector<T> c_;
};

using ZPoly = Poly<BigInt>;
using QPoly = Poly<BigRat>;
using KPoly = Poly<KElt>;

QPoly to_qpoly(const ZPoly& p);
// Clears denominators and removes integer content; keeps the sign of the leading term.
ZPoly primitive_integer_poly(const QPoly& p);

// Field-only operations (exact over Q).
std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b);
QPoly poly_gcd(QPoly a, QPoly b);  // monic gcd
QPoly squarefree_part(const QPoly& p);

// Resultant over Q via the Euclidean scheme (exact).
BigRat resultant(const QPoly& a, const QPoly& b);

// Res(X^n - 1, x^2 - a x + q) computed in K by the power-sum recursion
// s_k = a s_{k-1} - q s_{k-2}:  result = q^n - s_n + 1.
KElt resultant_cyclo_quadratic(unsigned long n, const KElt& a, const BigInt& q);

// Resultant of polynomials over the ring of integers of K (fraction-free
// pseudo-remainder scheme; exact).
KElt resultant(const KPoly& a, const KPoly& b);

// minimum p-adic valuation of the coefficients (content valuation);
// kValInfinity for the zero polynomial
long content_valuation(const QPoly& p, const BigInt& prime);

template <typename T>
std::string Poly<T>::to_string(const std::string& var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long i = degree(); i >= 0; --i) {
    T c = coeff(static_cast<std::size_t>(i));
    if (c == T(0)) continue;
    std::ostringstream term;
    bool neg = false;
    std::string cs;
    if constexpr (std::is_same_v<T, BigInt>) {
      neg = c < 0;
      BigInt a = neg ? BigInt(-c) : c;
      cs = a.get_str();
    } else if constexpr (std::is_same_v<T, BigRat>) {
      neg = c < 0;
      BigRat a = neg ? BigRat(-c) : c;
      cs = rat_to_string(a);
    } else {
      cs = c.to_string();
    }
    bool unit = (cs == "1");
    if (i == 0) {
      term << cs;
    } else {
      if (!unit) term << cs << "*";
      term << var;
      if (i > 1) term << "^" << i;
    }
    if (first) {
      if (neg) os << "-";
      first = false;
    } else {
      os << (neg ? " - " : " + ");
    }
    os << term.str();
  }
  return os.str();
}

}  // namespace gfe
