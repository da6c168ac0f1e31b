#pragma once

#include <algorithm>
#include <cstddef>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "connasym/errors.hpp"
#include "connasym/rational.hpp"

namespace connasym {

// Dense univariate polynomial in the edge-density variable rho. Trailing zero
// coefficients are always trimmed, so the representation is canonical and the
// zero polynomial is the empty coefficient list.
template <typename Coeff>
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(int constant) : Polynomial(Coeff(constant)) {}
  Polynomial(long constant) : Polynomial(Coeff(constant)) {}
  Polynomial(Coeff constant) {
    if (!(constant == Coeff(0))) c_.push_back(std::move(constant));
  }
  explicit Polynomial(std::vector<Coeff> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial monomial(Coeff coeff, std::size_t degree) {
    if (coeff == Coeff(0)) return Polynomial();
    std::vector<Coeff> c(degree + 1, Coeff(0));
    c[degree] = std::move(coeff);
    return Polynomial(std::move(c));
  }

  // Degree of the zero polynomial is -1.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Coeff coeff(std::size_t k) const { return k < c_.size() ? c_[k] : Coeff(0); }
  Coeff leading_coeff() const { return c_.empty() ? Coeff(0) : c_.back(); }
  const std::vector<Coeff>& coefficients() const { return c_; }

  // Horner evaluation at a point of any ring X constructible from Coeff.
  template <typename X>
  X operator()(const X& x) const {
    X acc(0);
    for (std::size_t k = c_.size(); k-- > 0;) acc = acc * x + X(c_[k]);
    return acc;
  }

  Polynomial operator-() const {
    std::vector<Coeff> c(c_.size());
    for (std::size_t k = 0; k < c_.size(); ++k) c[k] = -c_[k];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    std::vector<Coeff> c(std::max(a.c_.size(), b.c_.size()), Coeff(0));
    for (std::size_t k = 0; k < a.c_.size(); ++k) c[k] = c[k] + a.c_[k];
    for (std::size_t k = 0; k < b.c_.size(); ++k) c[k] = c[k] + b.c_[k];
    return Polynomial(std::move(c));
  }
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<Coeff> c(a.c_.size() + b.c_.size() - 1, Coeff(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    return Polynomial(std::move(c));
  }
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Coeff(0)) c_.pop_back();
  }
  std::vector<Coeff> c_;
};

// The polynomial family P_k lives in Z[rho]; series arithmetic that divides
// by factorials uses Q[rho] coefficients.
using RhoPoly = Polynomial<Int>;
using RhoPolyQ = Polynomial<Rational>;

namespace detail {
inline std::string coeff_str(const Int& c) { return c.get_str(); }
inline std::string coeff_str(const Rational& c) { return c.to_string(); }
inline bool coeff_negative(const Int& c) { return sgn(c) < 0; }
inline bool coeff_negative(const Rational& c) { return c.sign() < 0; }
inline Int coeff_abs(const Int& c) { return ::abs(c); }
inline Rational coeff_abs(const Rational& c) { return abs(c); }
}  // namespace detail

enum class PolyStyle {
  kMachine,  // "rho^3-6*rho+6" — used in CSV/JSON output
  kHuman,    // "ρ^3-6ρ+6"
};

template <typename Coeff>
std::string to_string(const Polynomial<Coeff>& p, PolyStyle style = PolyStyle::kMachine) {
  if (p.is_zero()) return "0";
  const char* var = style == PolyStyle::kMachine ? "rho" : "ρ";
  std::string out;
  for (int k = p.degree(); k >= 0; --k) {
    const Coeff c = p.coeff(static_cast<std::size_t>(k));
    if (c == Coeff(0)) continue;
    const bool neg = detail::coeff_negative(c);
    if (out.empty()) {
      if (neg) out += "-";
    } else {
      out += neg ? "-" : "+";
    }
    const auto mag = detail::coeff_abs(c);
    if (k == 0) {
      out += detail::coeff_str(mag);
    } else {
      if (!(mag == Coeff(1))) {
        out += detail::coeff_str(mag);
        if (style == PolyStyle::kMachine) out += "*";
      }
      out += var;
      if (k > 1) out += "^" + std::to_string(k);
    }
  }
  return out;
}

template <typename Coeff>
std::ostream& operator<<(std::ostream& os, const Polynomial<Coeff>& p) {
  return os << to_string(p);
}

// Scalar hook for truncated-series reciprocals. Z[rho] and Q[rho] scalars
// admit no division, so only the unit polynomials ±1 are invertible.
template <typename Coeff>
Polynomial<Coeff> reciprocal(const Polynomial<Coeff>& p) {
  if (p == Polynomial<Coeff>(1) || p == Polynomial<Coeff>(-1)) return p;
  throw DomainError("cannot invert polynomial '" + to_string(p) + "' (only the units 1 and -1 are invertible)");
}

// Scalar hook for the series log/exp recurrences.
inline RhoPolyQ div_by_index(const RhoPolyQ& p, unsigned long n) {
  std::vector<Rational> c(p.coefficients());
  for (auto& x : c) x = div_by_index(x, n);
  return RhoPolyQ(std::move(c));
}

// Exact conversion Q[rho] -> Z[rho]; ConsistencyError on any fractional
// coefficient (signals an upstream bug, not a caller mistake).
inline RhoPoly to_integer_polynomial(const RhoPolyQ& p) {
  std::vector<Int> c;
  c.reserve(p.coefficients().size());
  for (std::size_t k = 0; k < p.coefficients().size(); ++k) {
    const Rational& x = p.coefficients()[k];
    if (!x.is_integer())
      throw ConsistencyError("polynomial coefficient of rho^" + std::to_string(k) + " is " +
                             x.to_string() + ", not an integer");
    c.push_back(x.numerator());
  }
  return RhoPoly(std::move(c));
}

}  // namespace connasym
