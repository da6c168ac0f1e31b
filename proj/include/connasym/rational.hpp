#pragma once

#include <gmpxx.h>

#include <ostream>
#include <string>
#include <string_view>
#include <utility>

#include "connasym/errors.hpp"

namespace connasym {

// Arbitrary-precision integer. All counting tables use this type.
using Int = mpz_class;

// Exact rational scalar. Invariants: always in lowest terms, denominator
// positive. Every operation is exact; there is no rounding anywhere in the
// core (decimal rendering lives in the output layer only).
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(int n) : v_(n) {}
  Rational(long n) : v_(n) {}
  Rational(unsigned long n) : v_(n) {}
  Rational(const Int& n) : v_(n) {}

  // num/den, canonicalized. den == 0 raises DomainError.
  Rational(const Int& num, const Int& den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }

  // Accepts "a" or "a/b" with optional sign; anything else (including
  // decimal points) raises UsageError.
  static Rational parse(std::string_view text);

  Int numerator() const { return Int(v_.get_num()); }
  Int denominator() const { return Int(v_.get_den()); }
  int sign() const { return sgn(v_); }
  bool is_zero() const { return sgn(v_) == 0; }
  bool is_integer() const { return v_.get_den() == 1; }

  // "a" when integral, "a/b" otherwise. Lossless.
  std::string to_string() const;

  Rational operator-() const { return Rational(mpq_class(-v_)); }

  friend Rational operator+(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ + b.v_));
  }
  friend Rational operator-(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ - b.v_));
  }
  friend Rational operator*(const Rational& a, const Rational& b) {
    return Rational(mpq_class(a.v_ * b.v_));
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw DomainError("rational division by zero");
    return Rational(mpq_class(a.v_ / b.v_));
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend bool operator!=(const Rational& a, const Rational& b) { return a.v_ != b.v_; }
  friend bool operator<(const Rational& a, const Rational& b) { return a.v_ < b.v_; }
  friend bool operator<=(const Rational& a, const Rational& b) { return a.v_ <= b.v_; }
  friend bool operator>(const Rational& a, const Rational& b) { return a.v_ > b.v_; }
  friend bool operator>=(const Rational& a, const Rational& b) { return a.v_ >= b.v_; }

 private:
  explicit Rational(mpq_class v) : v_(std::move(v)) {}
  mpq_class v_;
};

inline std::ostream& operator<<(std::ostream& os, const Rational& x) {
  return os << x.to_string();
}

inline Rational abs(const Rational& x) { return x.sign() < 0 ? -x : x; }

// 1/x; DomainError on zero.
inline Rational reciprocal(const Rational& x) {
  if (x.is_zero()) throw DomainError("cannot invert the rational 0");
  return Rational(x.denominator(), x.numerator());
}

// x^e for any integer e (negative exponents invert; 0^negative is an error).
Rational pow(const Rational& x, long e);

// Scalar hook used by the series log/exp recurrences: exact division by a
// positive index.
inline Rational div_by_index(const Rational& x, unsigned long n) {
  return x / Rational(n);
}

Int factorial(unsigned long n);
Int binomial(unsigned long n, unsigned long k);
Int pow2(unsigned long e);
Int pow10(unsigned long e);
Int ipow(unsigned long base, unsigned long e);

// Round-half-even decimal rendering with `digits` significant digits.
// Rendering only: never feed the result back into computation.
std::string to_decimal_string(const Rational& value, int digits);

}  // namespace connasym
