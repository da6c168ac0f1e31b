#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "connasym/errors.hpp"

namespace connasym {

// Formal power series truncated at a fixed order N: the coefficients of
// z^0..z^N. The order is fixed at construction and never promoted; every
// binary operation requires equal orders. Values are immutable after
// construction and safe to share across threads.
//
// The scalar ring S must provide: zero default construction, construction
// from small integers, +, -, *, unary -, ==, and the free functions
// reciprocal(S) (for recip) and div_by_index(S, n) (for log/exp).
template <typename S>
class TruncatedSeries {
 public:
  explicit TruncatedSeries(unsigned order) : c_(static_cast<std::size_t>(order) + 1) {}

  TruncatedSeries(unsigned order, std::vector<S> coeffs) : c_(std::move(coeffs)) {
    if (c_.size() != static_cast<std::size_t>(order) + 1)
      throw UsageError("series of order " + std::to_string(order) + " needs " +
                       std::to_string(order + 1) + " coefficients, got " +
                       std::to_string(c_.size()));
  }

  template <typename Fn>
  static TruncatedSeries from_coeff_fn(unsigned order, Fn&& fn) {
    std::vector<S> c;
    c.reserve(static_cast<std::size_t>(order) + 1);
    for (unsigned n = 0; n <= order; ++n) c.push_back(fn(n));
    return TruncatedSeries(order, std::move(c));
  }

  static TruncatedSeries one(unsigned order) {
    TruncatedSeries s(order);
    s.c_[0] = S(1);
    return s;
  }

  unsigned order() const { return static_cast<unsigned>(c_.size()) - 1; }

  const S& operator[](std::size_t n) const {
    if (n >= c_.size())
      throw UsageError("coefficient index " + std::to_string(n) + " beyond series order " +
                       std::to_string(order()));
    return c_[n];
  }

  const std::vector<S>& coefficients() const { return c_; }

  TruncatedSeries operator-() const {
    std::vector<S> c(c_.size());
    for (std::size_t n = 0; n < c_.size(); ++n) c[n] = -c_[n];
    return TruncatedSeries(order(), std::move(c));
  }

  friend TruncatedSeries operator+(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<S> c(a.c_.size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.c_[n] + b.c_[n];
    return TruncatedSeries(a.order(), std::move(c));
  }

  friend TruncatedSeries operator-(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<S> c(a.c_.size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.c_[n] - b.c_[n];
    return TruncatedSeries(a.order(), std::move(c));
  }

  // Cauchy product truncated to the common order; schoolbook O(N^2).
  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
    require_same_order(a, b);
    std::vector<S> c(a.c_.size(), S());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i] == S(0)) continue;
      for (std::size_t j = 0; i + j < b.c_.size(); ++j) c[i + j] = c[i + j] + a.c_[i] * b.c_[j];
    }
    return TruncatedSeries(a.order(), std::move(c));
  }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const S& s) {
    std::vector<S> c(a.c_.size());
    for (std::size_t n = 0; n < c.size(); ++n) c[n] = a.c_[n] * s;
    return TruncatedSeries(a.order(), std::move(c));
  }
  friend TruncatedSeries operator*(const S& s, const TruncatedSeries& a) { return a * s; }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }
  friend bool operator!=(const TruncatedSeries& a, const TruncatedSeries& b) {
    return !(a == b);
  }

 private:
  static void require_same_order(const TruncatedSeries& a, const TruncatedSeries& b) {
    if (a.order() != b.order())
      throw UsageError("series order mismatch: " + std::to_string(a.order()) + " vs " +
                       std::to_string(b.order()));
  }
  std::vector<S> c_;
};

// Multiplicative inverse up to the truncation order, by the standard
// recurrence b_0 = 1/a_0, b_n = -b_0 * sum_{j=1..n} a_j b_{n-j}. The constant
// term must be a unit of the scalar ring; reciprocal(S) enforces that and
// names the offending constant.
template <typename S>
TruncatedSeries<S> recip(const TruncatedSeries<S>& a) {
  const unsigned N = a.order();
  std::vector<S> b(static_cast<std::size_t>(N) + 1);
  const S b0 = reciprocal(a[0]);
  b[0] = b0;
  for (unsigned n = 1; n <= N; ++n) {
    S acc{};
    for (unsigned j = 1; j <= n; ++j) acc = acc + a[j] * b[n - j];
    b[n] = -(b0 * acc);
  }
  return TruncatedSeries<S>(N, std::move(b));
}

// log via the derivative recurrence n b_n = n a_n - sum_{k=1..n-1} k b_k a_{n-k},
// valid because a_0 = 1. Stays inside exact arithmetic: the only divisions
// are by the index n.
template <typename S>
TruncatedSeries<S> log(const TruncatedSeries<S>& a) {
  if (!(a[0] == S(1))) throw DomainError("series log requires constant term 1");
  const unsigned N = a.order();
  std::vector<S> b(static_cast<std::size_t>(N) + 1);
  for (unsigned n = 1; n <= N; ++n) {
    S acc = S(static_cast<long>(n)) * a[n];
    for (unsigned k = 1; k < n; ++k) acc = acc - S(static_cast<long>(k)) * b[k] * a[n - k];
    b[n] = div_by_index(acc, n);
  }
  return TruncatedSeries<S>(N, std::move(b));
}

// exp via n b_n = sum_{k=1..n} k a_k b_{n-k}, with b_0 = 1; requires a_0 = 0.
template <typename S>
TruncatedSeries<S> exp(const TruncatedSeries<S>& a) {
  if (!(a[0] == S(0))) throw DomainError("series exp requires constant term 0");
  const unsigned N = a.order();
  std::vector<S> b(static_cast<std::size_t>(N) + 1);
  b[0] = S(1);
  for (unsigned n = 1; n <= N; ++n) {
    S acc{};
    for (unsigned k = 1; k <= n; ++k) acc = acc + S(static_cast<long>(k)) * a[k] * b[n - k];
    b[n] = div_by_index(acc, n);
  }
  return TruncatedSeries<S>(N, std::move(b));
}

}  // namespace connasym
