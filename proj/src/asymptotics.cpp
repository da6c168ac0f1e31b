#include "connasym/asymptotics.hpp"

#include <string>

#include "connasym/sequences.hpp"
#include "connasym/series.hpp"

namespace connasym::asym {

namespace {

void require(bool ok, const std::string& what) {
  if (!ok) throw UsageError(what);
}

// 1 - sum_{k=1}^{r-1} w_k C(n,k) 2^{k(k+1)/2} / 2^{nk} with the weight
// sequence w supplied by the caller (w[k] = w_k, w[0] unused).
Rational truncated_expansion(unsigned n, unsigned r, const std::vector<Int>& w) {
  Rational sum(0);
  for (unsigned k = 1; k < r; ++k) {
    const Int num = w[k] * binomial(n, k) * pow2(static_cast<unsigned long>(k) * (k + 1) / 2);
    sum = sum + Rational(num, pow2(static_cast<unsigned long>(n) * k));
  }
  return Rational(1) - sum;
}

std::vector<Int> connected_weights(unsigned r) {
  const CountTable i = seq::irreducible_counts(r - 1);
  std::vector<Int> w(r, 0);
  for (unsigned k = 1; k < r; ++k) w[k] = i.at(k);
  return w;
}

std::vector<Int> irreducible_weights(unsigned r) {
  const CountTable i = seq::irreducible_counts(r - 1);
  const CountTable i2 = seq::components_counts(seq::ComponentKind::kTournamentIrreducible, 2, r - 1);
  std::vector<Int> w(r, 0);
  for (unsigned k = 1; k < r; ++k) w[k] = 2 * i.at(k) - i2.at(k);
  return w;
}

}  // namespace

BenderInput bender_input_connected(unsigned r, unsigned max_n) {
  require(r >= 1, "truncation order r must be >= 1");
  require(max_n >= 1, "max_n must be >= 1");
  BenderInput in;
  in.r = r;
  const TruncatedSeries<Rational> g = seq::graph_egf(max_n);
  for (unsigned j = 1; j <= max_n; ++j) in.a.push_back(g[j]);
  const TruncatedSeries<Rational> d = recip(seq::graph_egf(r - 1));
  for (unsigned k = 0; k < r; ++k) in.d.push_back(d[k]);
  return in;
}

BenderInput bender_input_irreducible(unsigned r, unsigned max_n) {
  BenderInput in = bender_input_connected(r, max_n);
  const TruncatedSeries<Rational> d1 = recip(seq::graph_egf(r - 1));
  const TruncatedSeries<Rational> d2 = d1 * d1;
  for (unsigned k = 0; k < r; ++k) in.d[k] = d2[k];
  return in;
}

Rational bender_expand(const BenderInput& input, unsigned n) {
  require(input.r >= 1, "truncation order r must be >= 1");
  require(n > input.r, "bender_expand needs n > r");
  require(input.d.size() >= input.r, "d stream shorter than r");
  require(input.a.size() >= n, "a stream shorter than n");
  for (std::size_t j = 0; j < input.a.size(); ++j)
    if (input.a[j].is_zero())
      throw DomainError("hypothesis violation: a_" + std::to_string(j + 1) + " = 0");
  Rational sum(0);
  for (unsigned k = 0; k < input.r; ++k) sum = sum + input.d[k] * input.a[n - k - 1];
  return sum;
}

std::vector<ConditionProbeRow> bender_condition_probe(const std::vector<Rational>& a, unsigned r,
                                                      unsigned n_lo, unsigned n_hi) {
  require(r >= 1, "truncation order r must be >= 1");
  require(n_lo <= n_hi, "empty probe range");
  require(n_hi - n_lo + 1 >= 2 * r + 1, "probe range shorter than 2r+1");
  require(n_lo >= 2 * r, "probe range must start at n >= 2r");
  require(n_lo >= 2, "probe range must start at n >= 2");
  require(a.size() >= n_hi, "a stream shorter than the probe range");
  for (unsigned j = 1; j <= n_hi; ++j)
    if (a[j - 1].is_zero())
      throw DomainError("hypothesis violation: a_" + std::to_string(j) + " = 0");

  std::vector<ConditionProbeRow> rows;
  rows.reserve(n_hi - n_lo + 1);
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    const Rational ratio1 = a[n - 2] / a[n - 1];
    Rational acc(0);
    for (unsigned k = r; k + r <= n; ++k) acc = acc + abs(a[k - 1] * a[n - k - 1]);
    const Rational ratio2 = acc / abs(a[n - r - 1]);
    rows.push_back({n, ratio1, ratio2});
  }
  return rows;
}

Rational exact_prob_connected(unsigned n) {
  require(n >= 1, "size n must be >= 1");
  return Rational(seq::connected_counts(n).at(n), pow2(static_cast<unsigned long>(n) * (n - 1) / 2));
}

Rational exact_prob_irreducible(unsigned n) {
  require(n >= 1, "size n must be >= 1");
  return Rational(seq::irreducible_counts(n).at(n), pow2(static_cast<unsigned long>(n) * (n - 1) / 2));
}

Rational expansion_prob_connected(unsigned n, unsigned r) {
  require(n >= 1, "size n must be >= 1");
  require(r >= 1, "truncation order r must be >= 1");
  return truncated_expansion(n, r, connected_weights(r));
}

Rational expansion_prob_irreducible(unsigned n, unsigned r) {
  require(n >= 1, "size n must be >= 1");
  require(r >= 1, "truncation order r must be >= 1");
  return truncated_expansion(n, r, irreducible_weights(r));
}

Rational exact_prob_connected_p(unsigned n, const Rational& p) {
  require(n >= 1, "size n must be >= 1");
  if (!(Rational(0) < p && p < Rational(1)))
    throw DomainError("edge probability must satisfy 0 < p < 1, got " + p.to_string());
  const Rational u = p / (Rational(1) - p);
  const TruncatedSeries<Rational> weighted = seq::weighted_graph_egf(n, u);
  const Rational connected_weight = Rational(factorial(n)) * log(weighted)[n];
  return connected_weight * pow(Rational(1) - p, static_cast<long>(static_cast<unsigned long>(n) * (n - 1) / 2));
}

Rational expansion_prob_connected_p(unsigned n, unsigned r, const Rational& p) {
  require(n >= 1, "size n must be >= 1");
  require(r >= 1, "truncation order r must be >= 1");
  if (!(Rational(0) < p && p < Rational(1)))
    throw DomainError("edge probability must satisfy 0 < p < 1, got " + p.to_string());
  const Rational rho = reciprocal(Rational(1) - p);
  Rational sum(0);
  if (r >= 2) {
    const seq::PolynomialTable table = seq::rho_polynomials(r - 1);
    for (unsigned k = 1; k < r; ++k) {
      const long exponent = static_cast<long>(k) * (k + 1) / 2 - static_cast<long>(n) * k;
      sum = sum + table.at(k)(rho) * Rational(binomial(n, k)) * pow(rho, exponent);
    }
  }
  return Rational(1) - sum;
}

std::vector<ExpansionReport> error_report(ProbKind kind, unsigned r, unsigned n_lo,
                                          unsigned n_hi) {
  require(r >= 1, "truncation order r must be >= 1");
  require(n_lo >= 1, "range must start at n >= 1");
  require(n_lo <= n_hi, "empty report range");

  const bool graph = kind == ProbKind::kGraph;
  const CountTable numer = graph ? seq::connected_counts(n_hi) : seq::irreducible_counts(n_hi);
  const std::vector<Int> w = graph ? connected_weights(r) : irreducible_weights(r);

  std::vector<ExpansionReport> rows;
  rows.reserve(n_hi - n_lo + 1);
  for (unsigned n = n_lo; n <= n_hi; ++n) {
    ExpansionReport row;
    row.n = n;
    row.r = r;
    row.exact = Rational(numer.at(n), pow2(static_cast<unsigned long>(n) * (n - 1) / 2));
    row.approx = truncated_expansion(n, r, w);
    row.abs_error = abs(row.exact - row.approx);
    row.scaled_error =
        row.abs_error * Rational(pow2(static_cast<unsigned long>(n) * r), ipow(n, r));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace connasym::asym
