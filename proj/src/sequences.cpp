#include "connasym/sequences.hpp"

namespace connasym::seq {

namespace {

unsigned long pairs_of(unsigned long n) { return n * (n - 1) / 2; }

}  // namespace

TruncatedSeries<Rational> graph_egf(unsigned order) {
  return TruncatedSeries<Rational>::from_coeff_fn(
      order, [](unsigned n) { return Rational(pow2(pairs_of(n)), factorial(n)); });
}

TruncatedSeries<Rational> connected_egf(unsigned order) { return log(graph_egf(order)); }

TruncatedSeries<Rational> irreducible_egf(unsigned order) {
  return TruncatedSeries<Rational>::one(order) - recip(graph_egf(order));
}

CountTable graph_counts(unsigned order) {
  std::vector<Int> counts;
  counts.reserve(order + 1);
  for (unsigned n = 0; n <= order; ++n) counts.push_back(pow2(pairs_of(n)));
  return CountTable{"g", std::move(counts)};
}

CountTable tournament_counts(unsigned order) {
  CountTable t = graph_counts(order);
  t.name = "t";
  return t;
}

CountTable connected_counts(unsigned order) { return egf_counts(connected_egf(order), "c"); }

CountTable irreducible_counts(unsigned order) { return egf_counts(irreducible_egf(order), "i"); }

CountTable components_counts(ComponentKind kind, unsigned m, unsigned order) {
  const bool graph = kind == ComponentKind::kGraphConnected;
  TruncatedSeries<Rational> power(order);  // zero: the lowest term z^m lies beyond N for m > N
  if (m <= order) {
    const TruncatedSeries<Rational> base = graph ? connected_egf(order) : irreducible_egf(order);
    power = TruncatedSeries<Rational>::one(order);
    for (unsigned j = 0; j < m; ++j) power = power * base;
  }
  if (graph) power = power * Rational(Int(1), factorial(m));
  const std::string name = (graph ? "c_" : "i_") + std::to_string(m);
  return egf_counts(power, name);
}

TruncatedSeries<RhoPolyQ> rho_graph_series(unsigned order) {
  return TruncatedSeries<RhoPolyQ>::from_coeff_fn(order, [](unsigned n) {
    return RhoPolyQ::monomial(Rational(Int(1), factorial(n)), pairs_of(n));
  });
}

TruncatedSeries<Rational> evaluate_at_rho(const TruncatedSeries<RhoPolyQ>& s,
                                          const Rational& rho) {
  return TruncatedSeries<Rational>::from_coeff_fn(s.order(),
                                                  [&](unsigned n) { return s[n](rho); });
}

TruncatedSeries<Rational> weighted_graph_egf(unsigned order, const Rational& u) {
  const Rational one_plus_u = Rational(1) + u;
  return TruncatedSeries<Rational>::from_coeff_fn(order, [&](unsigned n) {
    return pow(one_plus_u, static_cast<long>(pairs_of(n))) * Rational(Int(1), factorial(n));
  });
}

PolynomialTable rho_polynomials(unsigned max_index) {
  if (max_index < 1) throw UsageError("rho_polynomials needs max index >= 1");
  const TruncatedSeries<RhoPolyQ> d = recip(rho_graph_series(max_index));
  PolynomialTable table;
  table.polys.reserve(max_index);
  for (unsigned k = 1; k <= max_index; ++k) {
    const RhoPolyQ scaled = d[k] * RhoPolyQ(Rational(Int(-factorial(k))));
    table.polys.push_back(to_integer_polynomial(scaled));
  }
  return table;
}

}  // namespace connasym::seq
