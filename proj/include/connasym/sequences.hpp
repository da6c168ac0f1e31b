#pragma once

#include <string>
#include <vector>

#include "connasym/count_table.hpp"
#include "connasym/polynomial.hpp"
#include "connasym/rational.hpp"
#include "connasym/series.hpp"

namespace connasym::seq {

// Exponential generating function of all labeled graphs / tournaments:
// sum_n 2^{n(n-1)/2} z^n / n!. The two families are equinumerous, so a
// single series serves both.
TruncatedSeries<Rational> graph_egf(unsigned order);

// C(z) = log G(z): connected labeled graphs.
TruncatedSeries<Rational> connected_egf(unsigned order);

// I(z) = 1 - 1/T(z): irreducible (strongly connected) labeled tournaments.
TruncatedSeries<Rational> irreducible_egf(unsigned order);

// n -> 2^{n(n-1)/2} for n = 0..N.
CountTable graph_counts(unsigned order);
CountTable tournament_counts(unsigned order);

// c_n = n! [z^n] log G(z); c_0 = 0.
CountTable connected_counts(unsigned order);

// i_n = n! [z^n] (1 - 1/T(z)); i_0 = 0.
CountTable irreducible_counts(unsigned order);

enum class ComponentKind {
  kGraphConnected,         // unordered set of m connected components: C^m / m!
  kTournamentIrreducible,  // ordered sequence of m irreducible blocks: I^m
};

// Structures of size n built from exactly m components of the given kind.
CountTable components_counts(ComponentKind kind, unsigned m, unsigned order);

// EGF of labeled graphs with edges weighted by rho: coefficient of z^n is
// rho^{n(n-1)/2} / n! in Q[rho].
TruncatedSeries<RhoPolyQ> rho_graph_series(unsigned order);

// Same series with a concrete rational substituted for rho.
TruncatedSeries<Rational> evaluate_at_rho(const TruncatedSeries<RhoPolyQ>& s, const Rational& rho);

// EGF sum_n (1+u)^{n(n-1)/2} z^n / n!, the edge-weighted graph series used
// for connectivity probabilities in the independent-edge model.
TruncatedSeries<Rational> weighted_graph_egf(unsigned order, const Rational& u);

// The polynomial family P_k, k = 1..K, defined by
// P_k = -k! [z^k] 1/rho_graph_series. P_k has integer coefficients, degree
// k(k-1)/2, leading coefficient 1, and P_k(2) = i_k.
struct PolynomialTable {
  std::vector<RhoPoly> polys;  // polys[k-1] holds P_k

  const RhoPoly& at(unsigned k) const {
    if (k < 1 || k > polys.size())
      throw UsageError("polynomial table has no entry for k = " + std::to_string(k));
    return polys[k - 1];
  }
  unsigned max_index() const { return static_cast<unsigned>(polys.size()); }
};

PolynomialTable rho_polynomials(unsigned max_index);

}  // namespace connasym::seq
