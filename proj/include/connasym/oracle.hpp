#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "connasym/rational.hpp"

namespace connasym::oracle {

// Exhaustive enumeration is capped to keep default runs fast: 2^15 masks at
// n = 6, and an opt-in 2^21 masks at n = 7.
inline constexpr int kDefaultCap = 6;
inline constexpr int kHardCap = 7;

inline int pair_count(int n) { return n * (n - 1) / 2; }

// Bit position of the vertex pair (u, v), u < v, in lexicographic pair
// order: (0,1), (0,2), ..., (0,n-1), (1,2), ...
inline int pair_index(int u, int v, int n) { return u * (2 * n - u - 1) / 2 + (v - u - 1); }

// Labeled simple graph as a bit mask over the pairs: bit pair_index(u,v) set
// means the edge {u,v} is present.
struct GraphInstance {
  int n = 0;
  std::uint32_t edge_bits = 0;

  bool has_edge(int u, int v) const {
    if (u > v) std::swap(u, v);
    return (edge_bits >> pair_index(u, v, n)) & 1U;
  }
};

// Labeled tournament as a bit mask over the pairs: bit pair_index(u,v) set
// means the arc u -> v (for u < v); clear means v -> u.
struct TournamentInstance {
  int n = 0;
  std::uint32_t arc_bits = 0;

  bool points(int from, int to) const {
    const bool forward = from < to;
    const int u = forward ? from : to;
    const int v = forward ? to : from;
    const bool bit = (arc_bits >> pair_index(u, v, n)) & 1U;
    return bit == forward;
  }

  // Builds from a directed arc list; every pair must be oriented exactly
  // once (UsageError otherwise). Vertices are 0-based.
  static TournamentInstance from_arcs(int n, const std::vector<std::pair<int, int>>& arcs);

  // All orientations flipped.
  TournamentInstance reversed() const {
    return {n, ~arc_bits & ((n < 2) ? 0U : (std::uint32_t{1} << pair_count(n)) - 1U)};
  }
};

// Ordered block decomposition of a tournament: blocks partition the vertex
// set, each induced sub-tournament is strongly connected, and every arc
// between blocks points from an earlier block to a later one.
struct Decomposition {
  std::vector<std::vector<int>> blocks;
};

// Counts connected graphs / strongly connected tournaments on n labeled
// vertices by iterating every mask. ResourceError above the cap.
std::uint64_t count_connected_exhaustive(int n, bool allow_n7 = false);
std::uint64_t count_irreducible_exhaustive(int n, bool allow_n7 = false);

// Strongly connected components in condensation order (for a tournament the
// condensation is a total order). ConsistencyError if any cross arc points
// backward, which the decomposition theorem rules out.
Decomposition decompose_tournament(const TournamentInstance& t);

enum class InstanceKind { kGraph, kTournament };

// Histogram over all instances of the number of connected components
// (graphs) or decomposition blocks (tournaments). Keys 1..n are always
// present; n = 0 yields {0: 1}.
std::map<int, std::uint64_t> component_histogram_exhaustive(InstanceKind kind, int n,
                                                            bool allow_n7 = false);

// Seeded Monte Carlo estimate of the probability that a random instance is
// connected (graphs, edge probability p) or irreducible (tournaments,
// p = 1/2 only). Identical (kind, n, p, trials, seed) always produces
// identical output; see the README for the exact sampling scheme.
struct McResult {
  std::uint64_t successes = 0;
  std::uint64_t trials = 0;
  Rational estimate;       // successes / trials, exact
  double std_error = 0.0;  // binomial standard error of the estimate
};

McResult mc_estimate(InstanceKind kind, int n, const Rational& p, std::uint64_t trials,
                     std::uint64_t seed);

}  // namespace connasym::oracle
