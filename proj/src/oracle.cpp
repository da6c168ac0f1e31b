#include "connasym/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include "connasym/disjoint_set.hpp"
#include "connasym/errors.hpp"

namespace connasym::oracle {

namespace {

constexpr int kMaskVertexLimit = 8;  // 28 pair bits still fit a 32-bit mask

void check_mask_size(int n) {
  if (n < 0 || n > kMaskVertexLimit)
    throw UsageError("mask-encoded instances support 0 <= n <= " +
                     std::to_string(kMaskVertexLimit) + ", got n = " + std::to_string(n));
}

void check_enumeration_cap(int n, bool allow_n7) {
  if (n < 0) throw UsageError("negative instance size");
  const int cap = allow_n7 ? kHardCap : kDefaultCap;
  if (n > cap)
    throw ResourceError("n = " + std::to_string(n) +
                        " exceeds the exhaustive-enumeration cap " + std::to_string(cap));
}

int graph_component_count(std::uint32_t edge_bits, int n, DisjointSet& dsu) {
  dsu.reset(n);
  int bit = 0;
  for (int u = 0; u + 1 < n; ++u)
    for (int v = u + 1; v < n; ++v, ++bit)
      if ((edge_bits >> bit) & 1U) dsu.unite(u, v);
  return dsu.set_count();
}

// Tarjan's strongly-connected-components pass. Components are emitted in
// reverse condensation order (sinks first).
struct Tarjan {
  const TournamentInstance& t;
  std::vector<int> index, lowlink, stack;
  std::vector<bool> on_stack;
  std::vector<std::vector<int>> components;
  int counter = 0;

  explicit Tarjan(const TournamentInstance& tt)
      : t(tt), index(tt.n, -1), lowlink(tt.n, 0), on_stack(tt.n, false) {}

  void visit(int v) {
    index[v] = lowlink[v] = counter++;
    stack.push_back(v);
    on_stack[v] = true;
    for (int w = 0; w < t.n; ++w) {
      if (w == v || !t.points(v, w)) continue;
      if (index[w] < 0) {
        visit(w);
        lowlink[v] = std::min(lowlink[v], lowlink[w]);
      } else if (on_stack[w]) {
        lowlink[v] = std::min(lowlink[v], index[w]);
      }
    }
    if (lowlink[v] == index[v]) {
      std::vector<int> comp;
      for (;;) {
        const int w = stack.back();
        stack.pop_back();
        on_stack[w] = false;
        comp.push_back(w);
        if (w == v) break;
      }
      components.push_back(std::move(comp));
    }
  }

  std::vector<std::vector<int>> run() {
    for (int v = 0; v < t.n; ++v)
      if (index[v] < 0) visit(v);
    return std::move(components);
  }
};

// Unbiased uniform draw from [0, bound) by rejecting values below
// 2^64 mod bound, then reducing. One or more engine calls per draw.
std::uint64_t bounded_uniform(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t min = (std::uint64_t{0} - bound) % bound;
  std::uint64_t x = gen();
  while (x < min) x = gen();
  return x % bound;
}

}  // namespace

TournamentInstance TournamentInstance::from_arcs(int n,
                                                 const std::vector<std::pair<int, int>>& arcs) {
  check_mask_size(n);
  std::uint32_t bits = 0;
  std::uint32_t seen = 0;
  for (const auto& [from, to] : arcs) {
    if (from < 0 || from >= n || to < 0 || to >= n || from == to)
      throw UsageError("invalid arc (" + std::to_string(from) + ", " + std::to_string(to) + ")");
    const int u = std::min(from, to);
    const int v = std::max(from, to);
    const std::uint32_t bit = std::uint32_t{1} << pair_index(u, v, n);
    if (seen & bit)
      throw UsageError("pair {" + std::to_string(u) + ", " + std::to_string(v) +
                       "} oriented twice");
    seen |= bit;
    if (from < to) bits |= bit;
  }
  const std::uint32_t full = (n < 2) ? 0U : (std::uint32_t{1} << pair_count(n)) - 1U;
  if (seen != full) throw UsageError("not every pair is oriented");
  return {n, bits};
}

std::uint64_t count_connected_exhaustive(int n, bool allow_n7) {
  check_enumeration_cap(n, allow_n7);
  if (n == 0) return 0;  // the empty graph has no component, so it is not connected
  DisjointSet dsu(n);
  const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask)
    if (graph_component_count(static_cast<std::uint32_t>(mask), n, dsu) == 1) ++count;
  return count;
}

std::uint64_t count_irreducible_exhaustive(int n, bool allow_n7) {
  check_enumeration_cap(n, allow_n7);
  if (n == 0) return 0;
  const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
  std::uint64_t count = 0;
  for (std::uint64_t mask = 0; mask < masks; ++mask) {
    const TournamentInstance t{n, static_cast<std::uint32_t>(mask)};
    if (decompose_tournament(t).blocks.size() == 1) ++count;
  }
  return count;
}

Decomposition decompose_tournament(const TournamentInstance& t) {
  check_mask_size(t.n);
  Decomposition d;
  if (t.n == 0) return d;

  d.blocks = Tarjan(t).run();
  std::reverse(d.blocks.begin(), d.blocks.end());
  for (auto& block : d.blocks) std::sort(block.begin(), block.end());

  // Every arc between blocks must point forward; anything else would
  // contradict the uniqueness of the decomposition.
  for (std::size_t i = 0; i < d.blocks.size(); ++i)
    for (std::size_t j = i + 1; j < d.blocks.size(); ++j)
      for (const int u : d.blocks[i])
        for (const int v : d.blocks[j])
          if (!t.points(u, v))
            throw ConsistencyError("cross arc " + std::to_string(v) + " -> " +
                                   std::to_string(u) + " points backward");
  return d;
}

std::map<int, std::uint64_t> component_histogram_exhaustive(InstanceKind kind, int n,
                                                            bool allow_n7) {
  check_enumeration_cap(n, allow_n7);
  std::map<int, std::uint64_t> histogram;
  if (n == 0) {
    histogram[0] = 1;
    return histogram;
  }
  for (int m = 1; m <= n; ++m) histogram[m] = 0;
  const std::uint64_t masks = std::uint64_t{1} << pair_count(n);
  if (kind == InstanceKind::kGraph) {
    DisjointSet dsu(n);
    for (std::uint64_t mask = 0; mask < masks; ++mask)
      ++histogram[graph_component_count(static_cast<std::uint32_t>(mask), n, dsu)];
  } else {
    for (std::uint64_t mask = 0; mask < masks; ++mask) {
      const TournamentInstance t{n, static_cast<std::uint32_t>(mask)};
      ++histogram[static_cast<int>(decompose_tournament(t).blocks.size())];
    }
  }
  return histogram;
}

McResult mc_estimate(InstanceKind kind, int n, const Rational& p, std::uint64_t trials,
                     std::uint64_t seed) {
  if (n < 1) throw UsageError("Monte Carlo needs n >= 1");
  if (trials < 1) throw UsageError("Monte Carlo needs trials >= 1");
  if (!(Rational(0) < p && p < Rational(1)))
    throw DomainError("edge probability must satisfy 0 < p < 1, got " + p.to_string());
  if (kind == InstanceKind::kTournament && p != Rational(1, 2))
    throw DomainError("tournament sampling is defined for p = 1/2 only");
  if (n > 64) throw ResourceError("Monte Carlo supports n <= 64, got n = " + std::to_string(n));
  if (trials > 1000000000ULL)
    throw ResourceError("Monte Carlo supports at most 10^9 trials");
  const std::uint64_t draws = trials * static_cast<std::uint64_t>(pair_count(n));
  if (draws > 1000000000ULL)
    throw ResourceError("trials * pairs = " + std::to_string(draws) +
                        " exceeds the 10^9 draw budget");

  const Int num_z = p.numerator();
  const Int den_z = p.denominator();
  if (!mpz_fits_ulong_p(den_z.get_mpz_t()))
    throw ResourceError("edge probability denominator too large for the sampler");
  const std::uint64_t num = mpz_get_ui(num_z.get_mpz_t());
  const std::uint64_t den = mpz_get_ui(den_z.get_mpz_t());

  std::mt19937_64 gen(seed);
  std::uint64_t successes = 0;

  if (kind == InstanceKind::kGraph) {
    DisjointSet dsu(n);
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      dsu.reset(n);
      for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v)
          if (bounded_uniform(gen, den) < num) dsu.unite(u, v);
      if (dsu.set_count() == 1) ++successes;
    }
  } else {
    const std::uint64_t full = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
    std::vector<std::uint64_t> out(static_cast<std::size_t>(n));
    std::vector<std::uint64_t> in(static_cast<std::size_t>(n));
    const auto reaches_all = [&](const std::vector<std::uint64_t>& adj) {
      std::uint64_t reach = 1, frontier = 1;
      while (frontier != 0) {
        std::uint64_t next = 0;
        for (int u = 0; u < n; ++u)
          if ((frontier >> u) & 1U) next |= adj[u];
        next &= ~reach;
        reach |= next;
        frontier = next;
      }
      return reach == full;
    };
    for (std::uint64_t trial = 0; trial < trials; ++trial) {
      std::fill(out.begin(), out.end(), 0);
      std::fill(in.begin(), in.end(), 0);
      for (int u = 0; u + 1 < n; ++u)
        for (int v = u + 1; v < n; ++v) {
          if (bounded_uniform(gen, 2) != 0) {
            out[u] |= std::uint64_t{1} << v;
            in[v] |= std::uint64_t{1} << u;
          } else {
            out[v] |= std::uint64_t{1} << u;
            in[u] |= std::uint64_t{1} << v;
          }
        }
      if (reaches_all(out) && reaches_all(in)) ++successes;
    }
  }

  McResult result;
  result.successes = successes;
  result.trials = trials;
  result.estimate = Rational(Int(static_cast<unsigned long>(successes)),
                             Int(static_cast<unsigned long>(trials)));
  const double phat = static_cast<double>(successes) / static_cast<double>(trials);
  result.std_error = std::sqrt(phat * (1.0 - phat) / static_cast<double>(trials));
  return result;
}

}  // namespace connasym::oracle
