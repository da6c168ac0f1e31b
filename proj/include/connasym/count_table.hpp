#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "connasym/rational.hpp"
#include "connasym/series.hpp"

namespace connasym {

// Named integer sequence, indexed contiguously from n = 0.
struct CountTable {
  std::string name;
  std::vector<Int> counts;

  const Int& at(std::size_t n) const {
    if (n >= counts.size())
      throw UsageError("count table '" + name + "' has no entry for n = " + std::to_string(n));
    return counts[n];
  }
  std::size_t max_index() const { return counts.empty() ? 0 : counts.size() - 1; }
};

// Reads off n! * [z^n] a for n = 0..order. Every value must be an integer;
// a fractional value means an upstream bug and raises ConsistencyError.
CountTable egf_counts(const TruncatedSeries<Rational>& a, std::string name);

}  // namespace connasym
