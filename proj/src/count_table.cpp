#include "connasym/count_table.hpp"

namespace connasym {

CountTable egf_counts(const TruncatedSeries<Rational>& a, std::string name) {
  std::vector<Int> counts;
  counts.reserve(a.order() + 1);
  for (unsigned n = 0; n <= a.order(); ++n) {
    const Rational v = Rational(factorial(n)) * a[n];
    if (!v.is_integer())
      throw ConsistencyError("egf_counts('" + name + "'): " + std::to_string(n) + "! * [z^" +
                             std::to_string(n) + "] = " + v.to_string() + " is not an integer");
    counts.push_back(v.numerator());
  }
  return CountTable{std::move(name), std::move(counts)};
}

}  // namespace connasym
