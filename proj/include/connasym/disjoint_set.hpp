#pragma once

#include <numeric>
#include <vector>

namespace connasym {

// Union-find with path halving and union by size.
class DisjointSet {
 public:
  explicit DisjointSet(int n) { reset(n); }

  void reset(int n) {
    parent_.resize(static_cast<std::size_t>(n));
    size_.assign(static_cast<std::size_t>(n), 1);
    std::iota(parent_.begin(), parent_.end(), 0);
    count_ = n;
  }

  int find(int x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  // Returns true when two distinct sets were merged.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] < size_[b]) std::swap(a, b);
    parent_[b] = a;
    size_[a] += size_[b];
    --count_;
    return true;
  }

  int set_count() const { return count_; }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  int count_ = 0;
};

}  // namespace connasym
