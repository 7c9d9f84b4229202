#pragma once

#include <cstddef>
#include <numeric>
#include <utility>
#include <vector>

namespace sphereint {

class DisjointSet {
 public:
  explicit DisjointSet(std::size_t size) : parent_(size), rank_(size, 0), count_(size) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  // Path halving.
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return;
    if (rank_[a] < rank_[b]) std::swap(a, b);
    parent_[b] = a;
    if (rank_[a] == rank_[b]) ++rank_[a];
    --count_;
  }

  std::size_t count() const noexcept { return count_; }

 private:
  std::vector<std::size_t> parent_;
  std::vector<int> rank_;
  std::size_t count_;
};

}  // namespace sphereint
