#pragma once

#include <cstddef>
#include <utility>
#include <vector>

namespace chromabij::detail {

/// Path-compressing union-find for one-shot connectivity queries.
class UnionFind {
 public:
  explicit UnionFind(int n) : parent_(n) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) {
    while (parent_[v] != v) {
      parent_[v] = parent_[parent_[v]];
      v = parent_[v];
    }
    return v;
  }

  /// Returns true when the two vertices were in different components.
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<int> parent_;
};

/// Union by size without path compression, so unions can be undone in LIFO
/// order during backtracking enumerations.
class RollbackUnionFind {
 public:
  explicit RollbackUnionFind(int n) : parent_(n), size_(n, 1) {
    for (int v = 0; v < n; ++v) parent_[v] = v;
  }

  int find(int v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool connected(int a, int b) const { return find(a) == find(b); }

  /// Returns true when a real union happened (and was logged).
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (size_[a] > size_[b]) std::swap(a, b);
    parent_[a] = b;
    size_[b] += size_[a];
    log_.emplace_back(a, b);
    return true;
  }

  /// Component size of the root `r`.
  int size_of_root(int r) const { return size_[r]; }

  std::size_t mark() const { return log_.size(); }

  void rollback_to(std::size_t mark) {
    while (log_.size() > mark) {
      auto [child, parent] = log_.back();
      log_.pop_back();
      parent_[child] = child;
      size_[parent] -= size_[child];
    }
  }

 private:
  std::vector<int> parent_;
  std::vector<int> size_;
  std::vector<std::pair<int, int>> log_;
};

}  // namespace chromabij::detail
