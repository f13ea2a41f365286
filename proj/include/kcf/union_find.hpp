#pragma once

#include <limits>
#include <vector>

#include "kcf/graph.hpp"

namespace kcf {

/// Disjoint sets over vertices 0..n-1 with component-member traversal and a
/// per-root birth value. Union by size (ties go to the smaller root id) and no
/// path compression: the parent tree plus explicit child lists is what makes
/// component() possible, and each vertex is enumerated at most once per
/// activation so the total traversal cost stays linear.
class AugmentedUnionFind {
 public:
  explicit AugmentedUnionFind(vertex_id n)
      : parent_(n), size_(n, 1), children_(n),
        birth_(n, std::numeric_limits<double>::infinity()) {
    for (vertex_id v = 0; v < n; ++v) parent_[v] = v;
  }

  vertex_id root(vertex_id v) const {
    while (parent_[v] != v) v = parent_[v];
    return v;
  }

  bool same_set(vertex_id u, vertex_id v) const { return root(u) == root(v); }

  vertex_id size(vertex_id v) const { return size_[root(v)]; }

  /// Unions the sets of u and v; returns the root of the merged set.
  /// Precondition: root(u) != root(v).
  vertex_id merge(vertex_id u, vertex_id v) {
    vertex_id ru = root(u);
    vertex_id rv = root(v);
    if (size_[ru] < size_[rv] || (size_[ru] == size_[rv] && rv < ru)) std::swap(ru, rv);
    parent_[rv] = ru;
    children_[ru].push_back(rv);
    size_[ru] += size_[rv];
    return ru;
  }

  /// All vertices in the same set as v, via depth-first traversal of the
  /// parent tree from the root.
  std::vector<vertex_id> component(vertex_id v) const {
    std::vector<vertex_id> out;
    out.reserve(size(v));
    std::vector<vertex_id> stack{root(v)};
    while (!stack.empty()) {
      const vertex_id x = stack.back();
      stack.pop_back();
      out.push_back(x);
      for (vertex_id c : children_[x]) stack.push_back(c);
    }
    return out;
  }

  /// Birth value stored at the root of v's set (infinity until assigned).
  double birth(vertex_id v) const { return birth_[root(v)]; }
  void set_birth(vertex_id root_vertex, double value) { birth_[root_vertex] = value; }

  vertex_id n_vertices() const { return static_cast<vertex_id>(parent_.size()); }

 private:
  std::vector<vertex_id> parent_;
  std::vector<vertex_id> size_;
  std::vector<std::vector<vertex_id>> children_;
  std::vector<double> birth_;
};

}  // namespace kcf
