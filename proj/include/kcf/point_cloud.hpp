#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "kcf/graph.hpp"

namespace kcf {

enum class Metric { euclidean, torus };

/// Points in R^d (or the flat torus of a given side length), stored row-major.
struct PointCloud {
  std::size_t dim = 0;
  Metric metric = Metric::euclidean;
  double torus_side = 1.0;
  std::vector<double> coords;  // size() == n_points() * dim

  std::size_t n_points() const { return dim == 0 ? 0 : coords.size() / dim; }

  std::span<const double> point(std::size_t i) const {
    return {coords.data() + i * dim, dim};
  }

  void push_point(std::span<const double> p);

  double distance(std::size_t i, std::size_t j) const;
};

/// Checks dimension >= 1, consistent coordinate count, and (for the torus
/// metric) all coordinates in [0, side). Throws std::invalid_argument.
void validate(const PointCloud& pc);

enum class GraphMode { complete, knn };

/// Turns a point cloud into a weighted graph of pairwise distances.
/// complete: all n(n-1)/2 pairs. knn: the symmetrized m-nearest-neighbor
/// graph; requires 1 <= m < n. The knn graph is an approximation for
/// filtration purposes: death times are only exact when the graph contains the
/// Euclidean MST.
WeightedGraph point_cloud_to_graph(const PointCloud& pc, GraphMode mode,
                                   std::size_t knn_m = 0);

}  // namespace kcf
