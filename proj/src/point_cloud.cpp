#include "kcf/point_cloud.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace kcf {

void PointCloud::push_point(std::span<const double> p) {
  if (dim == 0) dim = p.size();
  if (p.size() != dim) throw std::invalid_argument("point dimension mismatch");
  coords.insert(coords.end(), p.begin(), p.end());
}

double PointCloud::distance(std::size_t i, std::size_t j) const {
  const double* a = coords.data() + i * dim;
  const double* b = coords.data() + j * dim;
  double sq = 0.0;
  if (metric == Metric::torus) {
    for (std::size_t c = 0; c < dim; ++c) {
      double d = std::fabs(a[c] - b[c]);
      d = std::min(d, torus_side - d);  // minimal image
      sq += d * d;
    }
  } else {
    for (std::size_t c = 0; c < dim; ++c) {
      const double d = a[c] - b[c];
      sq += d * d;
    }
  }
  return std::sqrt(sq);
}

void validate(const PointCloud& pc) {
  if (pc.dim < 1) throw std::invalid_argument("point cloud dimension must be >= 1");
  if (pc.coords.size() % pc.dim != 0)
    throw std::invalid_argument("coordinate count is not a multiple of the dimension");
  for (double c : pc.coords)
    if (!std::isfinite(c)) throw std::invalid_argument("non-finite coordinate");
  if (pc.metric == Metric::torus) {
    if (!(pc.torus_side > 0.0))
      throw std::invalid_argument("torus side length must be > 0");
    for (double c : pc.coords)
      if (c < 0.0 || c >= pc.torus_side)
        throw std::invalid_argument("torus coordinates must lie in [0, side)");
  }
}

WeightedGraph point_cloud_to_graph(const PointCloud& pc, GraphMode mode,
                                   std::size_t knn_m) {
  validate(pc);
  const std::size_t n = pc.n_points();
  if (n < 1) throw std::invalid_argument("point cloud must contain at least one point");
  WeightedGraph g(static_cast<vertex_id>(n));

  if (mode == GraphMode::complete) {
    g.edges.reserve(n * (n - 1) / 2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        g.add_edge(static_cast<vertex_id>(i), static_cast<vertex_id>(j),
                   pc.distance(i, j));
    return g;
  }

  if (knn_m < 1 || knn_m >= n)
    throw std::invalid_argument("knn mode requires 1 <= m < n_points, got m=" +
                                std::to_string(knn_m));
  // Symmetrized m-nearest-neighbor graph; ties broken by point index.
  std::vector<std::pair<double, std::size_t>> dists(n - 1);
  std::vector<std::vector<std::pair<std::size_t, double>>> nbrs(n);
  for (std::size_t i = 0; i < n; ++i) {
    dists.clear();
    for (std::size_t j = 0; j < n; ++j)
      if (j != i) dists.emplace_back(pc.distance(i, j), j);
    std::partial_sort(dists.begin(), dists.begin() + static_cast<std::ptrdiff_t>(knn_m),
                      dists.end());
    for (std::size_t t = 0; t < knn_m; ++t)
      nbrs[i].emplace_back(dists[t].second, dists[t].first);
  }
  for (std::size_t i = 0; i < n; ++i)
    for (auto [j, d] : nbrs[i]) {
      if (j < i) {
        // Keep (j, i) only if i is not among j's neighbors, so each pair
        // appears once.
        bool mutual = false;
        for (auto [jj, dd] : nbrs[j])
          if (jj == i) { mutual = true; break; }
        if (mutual) continue;
      }
      g.add_edge(static_cast<vertex_id>(std::min(i, j)),
                 static_cast<vertex_id>(std::max(i, j)), d);
    }
  return g;
}

}  // namespace kcf
