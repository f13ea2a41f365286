#include "kcf/graph.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>

namespace kcf {

Edge::Edge(vertex_id a, vertex_id b, double weight) : u(a), v(b), w(weight) {
  if (u > v) std::swap(u, v);
}

bool edge_order(const Edge& a, const Edge& b) {
  if (a.w != b.w) return a.w < b.w;
  if (a.u != b.u) return a.u < b.u;
  return a.v < b.v;
}

void validate(const WeightedGraph& g) {
  std::unordered_set<std::uint64_t> seen;
  seen.reserve(g.edges.size());
  for (std::size_t i = 0; i < g.edges.size(); ++i) {
    const Edge& e = g.edges[i];
    const std::string where = "edge #" + std::to_string(i) + " (" + std::to_string(e.u) +
                              "," + std::to_string(e.v) + ")";
    if (e.u >= g.n_vertices || e.v >= g.n_vertices)
      throw std::invalid_argument(where + ": endpoint out of range");
    if (e.u == e.v) throw std::invalid_argument(where + ": self-loop");
    if (!std::isfinite(e.w) || e.w < 0.0)
      throw std::invalid_argument(where + ": weight must be finite and >= 0");
    const std::uint64_t key =
        (static_cast<std::uint64_t>(e.u) << 32) | static_cast<std::uint64_t>(e.v);
    if (!seen.insert(key).second)
      throw std::invalid_argument(where + ": duplicate undirected edge");
  }
}

std::vector<Edge> sorted_edges(const WeightedGraph& g) {
  std::vector<Edge> out = g.edges;
  std::sort(out.begin(), out.end(), edge_order);
  return out;
}

WeightedGraph scale_weights(const WeightedGraph& g, double c) {
  if (!(c > 0.0)) throw std::invalid_argument("scale factor must be > 0");
  WeightedGraph out = g;
  for (Edge& e : out.edges) e.w *= c;
  return out;
}

}  // namespace kcf
