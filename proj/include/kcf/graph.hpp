#pragma once

#include <cstdint>
#include <vector>

namespace kcf {

using vertex_id = std::uint32_t;

/// Undirected weighted edge. Endpoints are kept normalized (u < v) so that
/// the pair identifies the edge uniquely.
struct Edge {
  vertex_id u = 0;
  vertex_id v = 0;
  double w = 0.0;

  Edge() = default;
  Edge(vertex_id a, vertex_id b, double weight);

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Total order on edges: (weight, min endpoint, max endpoint). Weight ties are
/// broken by the endpoints, so sorting is deterministic even for degenerate
/// weight assignments.
bool edge_order(const Edge& a, const Edge& b);

struct WeightedGraph {
  vertex_id n_vertices = 0;
  std::vector<Edge> edges;

  WeightedGraph() = default;
  explicit WeightedGraph(vertex_id n) : n_vertices(n) {}

  void add_edge(vertex_id u, vertex_id v, double w) { edges.emplace_back(u, v, w); }
};

/// Checks the graph invariants: endpoints in range, no self-loops, no
/// duplicate undirected edges, weights finite and nonnegative.
/// Throws std::invalid_argument naming the first offending edge.
void validate(const WeightedGraph& g);

/// Copy of the edge list sorted by edge_order.
std::vector<Edge> sorted_edges(const WeightedGraph& g);

/// Rescales every edge weight by c > 0.
WeightedGraph scale_weights(const WeightedGraph& g, double c);

}  // namespace kcf
