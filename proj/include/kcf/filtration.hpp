#pragma once

#include <limits>
#include <vector>

#include "kcf/graph.hpp"

namespace kcf {

inline constexpr double kInf = std::numeric_limits<double>::infinity();

enum class FiltrationKind { k_cluster, k_degree, standard };

/// A sublevel filtration on a graph: a value in [0, inf] for every vertex and
/// every edge, with edge values >= the values of their endpoints. Edge values
/// are stored parallel to the owning graph's edge list.
struct FiltrationAssignment {
  FiltrationKind kind = FiltrationKind::standard;
  unsigned k = 1;
  std::vector<double> vertex_values;
  std::vector<double> edge_values;
};

/// Edge values from vertex values by the max-rule: value(e) =
/// max(value(u), value(v), W(e)).
std::vector<double> edge_values_from_vertices(const WeightedGraph& g,
                                              const std::vector<double>& vertex_values);

struct FinitePoint {
  double birth = 0.0;
  double death = 0.0;
  vertex_id representative = 0;

  friend bool operator==(const FinitePoint&, const FinitePoint&) = default;
};

struct EssentialPoint {
  double birth = 0.0;
  vertex_id representative = 0;

  friend bool operator==(const EssentialPoint&, const EssentialPoint&) = default;
};

/// 0-dimensional persistence diagram. Finite points are sorted by
/// (birth, death, representative) and essential points by (birth,
/// representative), so diagrams compare with ==.
struct PersistenceDiagram {
  unsigned k = 1;
  std::vector<FinitePoint> finite;
  std::vector<EssentialPoint> essential;

  friend bool operator==(const PersistenceDiagram&, const PersistenceDiagram&) = default;
};

/// Edges of the minimum spanning forest, sorted by edge_order. One tree per
/// connected component of the input graph; identical for every k.
struct MinimumSpanningForest {
  std::vector<Edge> edges;
};

struct KClusterResult {
  PersistenceDiagram diagram;
  MinimumSpanningForest msf;
  FiltrationAssignment assignment;
};

/// One-pass computation of the k-cluster filtration, its 0-dimensional
/// persistence diagram and the minimum spanning forest. A component becomes
/// active when it first reaches k vertices; merges of two active components
/// produce finite diagram points under the elder rule, and every component
/// still active at the end contributes one essential point. Vertices whose
/// final component has fewer than k members keep value infinity.
/// Diagonal points (birth == death) are dropped unless keep_diagonal is set.
KClusterResult compute_k_cluster(const WeightedGraph& g, unsigned k,
                                 bool keep_diagonal = false);

/// The k-degree filtration: a vertex appears at its k-th smallest incident
/// edge weight (infinity when its degree is below k), edges by the max-rule.
FiltrationAssignment compute_k_degree(const WeightedGraph& g, unsigned k);

/// Standard 0-dimensional persistence of an arbitrary sublevel assignment,
/// processing cells in the total order (value, vertices before edges, id).
/// Cells with infinite value never enter the filtration. Throws
/// std::invalid_argument if the assignment violates the sublevel constraint.
PersistenceDiagram persistence_of_assignment(const WeightedGraph& g,
                                             const FiltrationAssignment& f,
                                             bool keep_diagonal = false);

}  // namespace kcf
