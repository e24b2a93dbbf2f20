#pragma once

#include "xist/graph.hpp"
#include "xist/vertex_set.hpp"

namespace xist {

/// Residual capacities at or below this are treated as saturated.
inline constexpr double kResidualEpsilon = 1e-12;

struct StMinCut {
  /// Crossing weight of side_s, recomputed from the graph.
  double value = 0.0;
  /// Vertices reachable from s in the final residual network: the unique
  /// inclusion-minimal minimum cut containing s.
  VertexSet side_s;
};

/// Exact s-t minimum cut via blocking flows on level graphs. Allocates its
/// own residual network, so concurrent calls on a shared graph are safe.
/// Pairs in different components yield value 0 and the component of s.
StMinCut st_min_cut(const WeightedGraph &g, Vertex s, Vertex t);

/// Value of a maximum s-t flow, as accumulated by the augmenting phases.
double max_flow_value(const WeightedGraph &g, Vertex s, Vertex t);

}  // namespace xist
