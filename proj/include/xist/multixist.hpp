#pragma once

#include <cstddef>
#include <vector>

#include "xist/cuts.hpp"
#include "xist/graph.hpp"
#include "xist/vertex_set.hpp"

namespace xist {

enum class MultiStatus {
  Ok,
  /// Every remaining cluster is unsplittable before k clusters exist.
  UnreachableK,
};

/// One greedy step: the cluster held in `slot` (the union of `first` and
/// `second`) is replaced by those halves. Each half's own pending split is
/// priced at `first_cost` / `second_cost`.
struct MultiStep {
  std::size_t slot = 0;
  std::size_t new_slot = 0;
  /// Pending costs of every slot just before selection.
  std::vector<double> pending_costs;
  VertexSet first;
  VertexSet second;
  double first_cost = 0.0;
  double second_cost = 0.0;
};

struct MultiCutResult {
  MultiStatus status = MultiStatus::Ok;
  /// Nonempty clusters ordered by their smallest vertex.
  std::vector<VertexSet> clusters;
  /// labels[v] is the index of v's cluster.
  std::vector<int> labels;
  std::vector<MultiStep> trace;
};

/// Greedy k-way partition: repeatedly split the cluster whose pending Xist
/// cut has the smallest normalized cost
///   r' = r · bal_sub(T, T) / Σ_{i,j ∈ V} w_ij
/// where r is the XCut of T's Xist split on the induced subgraph and the
/// denominator is taken over the whole graph. Throws TooManyClusters when
/// k > n and PreconditionViolated when k < 2.
MultiCutResult multi_xist(const WeightedGraph &g, CutKind kind, std::size_t k);

}  // namespace xist
