#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "xist/cuts.hpp"
#include "xist/graph.hpp"
#include "xist/vertex_set.hpp"

namespace xist {

enum class SweepStatus {
  Ok,
  /// Input graph is disconnected; the result is a zero-valued component cut
  /// and no flow was computed.
  Disconnected,
  /// Only one terminal is available, so no pair can be cut. The partition
  /// is empty and the value is +∞. Callers may retry with all vertices.
  DegenerateVloc,
};

const char *to_string(SweepStatus status);

/// One pass of the terminal loop. Indices refer to positions in
/// SweepResult::terminals.
struct SweepIteration {
  std::size_t index = 0;
  Vertex s = 0;
  Vertex t = 0;
  double mincut_value = 0.0;
  double xcut_value = 0.0;
  std::vector<std::size_t> tau;
};

struct SweepResult {
  SweepStatus status = SweepStatus::Ok;
  CutResult cut;
  /// Terminal vertices in sweep order (ascending id).
  std::vector<Vertex> terminals;
  /// Xist only: tau[i] is the terminal index i was cut against; tau[0] = 0.
  /// The pairs (i, tau[i]) with weights tree_weight[i] form a flow-equivalent
  /// tree over the terminals.
  std::vector<std::size_t> tau;
  std::vector<double> tree_weight;
  std::size_t flow_calls = 0;
  std::vector<SweepIteration> trace;
};

struct SweepOptions {
  bool record_trace = false;
};

/// Minimum XCut over the source-side minimal st-MinCut partitions of every
/// unordered terminal pair, by brute force over all pairs of `subset`
/// (default V). Ties go to the lexicographically smallest (s, t). Pairs are
/// evaluated in parallel with a deterministic reduction.
SweepResult xvst_basic(const WeightedGraph &g, CutKind kind,
                       const std::optional<VertexSet> &subset = std::nullopt);

/// Sequential reference for xvst_basic; identical output.
SweepResult xvst_basic_serial(const WeightedGraph &g, CutKind kind,
                              const std::optional<VertexSet> &subset =
                                  std::nullopt);

/// Xist: the st-MinCut sweep over the local maxima of g, choosing terminal
/// pairs through the tau vector of Gusfield's uncontracted Gomory-Hu scheme.
/// Makes exactly |V_loc| - 1 flow calls.
SweepResult xist(const WeightedGraph &g, CutKind kind,
                 const SweepOptions &options = {});

/// Xist with an arbitrary terminal set (|subset| >= 2) in place of V_loc.
SweepResult xist_on_subset(const WeightedGraph &g, CutKind kind,
                           const VertexSet &subset,
                           const SweepOptions &options = {});

/// xist, falling back to xvst_basic over all vertices when V_loc is a
/// single vertex. Graphs with fewer than two vertices stay DegenerateVloc.
SweepResult xist_with_fallback(const WeightedGraph &g, CutKind kind,
                               const SweepOptions &options = {});

}  // namespace xist
