#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "xist/cuts.hpp"
#include "xist/graph.hpp"
#include "xist/vertex_set.hpp"

namespace xist::oracle {

/// Largest graph the exhaustive routines accept.
inline constexpr std::size_t kMaxEnumerationVertices = 16;

/// Global XCut minimum over all proper S ∋ 0 (complement symmetry makes this
/// lossless). Ties go to the smallest bitmask. Throws TooLarge for n > 16 and
/// SubsetTooSmall for n < 2. Masks are scanned in parallel.
CutResult exact_xcut(const WeightedGraph &g, CutKind kind);

/// Sequential reference for exact_xcut; identical output.
CutResult exact_xcut_serial(const WeightedGraph &g, CutKind kind);

struct StMinCutFamily {
  double value = 0.0;
  /// Every S with s ∈ S, t ∉ S attaining `value`, ascending by bitmask.
  std::vector<VertexSet> sets;
};

/// Minimum s-t cut by scanning all 2^(n-2) candidate sets. Sets within
/// 1e-9 (relative) of the minimum count as attaining it.
StMinCutFamily enumerate_st_mincuts(const WeightedGraph &g, Vertex s, Vertex t);

/// c(v_1, v_k) >= min_i c(v_i, v_{i+1}) with c the st-MinCut value.
bool check_path_inequality(const WeightedGraph &g,
                           std::span<const Vertex> sequence);

/// The smallest of c(s,t), c(s,v), c(v,t) occurs at least twice.
bool check_three_cut_nonuniqueness(const WeightedGraph &g, Vertex s, Vertex t,
                                   Vertex v);

/// For u, v on the source side of the computed st-MinCut, every uv-MinCut
/// S_uv can be uncrossed against S_st: S_st ∩ S_uv (t ∉ S_uv) or
/// S_st ∩ S̄_uv (t ∈ S_uv) is again a uv-MinCut. Throws
/// PreconditionViolated when u or v is not on the source side or the
/// vertices are not pairwise distinct.
bool check_noncrossing(const WeightedGraph &g, Vertex s, Vertex t, Vertex u,
                       Vertex v);

// ---------------------------------------------------------------------------
// Random instances and the property suite.

struct RandomGraphSpec {
  std::size_t n = 8;
  double edge_probability = 0.5;
  double min_weight = 0.5;
  double max_weight = 1.5;
  /// Draw integer weights in [min_weight, max_weight] to provoke ties.
  bool integer_weights = false;
};

/// G(n, p) with i.i.d. weights, redrawn until connected.
WeightedGraph random_connected_graph(const RandomGraphSpec &spec,
                                     std::mt19937_64 &rng);

/// min over pairs {s, t} ⊆ terminals of the best XCut among all attaining
/// st-MinCut sets, by enumeration.
double min_enumerated_pair_xcut(const WeightedGraph &g, CutKind kind,
                                std::span<const Vertex> terminals);

struct PropertyTally {
  std::string name;
  std::size_t checks = 0;
  std::size_t violations = 0;
  std::string first_failure;
};

struct PropertyReport {
  std::vector<PropertyTally> tallies;
  bool ok() const;
  std::size_t violations() const;
};

struct SuiteOptions {
  std::size_t min_n = 4;
  std::size_t max_n = 10;
  std::size_t trials = 100;
  std::uint64_t seed = 1;
};

/// Runs every executable property on `trials` random graphs: flow duality,
/// Xist against the enumerated pair minimum, call count, distinct-value
/// bound, flow-equivalent tree, the exact <= Xvst <= Xist chain and the
/// three min-cut structure checkers.
PropertyReport run_property_suite(const SuiteOptions &options);

}  // namespace xist::oracle
