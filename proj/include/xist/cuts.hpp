#pragma once

#include <span>
#include <string_view>
#include <optional>

#include "xist/graph.hpp"
#include "xist/vertex_set.hpp"

namespace xist {

/// Balancing term of a graph cut:
///   MinCut     1
///   RatioCut   |S| |S̄|
///   NCut       vol(S) vol(S̄)
///   CheegerCut min(vol(S), vol(S̄))
enum class CutKind { MinCut, RatioCut, NCut, CheegerCut };

std::string_view to_string(CutKind kind);
/// Accepts "mincut", "ratio", "ncut", "cheeger".
std::optional<CutKind> parse_cut_kind(std::string_view name);

struct CutResult {
  CutKind kind = CutKind::NCut;
  double value = 0.0;
  VertexSet partition;
  double normalized_value = 0.0;
};

/// Σ w_ij over i ∈ S, j ∉ S with each unordered edge counted once. No
/// properness check; a trivial S yields 0.
double crossing_weight(const WeightedGraph &g, const VertexSet &s);

/// crossing_weight for a proper S; throws DegeneratePartition otherwise.
double cut_weight(const WeightedGraph &g, const VertexSet &s);

/// Throws DegeneratePartition for improper S. A zero balance is returned
/// as-is; xcut_value maps it to +∞.
double balance(const WeightedGraph &g, CutKind kind, const VertexSet &s);

/// Balancing term of the pair (T, T) on g, e.g. vol(T)² for NCut.
double self_balance(const WeightedGraph &g, CutKind kind, const VertexSet &t);

/// cut_weight / balance, or +∞ when the balance vanishes.
double xcut_value(const WeightedGraph &g, CutKind kind, const VertexSet &s);

/// Factor bal(V, V) / vol(V) that makes cut values invariant under weight
/// scaling. vol(V) is the ordered-pair weight sum Σ_{i,j} w_ij.
double normalization_factor(const WeightedGraph &g, CutKind kind);

double normalized_xcut_value(const WeightedGraph &g, CutKind kind,
                             const VertexSet &s);

/// Assembles a CutResult with both raw and normalized values. The partition
/// is oriented to contain vertex 0.
CutResult make_cut_result(const WeightedGraph &g, CutKind kind, VertexSet s);

/// (1/2) Σ_i xcut_value(T_i) over a partition of V into k >= 2 nonempty
/// parts. Throws NotAPartition.
double multiway_xcut_value(const WeightedGraph &g, CutKind kind,
                           std::span<const VertexSet> parts);

}  // namespace xist
