#include "xist/cuts.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "xist/error.hpp"

namespace xist {
namespace {

void require_proper(const WeightedGraph &g, const VertexSet &s) {
  if (s.universe() != g.num_vertices() || !s.is_proper())
    throw Error(ErrorCode::DegeneratePartition,
                "partition must be a proper nonempty subset (|S| = " +
                    std::to_string(s.size()) + ", n = " +
                    std::to_string(g.num_vertices()) + ")");
}

// Both sides summed directly so that swapping S and S̄ is exact.
std::pair<double, double> side_volumes(const WeightedGraph &g,
                                       const VertexSet &s) {
  double in = 0.0, out = 0.0;
  for (Vertex v = 0; v < g.num_vertices(); ++v)
    (s.contains(v) ? in : out) += g.degree(v);
  return {in, out};
}

}  // namespace

std::string_view to_string(CutKind kind) {
  switch (kind) {
    case CutKind::MinCut: return "mincut";
    case CutKind::RatioCut: return "ratio";
    case CutKind::NCut: return "ncut";
    case CutKind::CheegerCut: return "cheeger";
  }
  return "unknown";
}

std::optional<CutKind> parse_cut_kind(std::string_view name) {
  for (CutKind k : {CutKind::MinCut, CutKind::RatioCut, CutKind::NCut,
                    CutKind::CheegerCut})
    if (to_string(k) == name) return k;
  return std::nullopt;
}

double crossing_weight(const WeightedGraph &g, const VertexSet &s) {
  double total = 0.0;
  for (const Edge &e : g.edges())
    if (s.contains(e.u) != s.contains(e.v)) total += e.w;
  return total;
}

double cut_weight(const WeightedGraph &g, const VertexSet &s) {
  require_proper(g, s);
  return crossing_weight(g, s);
}

double balance(const WeightedGraph &g, CutKind kind, const VertexSet &s) {
  require_proper(g, s);
  switch (kind) {
    case CutKind::MinCut:
      return 1.0;
    case CutKind::RatioCut:
      return static_cast<double>(s.size()) *
             static_cast<double>(g.num_vertices() - s.size());
    case CutKind::NCut: {
      const auto [in, out] = side_volumes(g, s);
      return in * out;
    }
    case CutKind::CheegerCut: {
      const auto [in, out] = side_volumes(g, s);
      return std::min(in, out);
    }
  }
  return 1.0;
}

double self_balance(const WeightedGraph &g, CutKind kind, const VertexSet &t) {
  switch (kind) {
    case CutKind::MinCut:
      return 1.0;
    case CutKind::RatioCut:
      return static_cast<double>(t.size()) * static_cast<double>(t.size());
    case CutKind::NCut: {
      const double v = vol(g, t);
      return v * v;
    }
    case CutKind::CheegerCut:
      return vol(g, t);
  }
  return 1.0;
}

double xcut_value(const WeightedGraph &g, CutKind kind, const VertexSet &s) {
  const double bal = balance(g, kind, s);
  if (bal <= 0.0) return std::numeric_limits<double>::infinity();
  return crossing_weight(g, s) / bal;
}

double normalization_factor(const WeightedGraph &g, CutKind kind) {
  const double total = 2.0 * g.total_edge_weight();
  if (total <= 0.0) return std::numeric_limits<double>::infinity();
  return self_balance(g, kind, VertexSet::full(g.num_vertices())) / total;
}

double normalized_xcut_value(const WeightedGraph &g, CutKind kind,
                             const VertexSet &s) {
  const double raw = xcut_value(g, kind, s);
  if (raw == 0.0) return 0.0;
  return raw * normalization_factor(g, kind);
}

CutResult make_cut_result(const WeightedGraph &g, CutKind kind, VertexSet s) {
  CutResult r;
  r.kind = kind;
  r.value = xcut_value(g, kind, s);
  r.normalized_value =
      r.value == 0.0 ? 0.0 : r.value * normalization_factor(g, kind);
  // Report the side holding vertex 0; every balancing term is symmetric.
  r.partition = s.contains(0) ? std::move(s) : s.complement();
  return r;
}

double multiway_xcut_value(const WeightedGraph &g, CutKind kind,
                           std::span<const VertexSet> parts) {
  const std::size_t n = g.num_vertices();
  if (parts.size() < 2)
    throw Error(ErrorCode::NotAPartition, "need at least two parts");
  std::vector<int> owner(n, 0);
  for (const VertexSet &p : parts) {
    if (p.universe() != n || p.empty())
      throw Error(ErrorCode::NotAPartition, "parts must be nonempty subsets of V");
    for (Vertex v : p.members())
      if (owner[v]++)
        throw Error(ErrorCode::NotAPartition,
                    "vertex " + std::to_string(v) + " lies in two parts");
  }
  if (std::find(owner.begin(), owner.end(), 0) != owner.end())
    throw Error(ErrorCode::NotAPartition, "parts do not cover V");

  double total = 0.0;
  for (const VertexSet &p : parts) total += xcut_value(g, kind, p);
  return 0.5 * total;
}

}  // namespace xist
