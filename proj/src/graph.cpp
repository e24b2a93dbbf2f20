#include "xist/graph.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <utility>

#include "xist/error.hpp"

namespace xist {

// ---------------------------------------------------------------------------
// VertexSet

VertexSet::VertexSet(std::size_t universe, std::span<const Vertex> members)
    : bits_(universe, 0) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : bits_(universe, 0) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.bits_.begin(), s.bits_.end(), std::uint8_t{1});
  s.count_ = universe;
  return s;
}

VertexSet VertexSet::from_mask(std::size_t universe, std::uint64_t mask) {
  if (universe > 64)
    throw Error(ErrorCode::TooLarge, "bitmask sets hold at most 64 vertices");
  VertexSet s(universe);
  for (std::size_t i = 0; i < universe; ++i)
    if ((mask >> i) & 1u) s.insert(static_cast<Vertex>(i));
  return s;
}

void VertexSet::insert(Vertex v) {
  if (v >= bits_.size())
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not below " +
                    std::to_string(bits_.size()));
  if (!bits_[v]) {
    bits_[v] = 1;
    ++count_;
  }
}

void VertexSet::erase(Vertex v) {
  if (v < bits_.size() && bits_[v]) {
    bits_[v] = 0;
    --count_;
  }
}

VertexSet VertexSet::complement() const {
  VertexSet c(bits_.size());
  for (std::size_t i = 0; i < bits_.size(); ++i) c.bits_[i] = bits_[i] ? 0 : 1;
  c.count_ = bits_.size() - count_;
  return c;
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(count_);
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) out.push_back(static_cast<Vertex>(i));
  return out;
}

std::uint64_t VertexSet::mask() const {
  if (bits_.size() > 64)
    throw Error(ErrorCode::TooLarge, "bitmask sets hold at most 64 vertices");
  std::uint64_t m = 0;
  for (std::size_t i = 0; i < bits_.size(); ++i)
    if (bits_[i]) m |= std::uint64_t{1} << i;
  return m;
}

// ---------------------------------------------------------------------------
// WeightedGraph

WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges) {
  WeightedGraph g;
  std::map<std::pair<Vertex, Vertex>, double> merged;
  for (const Edge &e : edges) {
    if (e.u >= n || e.v >= n)
      throw Error(ErrorCode::VertexOutOfRange,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") in a graph of " + std::to_string(n) + " vertices");
    if (e.w < 0.0)
      throw Error(ErrorCode::NegativeWeight,
                  "edge (" + std::to_string(e.u) + ", " + std::to_string(e.v) +
                      ") has weight " + std::to_string(e.w));
    if (e.u == e.v) {
      ++g.dropped_loops_;
      continue;
    }
    if (e.w == 0.0) {
      ++g.dropped_zeros_;
      continue;
    }
    merged[std::minmax(e.u, e.v)] += e.w;
  }

  g.adjacency_.assign(n, {});
  g.degree_.assign(n, 0.0);
  g.edges_.reserve(merged.size());
  for (const auto &[key, w] : merged) {
    auto [u, v] = key;
    g.edges_.push_back({u, v, w});
    g.adjacency_[u].push_back({v, w});
    g.adjacency_[v].push_back({u, w});
    g.total_weight_ += w;
  }
  for (std::size_t v = 0; v < n; ++v) {
    auto &adj = g.adjacency_[v];
    std::sort(adj.begin(), adj.end(),
              [](const Neighbor &a, const Neighbor &b) { return a.v < b.v; });
    double d = 0.0;
    for (const Neighbor &nb : adj) d += nb.w;
    g.degree_[v] = d;
  }
  return g;
}

double WeightedGraph::degree(Vertex v) const {
  if (v >= degree_.size())
    throw Error(ErrorCode::VertexOutOfRange,
                "vertex " + std::to_string(v) + " not below " +
                    std::to_string(degree_.size()));
  return degree_[v];
}

std::vector<Vertex> local_maxima(const WeightedGraph &g) {
  std::vector<Vertex> out;
  for (Vertex u = 0; u < g.num_vertices(); ++u) {
    const double du = g.degree(u);
    bool dominant = true;
    for (const Neighbor &nb : g.neighbors(u)) {
      if (g.degree(nb.v) > du) {
        dominant = false;
        break;
      }
    }
    if (dominant) out.push_back(u);
  }
  return out;
}

double vol(const WeightedGraph &g, const VertexSet &s) {
  double total = 0.0;
  for (Vertex v : s.members()) total += g.degree(v);
  return total;
}

VertexSet Subgraph::lift(const VertexSet &local,
                         std::size_t parent_universe) const {
  VertexSet out(parent_universe);
  for (Vertex v : local.members()) out.insert(original.at(v));
  return out;
}

Subgraph restrict(const WeightedGraph &g, const VertexSet &s) {
  if (s.empty()) throw Error(ErrorCode::EmptySet, "cannot restrict to ∅");
  Subgraph sub;
  sub.original = s.members();
  std::vector<Vertex> local(g.num_vertices(), 0);
  for (std::size_t i = 0; i < sub.original.size(); ++i)
    local[sub.original[i]] = static_cast<Vertex>(i);

  std::vector<Edge> kept;
  for (const Edge &e : g.edges())
    if (s.contains(e.u) && s.contains(e.v))
      kept.push_back({local[e.u], local[e.v], e.w});
  sub.graph = build_graph(sub.original.size(), kept);
  return sub;
}

std::vector<VertexSet> connected_components(const WeightedGraph &g) {
  const std::size_t n = g.num_vertices();
  std::vector<int> seen(n, 0);
  std::vector<VertexSet> out;
  std::vector<Vertex> stack;
  for (Vertex root = 0; root < n; ++root) {
    if (seen[root]) continue;
    VertexSet comp(n);
    seen[root] = 1;
    stack.push_back(root);
    while (!stack.empty()) {
      Vertex u = stack.back();
      stack.pop_back();
      comp.insert(u);
      for (const Neighbor &nb : g.neighbors(u)) {
        if (!seen[nb.v]) {
          seen[nb.v] = 1;
          stack.push_back(nb.v);
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool is_connected(const WeightedGraph &g) {
  return connected_components(g).size() <= 1;
}

WeightedGraph scale_weights(const WeightedGraph &g, double c) {
  if (!(c > 0.0))
    throw Error(ErrorCode::NonPositiveScale,
                "scale factor must be positive, got " + std::to_string(c));
  std::vector<Edge> scaled(g.edges().begin(), g.edges().end());
  for (Edge &e : scaled) e.w *= c;
  return build_graph(g.num_vertices(), scaled);
}

}  // namespace xist
