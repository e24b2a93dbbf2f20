#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "xist/vertex_set.hpp"

namespace xist {

struct Edge {
  Vertex u;
  Vertex v;
  double w;
};

struct Neighbor {
  Vertex v;
  double w;
};

/// Simple undirected graph with strictly positive symmetric weights and no
/// self-loops. Immutable after construction; adjacency lists are sorted by
/// neighbour id so every traversal order is independent of input order.
class WeightedGraph {
 public:
  WeightedGraph() = default;

  std::size_t num_vertices() const noexcept { return adjacency_.size(); }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  /// Edges with u < v, sorted lexicographically.
  std::span<const Edge> edges() const noexcept { return edges_; }
  std::span<const Neighbor> neighbors(Vertex v) const {
    return adjacency_.at(v);
  }

  double degree(Vertex v) const;
  double total_edge_weight() const noexcept { return total_weight_; }

  /// Number of self-loops and zero-weight entries dropped at construction.
  std::size_t dropped_self_loops() const noexcept { return dropped_loops_; }
  std::size_t dropped_zero_weights() const noexcept { return dropped_zeros_; }

  friend WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges);

 private:
  std::vector<Edge> edges_;
  std::vector<std::vector<Neighbor>> adjacency_;
  std::vector<double> degree_;
  double total_weight_ = 0.0;
  std::size_t dropped_loops_ = 0;
  std::size_t dropped_zeros_ = 0;
};

/// Duplicate unordered pairs are merged by summing their weights; self-loops
/// and zero weights are dropped. Throws NegativeWeight / VertexOutOfRange.
WeightedGraph build_graph(std::size_t n, std::span<const Edge> edges);

inline double degree(const WeightedGraph &g, Vertex v) { return g.degree(v); }

/// Vertices whose degree dominates every neighbour's, ascending by id.
/// Isolated vertices qualify.
std::vector<Vertex> local_maxima(const WeightedGraph &g);

double vol(const WeightedGraph &g, const VertexSet &s);

/// Induced subgraph together with the map from local to original ids.
struct Subgraph {
  WeightedGraph graph;
  std::vector<Vertex> original;

  /// Lift a set over the subgraph's vertices back to the parent universe.
  VertexSet lift(const VertexSet &local, std::size_t parent_universe) const;
};

Subgraph restrict(const WeightedGraph &g, const VertexSet &s);

/// Components ordered by their smallest vertex.
std::vector<VertexSet> connected_components(const WeightedGraph &g);
bool is_connected(const WeightedGraph &g);

WeightedGraph scale_weights(const WeightedGraph &g, double c);

}  // namespace xist
