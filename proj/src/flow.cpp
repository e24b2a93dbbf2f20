#include "xist/flow.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <vector>

#include "xist/cuts.hpp"
#include "xist/error.hpp"

namespace xist {
namespace {

// Residual network in CSR form. Every undirected edge {u, v} becomes the arc
// pair u->v and v->u, each carrying capacity w and serving as the other's
// reverse arc.
class Dinic {
 public:
  explicit Dinic(const WeightedGraph &g)
      : n_(g.num_vertices()), first_(n_ + 1, 0) {
    for (Vertex v = 0; v < n_; ++v)
      first_[v + 1] = first_[v] + g.neighbors(v).size();
    head_.resize(first_[n_]);
    residual_.resize(first_[n_]);
    reverse_.resize(first_[n_]);

    std::vector<std::size_t> fill(first_.begin(), first_.end() - 1);
    for (Vertex u = 0; u < n_; ++u) {
      for (const Neighbor &nb : g.neighbors(u)) {
        if (nb.v < u) continue;
        const std::size_t a = fill[u]++;
        const std::size_t b = fill[nb.v]++;
        head_[a] = nb.v;
        head_[b] = u;
        residual_[a] = nb.w;
        residual_[b] = nb.w;
        reverse_[a] = b;
        reverse_[b] = a;
      }
    }
    level_.resize(n_);
    cursor_.resize(n_);
  }

  double run(Vertex s, Vertex t) {
    double flow = 0.0;
    while (build_levels(s, t)) {
      std::copy(first_.begin(), first_.end() - 1, cursor_.begin());
      for (;;) {
        const double pushed = augment(s, t);
        if (pushed <= kResidualEpsilon) break;
        flow += pushed;
      }
    }
    return flow;
  }

  VertexSet reachable_from(Vertex s) const {
    VertexSet side(n_);
    std::vector<Vertex> stack{s};
    side.insert(s);
    while (!stack.empty()) {
      const Vertex u = stack.back();
      stack.pop_back();
      for (std::size_t a = first_[u]; a < first_[u + 1]; ++a) {
        const Vertex v = head_[a];
        if (residual_[a] > kResidualEpsilon && !side.contains(v)) {
          side.insert(v);
          stack.push_back(v);
        }
      }
    }
    return side;
  }

 private:
  bool build_levels(Vertex s, Vertex t) {
    std::fill(level_.begin(), level_.end(), -1);
    std::vector<Vertex> queue{s};
    level_[s] = 0;
    for (std::size_t qi = 0; qi < queue.size(); ++qi) {
      const Vertex u = queue[qi];
      for (std::size_t a = first_[u]; a < first_[u + 1]; ++a) {
        const Vertex v = head_[a];
        if (level_[v] < 0 && residual_[a] > kResidualEpsilon) {
          level_[v] = level_[u] + 1;
          queue.push_back(v);
        }
      }
    }
    return level_[t] >= 0;
  }

  // Iterative DFS for a single augmenting path in the level graph. Returns
  // the bottleneck pushed along it, or 0 once the blocking flow is complete.
  double augment(Vertex s, Vertex t) {
    path_.clear();
    Vertex u = s;
    for (;;) {
      if (u == t) {
        double bottleneck = std::numeric_limits<double>::infinity();
        for (std::size_t a : path_) bottleneck = std::min(bottleneck, residual_[a]);
        for (std::size_t a : path_) {
          residual_[a] -= bottleneck;
          residual_[reverse_[a]] += bottleneck;
        }
        return bottleneck;
      }
      bool advanced = false;
      for (std::size_t &a = cursor_[u]; a < first_[u + 1]; ++a) {
        const Vertex v = head_[a];
        if (residual_[a] > kResidualEpsilon && level_[v] == level_[u] + 1) {
          path_.push_back(a);
          u = v;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      // Dead end: prune u from the level graph and retreat.
      level_[u] = -1;
      if (path_.empty()) return 0.0;
      const std::size_t back = path_.back();
      path_.pop_back();
      u = head_[reverse_[back]];
      ++cursor_[u];
    }
  }

  std::size_t n_;
  std::vector<std::size_t> first_;
  std::vector<Vertex> head_;
  std::vector<double> residual_;
  std::vector<std::size_t> reverse_;
  std::vector<int> level_;
  std::vector<std::size_t> cursor_;
  std::vector<std::size_t> path_;
};

void check_pair(const WeightedGraph &g, Vertex s, Vertex t) {
  const auto n = g.num_vertices();
  if (s >= n || t >= n)
    throw Error(ErrorCode::VertexOutOfRange,
                "terminal pair (" + std::to_string(s) + ", " +
                    std::to_string(t) + ") in a graph of " + std::to_string(n) +
                    " vertices");
  if (s == t)
    throw Error(ErrorCode::SameVertex,
                "s and t coincide at " + std::to_string(s));
}

}  // namespace

StMinCut st_min_cut(const WeightedGraph &g, Vertex s, Vertex t) {
  check_pair(g, s, t);
  Dinic dinic(g);
  dinic.run(s, t);
  StMinCut cut;
  cut.side_s = dinic.reachable_from(s);
  cut.value = crossing_weight(g, cut.side_s);
  return cut;
}

double max_flow_value(const WeightedGraph &g, Vertex s, Vertex t) {
  check_pair(g, s, t);
  Dinic dinic(g);
  return dinic.run(s, t);
}

}  // namespace xist
