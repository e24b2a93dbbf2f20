#include "xist/multixist.hpp"

#include <algorithm>
#include <limits>
#include <string>
#include <utility>

#include "xist/error.hpp"
#include "xist/xist.hpp"

namespace xist {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct Split {
  VertexSet part;
  double cost = kInf;
};

// Xist split of one half, priced for comparison across subgraphs.
Split price_split(const WeightedGraph &g, CutKind kind, const VertexSet &half,
                  double total_weight) {
  Split out{VertexSet(g.num_vertices()), kInf};
  if (half.size() <= 1) return out;

  const Subgraph sub = restrict(g, half);
  const SweepResult r = xist_with_fallback(sub.graph, kind);
  if (r.status == SweepStatus::DegenerateVloc) return out;

  out.part = sub.lift(r.cut.partition, g.num_vertices());
  if (r.cut.value == 0.0) {
    out.cost = 0.0;
  } else {
    const double self = self_balance(
        sub.graph, kind, VertexSet::full(sub.graph.num_vertices()));
    out.cost = r.cut.value * self / total_weight;
  }
  return out;
}

VertexSet minus(const VertexSet &a, const VertexSet &b) {
  VertexSet out(a.universe());
  for (Vertex v : a.members())
    if (!b.contains(v)) out.insert(v);
  return out;
}

VertexSet unite(const VertexSet &a, const VertexSet &b) {
  VertexSet out = a;
  for (Vertex v : b.members()) out.insert(v);
  return out;
}

}  // namespace

MultiCutResult multi_xist(const WeightedGraph &g, CutKind kind, std::size_t k) {
  const std::size_t n = g.num_vertices();
  if (k < 2)
    throw Error(ErrorCode::PreconditionViolated,
                "k must be at least 2, got " + std::to_string(k));
  if (k > n)
    throw Error(ErrorCode::TooManyClusters,
                "k = " + std::to_string(k) + " exceeds n = " + std::to_string(n));

  const double total_weight = 2.0 * g.total_edge_weight();

  // Each slot holds a cluster as its two pending halves. The seed slot
  // (∅, V) is priced at 0 so the first step computes the split of V.
  std::vector<std::pair<VertexSet, VertexSet>> slots;
  std::vector<double> costs;
  slots.emplace_back(VertexSet(n), VertexSet::full(n));
  costs.push_back(0.0);

  auto nonempty = [&] {
    return static_cast<std::size_t>(
        std::count_if(slots.begin(), slots.end(), [](const auto &s) {
          return !s.first.empty() || !s.second.empty();
        }));
  };

  MultiCutResult result;
  while (nonempty() < k) {
    const auto j = static_cast<std::size_t>(
        std::min_element(costs.begin(), costs.end()) - costs.begin());
    if (costs[j] == kInf) {
      result.status = MultiStatus::UnreachableK;
      break;
    }

    MultiStep step;
    step.slot = j;
    step.pending_costs = costs;
    step.first = slots[j].first;
    step.second = slots[j].second;

    // The two halves are independent.
    Split splits[2];
    const VertexSet *halves[2] = {&step.first, &step.second};
#pragma omp parallel for num_threads(2) schedule(static, 1)
    for (int l = 0; l < 2; ++l)
      splits[l] = price_split(g, kind, *halves[l], total_weight);

    VertexSet rest_first = minus(step.first, splits[0].part);
    VertexSet rest_second = minus(step.second, splits[1].part);
    slots[j] = {std::move(splits[0].part), std::move(rest_first)};
    costs[j] = splits[0].cost;
    slots.emplace_back(std::move(splits[1].part), std::move(rest_second));
    costs.push_back(splits[1].cost);

    step.new_slot = slots.size() - 1;
    step.first_cost = costs[j];
    step.second_cost = costs.back();
    result.trace.push_back(std::move(step));
  }

  for (const auto &[a, b] : slots)
    if (!a.empty() || !b.empty()) result.clusters.push_back(unite(a, b));
  std::sort(result.clusters.begin(), result.clusters.end(),
            [](const VertexSet &a, const VertexSet &b) {
              return a.members().front() < b.members().front();
            });
  result.labels.assign(n, -1);
  for (std::size_t c = 0; c < result.clusters.size(); ++c)
    for (Vertex v : result.clusters[c].members())
      result.labels[v] = static_cast<int>(c);
  return result;
}

}  // namespace xist
