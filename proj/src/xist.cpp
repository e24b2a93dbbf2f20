#include "xist/xist.hpp"

#include <limits>
#include <string>
#include <utility>

#include "xist/error.hpp"
#include "xist/flow.hpp"

namespace xist {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Zero-valued split along the first component with a positive balance.
SweepResult component_cut(const WeightedGraph &g, CutKind kind) {
  const auto components = connected_components(g);
  SweepResult r;
  r.status = SweepStatus::Disconnected;
  VertexSet chosen = components.front();
  for (const VertexSet &c : components) {
    if (balance(g, kind, c) > 0.0) {
      chosen = c;
      break;
    }
  }
  r.cut.kind = kind;
  r.cut.value = 0.0;
  r.cut.normalized_value = 0.0;
  r.cut.partition = std::move(chosen);
  return r;
}

SweepResult degenerate(const WeightedGraph &g, CutKind kind,
                       std::vector<Vertex> terminals) {
  SweepResult r;
  r.status = SweepStatus::DegenerateVloc;
  r.cut.kind = kind;
  r.cut.value = kInf;
  r.cut.normalized_value = kInf;
  r.cut.partition = VertexSet(g.num_vertices());
  r.terminals = std::move(terminals);
  return r;
}

std::vector<Vertex> checked_terminals(const WeightedGraph &g,
                                      const VertexSet &subset) {
  if (subset.universe() != g.num_vertices())
    throw Error(ErrorCode::VertexOutOfRange,
                "terminal set universe " + std::to_string(subset.universe()) +
                    " differs from n = " + std::to_string(g.num_vertices()));
  if (subset.size() < 2)
    throw Error(ErrorCode::SubsetTooSmall,
                "need at least two terminals, got " +
                    std::to_string(subset.size()));
  return subset.members();
}

struct PairBest {
  double value = kInf;
  std::size_t pair = std::numeric_limits<std::size_t>::max();
  VertexSet side;

  void offer(double v, std::size_t p, VertexSet &&s) {
    if (v < value || (v == value && p < pair)) {
      value = v;
      pair = p;
      side = std::move(s);
    }
  }
};

std::vector<std::pair<Vertex, Vertex>> all_pairs(const std::vector<Vertex> &t) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  pairs.reserve(t.size() * (t.size() - 1) / 2);
  for (std::size_t a = 0; a < t.size(); ++a)
    for (std::size_t b = a + 1; b < t.size(); ++b) pairs.emplace_back(t[a], t[b]);
  return pairs;
}

SweepResult finish_xvst(const WeightedGraph &g, CutKind kind,
                        std::vector<Vertex> terminals, PairBest best,
                        std::size_t calls) {
  SweepResult r;
  r.terminals = std::move(terminals);
  r.flow_calls = calls;
  if (best.pair == std::numeric_limits<std::size_t>::max()) {
    // Every candidate had an infinite value; keep the first pair's cut.
    best.side = st_min_cut(g, r.terminals[0], r.terminals[1]).side_s;
  }
  r.cut = make_cut_result(g, kind, std::move(best.side));
  return r;
}

VertexSet default_subset(const WeightedGraph &g,
                         const std::optional<VertexSet> &subset) {
  return subset ? *subset : VertexSet::full(g.num_vertices());
}

}  // namespace

const char *to_string(SweepStatus status) {
  switch (status) {
    case SweepStatus::Ok: return "ok";
    case SweepStatus::Disconnected: return "disconnected";
    case SweepStatus::DegenerateVloc: return "degenerate_vloc";
  }
  return "unknown";
}

SweepResult xvst_basic_serial(const WeightedGraph &g, CutKind kind,
                              const std::optional<VertexSet> &subset) {
  auto terminals = checked_terminals(g, default_subset(g, subset));
  if (!is_connected(g)) return component_cut(g, kind);

  const auto pairs = all_pairs(terminals);
  PairBest best;
  for (std::size_t p = 0; p < pairs.size(); ++p) {
    StMinCut cut = st_min_cut(g, pairs[p].first, pairs[p].second);
    best.offer(xcut_value(g, kind, cut.side_s), p, std::move(cut.side_s));
  }
  return finish_xvst(g, kind, std::move(terminals), std::move(best),
                     pairs.size());
}

SweepResult xvst_basic(const WeightedGraph &g, CutKind kind,
                       const std::optional<VertexSet> &subset) {
  auto terminals = checked_terminals(g, default_subset(g, subset));
  if (!is_connected(g)) return component_cut(g, kind);

  const auto pairs = all_pairs(terminals);
  const auto count = static_cast<std::ptrdiff_t>(pairs.size());
  PairBest best;
#pragma omp parallel
  {
    PairBest local;
#pragma omp for schedule(dynamic, 4) nowait
    for (std::ptrdiff_t p = 0; p < count; ++p) {
      StMinCut cut = st_min_cut(g, pairs[p].first, pairs[p].second);
      local.offer(xcut_value(g, kind, cut.side_s), static_cast<std::size_t>(p),
                  std::move(cut.side_s));
    }
#pragma omp critical(xvst_reduce)
    best.offer(local.value, local.pair, std::move(local.side));
  }
  return finish_xvst(g, kind, std::move(terminals), std::move(best),
                     pairs.size());
}

SweepResult xist_on_subset(const WeightedGraph &g, CutKind kind,
                           const VertexSet &subset,
                           const SweepOptions &options) {
  auto terminals = checked_terminals(g, subset);
  if (!is_connected(g)) return component_cut(g, kind);

  const std::size_t count = terminals.size();
  SweepResult r;
  r.tau.assign(count, 0);
  r.tree_weight.assign(count, 0.0);

  double best_value = kInf;
  VertexSet best_side;
  for (std::size_t i = 1; i < count; ++i) {
    const Vertex s = terminals[i];
    const Vertex t = terminals[r.tau[i]];
    StMinCut cut = st_min_cut(g, s, t);
    ++r.flow_calls;
    const double value = xcut_value(g, kind, cut.side_s);
    r.tree_weight[i] = cut.value;

    // Strict comparison keeps the earliest minimizer.
    if (i == 1 || value < best_value) {
      best_value = value;
      best_side = cut.side_s;
    }
    // Terminals on s's side that shared s's tree neighbour now hang off s.
    // j = i is skipped so tau[i] keeps recording the pair just cut.
    for (std::size_t j = i + 1; j < count; ++j)
      if (cut.side_s.contains(terminals[j]) && r.tau[j] == r.tau[i]) r.tau[j] = i;

    if (options.record_trace)
      r.trace.push_back({i, s, t, cut.value, value, r.tau});
  }
  r.cut = make_cut_result(g, kind, std::move(best_side));
  r.terminals = std::move(terminals);
  return r;
}

SweepResult xist(const WeightedGraph &g, CutKind kind,
                 const SweepOptions &options) {
  if (!is_connected(g)) return component_cut(g, kind);
  auto vloc = local_maxima(g);
  if (vloc.size() < 2) return degenerate(g, kind, std::move(vloc));
  return xist_on_subset(g, kind, VertexSet(g.num_vertices(), vloc), options);
}

SweepResult xist_with_fallback(const WeightedGraph &g, CutKind kind,
                               const SweepOptions &options) {
  SweepResult r = xist(g, kind, options);
  if (r.status == SweepStatus::DegenerateVloc && g.num_vertices() >= 2)
    return xvst_basic(g, kind);
  return r;
}

}  // namespace xist
