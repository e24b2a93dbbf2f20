#include "xist/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>
#include <map>
#include <sstream>
#include <utility>

#include "xist/error.hpp"
#include "xist/flow.hpp"
#include "xist/xist.hpp"

namespace xist::oracle {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTol = 1e-9;

bool nearly_equal(double a, double b) {
  return std::abs(a - b) <= kTol * std::max(1.0, std::max(std::abs(a), std::abs(b)));
}

void require_enumerable(const WeightedGraph &g) {
  if (g.num_vertices() > kMaxEnumerationVertices)
    throw Error(ErrorCode::TooLarge,
                "exhaustive enumeration is capped at " +
                    std::to_string(kMaxEnumerationVertices) + " vertices, got " +
                    std::to_string(g.num_vertices()));
}

// Mask-based mirror of xcut_value: sums run in the same order, so values
// agree bit for bit.
class MaskEvaluator {
 public:
  MaskEvaluator(const WeightedGraph &g, CutKind kind)
      : g_(g), kind_(kind), n_(g.num_vertices()) {}

  double crossing(std::uint64_t mask) const {
    double total = 0.0;
    for (const Edge &e : g_.edges())
      if (((mask >> e.u) & 1u) != ((mask >> e.v) & 1u)) total += e.w;
    return total;
  }

  double xcut(std::uint64_t mask) const {
    double bal = 1.0;
    switch (kind_) {
      case CutKind::MinCut:
        break;
      case CutKind::RatioCut: {
        const auto in = static_cast<std::size_t>(std::popcount(mask));
        bal = static_cast<double>(in) * static_cast<double>(n_ - in);
        break;
      }
      case CutKind::NCut:
      case CutKind::CheegerCut: {
        double in = 0.0, out = 0.0;
        for (std::size_t v = 0; v < n_; ++v)
          (((mask >> v) & 1u) ? in : out) += g_.degree(static_cast<Vertex>(v));
        bal = kind_ == CutKind::NCut ? in * out : std::min(in, out);
        break;
      }
    }
    if (bal <= 0.0) return kInf;
    return crossing(mask) / bal;
  }

 private:
  const WeightedGraph &g_;
  CutKind kind_;
  std::size_t n_;
};

struct MaskBest {
  double value = kInf;
  std::uint64_t mask = std::numeric_limits<std::uint64_t>::max();

  void offer(double v, std::uint64_t m) {
    if (v < value || (v == value && m < mask)) {
      value = v;
      mask = m;
    }
  }
};

void require_exact_input(const WeightedGraph &g) {
  require_enumerable(g);
  if (g.num_vertices() < 2)
    throw Error(ErrorCode::SubsetTooSmall, "need at least two vertices");
}

CutResult finish_exact(const WeightedGraph &g, CutKind kind, MaskBest best) {
  // All values infinite: fall back to the smallest candidate, {0}.
  if (best.mask == std::numeric_limits<std::uint64_t>::max()) best.mask = 1;
  return make_cut_result(g, kind, VertexSet::from_mask(g.num_vertices(), best.mask));
}

double cut_value(const WeightedGraph &g, Vertex a, Vertex b) {
  return st_min_cut(g, a, b).value;
}

}  // namespace

CutResult exact_xcut_serial(const WeightedGraph &g, CutKind kind) {
  require_exact_input(g);
  const MaskEvaluator eval(g, kind);
  const std::uint64_t full = (std::uint64_t{1} << g.num_vertices()) - 1;
  MaskBest best;
  for (std::uint64_t mask = 1; mask < full; mask += 2) best.offer(eval.xcut(mask), mask);
  return finish_exact(g, kind, best);
}

CutResult exact_xcut(const WeightedGraph &g, CutKind kind) {
  require_exact_input(g);
  const MaskEvaluator eval(g, kind);
  // Odd masks below `full` are exactly the proper sets containing vertex 0.
  const auto half = static_cast<std::int64_t>(
      ((std::uint64_t{1} << g.num_vertices()) - 2) / 2);
  MaskBest best;
#pragma omp parallel
  {
    MaskBest local;
#pragma omp for schedule(static) nowait
    for (std::int64_t i = 0; i < half; ++i) {
      const std::uint64_t mask = 2 * static_cast<std::uint64_t>(i) + 1;
      local.offer(eval.xcut(mask), mask);
    }
#pragma omp critical(exact_reduce)
    best.offer(local.value, local.mask);
  }
  return finish_exact(g, kind, best);
}

StMinCutFamily enumerate_st_mincuts(const WeightedGraph &g, Vertex s, Vertex t) {
  require_enumerable(g);
  const std::size_t n = g.num_vertices();
  if (s >= n || t >= n)
    throw Error(ErrorCode::VertexOutOfRange, "terminal outside the graph");
  if (s == t) throw Error(ErrorCode::SameVertex, "s and t coincide");

  const MaskEvaluator eval(g, CutKind::MinCut);
  const std::uint64_t full = (std::uint64_t{1} << n) - 1;
  const std::uint64_t sbit = std::uint64_t{1} << s;
  const std::uint64_t tbit = std::uint64_t{1} << t;
  const std::uint64_t free = full & ~sbit & ~tbit;

  std::vector<std::pair<std::uint64_t, double>> scanned;
  double best = kInf;
  // Enumerate all submasks of `free`, ascending.
  std::uint64_t sub = 0;
  for (;;) {
    const std::uint64_t mask = sub | sbit;
    const double c = eval.crossing(mask);
    scanned.emplace_back(mask, c);
    best = std::min(best, c);
    if (sub == free) break;
    sub = (sub - free) & free;
  }

  StMinCutFamily family;
  family.value = best;
  for (const auto &[mask, c] : scanned)
    if (nearly_equal(c, best)) family.sets.push_back(VertexSet::from_mask(n, mask));
  return family;
}

bool check_path_inequality(const WeightedGraph &g,
                           std::span<const Vertex> sequence) {
  if (sequence.size() < 2) return true;
  if (sequence.front() == sequence.back()) return true;
  double weakest = kInf;
  for (std::size_t i = 0; i + 1 < sequence.size(); ++i)
    weakest = std::min(weakest, cut_value(g, sequence[i], sequence[i + 1]));
  const double direct = cut_value(g, sequence.front(), sequence.back());
  return direct >= weakest || nearly_equal(direct, weakest);
}

bool check_three_cut_nonuniqueness(const WeightedGraph &g, Vertex s, Vertex t,
                                   Vertex v) {
  const double values[3] = {cut_value(g, s, t), cut_value(g, s, v),
                            cut_value(g, v, t)};
  const double lowest = std::min({values[0], values[1], values[2]});
  int attained = 0;
  for (double c : values)
    if (nearly_equal(c, lowest)) ++attained;
  return attained >= 2;
}

bool check_noncrossing(const WeightedGraph &g, Vertex s, Vertex t, Vertex u,
                       Vertex v) {
  const Vertex all[4] = {s, t, u, v};
  for (int a = 0; a < 4; ++a)
    for (int b = a + 1; b < 4; ++b)
      if (all[a] == all[b])
        throw Error(ErrorCode::PreconditionViolated,
                    "s, t, u, v must be pairwise distinct");

  const VertexSet side = st_min_cut(g, s, t).side_s;
  if (!side.contains(u) || !side.contains(v))
    throw Error(ErrorCode::PreconditionViolated,
                "u and v must lie on the source side of the st-MinCut");

  const StMinCutFamily uv = enumerate_st_mincuts(g, u, v);
  for (const VertexSet &s_uv : uv.sets) {
    const bool t_outside = !s_uv.contains(t);
    VertexSet candidate(g.num_vertices());
    for (Vertex w : side.members())
      if (s_uv.contains(w) == t_outside) candidate.insert(w);
    if (!nearly_equal(crossing_weight(g, candidate), uv.value)) return false;
  }
  return true;
}

WeightedGraph random_connected_graph(const RandomGraphSpec &spec,
                                     std::mt19937_64 &rng) {
  std::bernoulli_distribution coin(spec.edge_probability);
  std::uniform_real_distribution<double> real(spec.min_weight, spec.max_weight);
  std::uniform_int_distribution<int> integer(
      static_cast<int>(std::ceil(spec.min_weight)),
      static_cast<int>(std::floor(spec.max_weight)));
  for (;;) {
    std::vector<Edge> edges;
    for (Vertex u = 0; u < spec.n; ++u)
      for (Vertex v = u + 1; v < spec.n; ++v)
        if (coin(rng))
          edges.push_back({u, v,
                           spec.integer_weights ? static_cast<double>(integer(rng))
                                                : real(rng)});
    WeightedGraph g = build_graph(spec.n, edges);
    if (is_connected(g)) return g;
  }
}

double min_enumerated_pair_xcut(const WeightedGraph &g, CutKind kind,
                                std::span<const Vertex> terminals) {
  double best = kInf;
  for (std::size_t a = 0; a < terminals.size(); ++a)
    for (std::size_t b = a + 1; b < terminals.size(); ++b)
      for (const VertexSet &s : enumerate_st_mincuts(g, terminals[a], terminals[b]).sets)
        best = std::min(best, xcut_value(g, kind, s));
  return best;
}

bool PropertyReport::ok() const { return violations() == 0; }

std::size_t PropertyReport::violations() const {
  std::size_t total = 0;
  for (const auto &t : tallies) total += t.violations;
  return total;
}

namespace {

class Suite {
 public:
  PropertyTally &tally(const std::string &name) {
    auto it = index_.find(name);
    if (it == index_.end()) {
      it = index_.emplace(name, report_.tallies.size()).first;
      report_.tallies.push_back({name, 0, 0, {}});
    }
    return report_.tallies[it->second];
  }

  void record(const std::string &name, bool passed, const std::string &context) {
    PropertyTally &t = tally(name);
    ++t.checks;
    if (!passed && t.violations++ == 0) t.first_failure = context;
  }

  PropertyReport take() { return std::move(report_); }

 private:
  PropertyReport report_;
  std::map<std::string, std::size_t> index_;
};

// Minimum edge weight on the tree path between terminal indices a and b.
double tree_path_minimum(const SweepResult &r, std::size_t a, std::size_t b) {
  const std::size_t count = r.terminals.size();
  std::vector<std::vector<std::pair<std::size_t, double>>> adj(count);
  for (std::size_t i = 1; i < count; ++i) {
    adj[i].emplace_back(r.tau[i], r.tree_weight[i]);
    adj[r.tau[i]].emplace_back(i, r.tree_weight[i]);
  }
  std::vector<double> best(count, -1.0);
  std::vector<std::size_t> stack{a};
  best[a] = kInf;
  while (!stack.empty()) {
    const std::size_t x = stack.back();
    stack.pop_back();
    for (const auto &[y, w] : adj[x]) {
      if (best[y] >= 0.0) continue;
      best[y] = std::min(best[x], w);
      stack.push_back(y);
    }
  }
  return best[b];
}

std::size_t count_distinct(std::vector<double> values) {
  std::sort(values.begin(), values.end());
  std::size_t distinct = 0;
  for (std::size_t i = 0; i < values.size(); ++i)
    if (i == 0 || !nearly_equal(values[i], values[i - 1])) ++distinct;
  return distinct;
}

std::string describe(std::size_t trial, const WeightedGraph &g, CutKind kind) {
  std::ostringstream os;
  os << "trial " << trial << " (n=" << g.num_vertices() << ", m=" << g.num_edges()
     << ", kind=" << to_string(kind) << ")";
  return os.str();
}

}  // namespace

PropertyReport run_property_suite(const SuiteOptions &options) {
  if (options.max_n > kMaxEnumerationVertices)
    throw Error(ErrorCode::TooLarge, "max_n exceeds the enumeration cap");
  if (options.min_n < 4 || options.min_n > options.max_n)
    throw Error(ErrorCode::PreconditionViolated, "need 4 <= min_n <= max_n");

  std::mt19937_64 rng(options.seed);
  std::uniform_int_distribution<std::size_t> size(options.min_n, options.max_n);
  Suite suite;

  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    // Odd trials draw small integer weights, which makes ties common. The
    // min-cut structure lemmas hold regardless; uniqueness-dependent checks skip them.
    RandomGraphSpec spec;
    spec.n = size(rng);
    spec.integer_weights = trial % 2 == 1;
    if (spec.integer_weights) {
      spec.min_weight = 1.0;
      spec.max_weight = 3.0;
    }
    const WeightedGraph g = random_connected_graph(spec, rng);
    const auto n = static_cast<Vertex>(g.num_vertices());
    std::uniform_int_distribution<Vertex> pick(0, n - 1);

    // Flow duality against enumeration, and value symmetry.
    {
      Vertex s = pick(rng), t = pick(rng);
      while (t == s) t = pick(rng);
      const StMinCut cut = st_min_cut(g, s, t);
      const auto family = enumerate_st_mincuts(g, s, t);
      const std::string ctx = describe(trial, g, CutKind::MinCut);
      suite.record("flow_duality", nearly_equal(cut.value, family.value) &&
                                       nearly_equal(max_flow_value(g, s, t), family.value),
                   ctx);
      suite.record("flow_minimal_side", family.sets.front() == cut.side_s, ctx);
      suite.record("flow_symmetry",
                   nearly_equal(cut.value, st_min_cut(g, t, s).value), ctx);
    }

    // Min-cut structure checkers.
    {
      std::vector<Vertex> seq;
      std::uniform_int_distribution<std::size_t> len(2, std::min<std::size_t>(6, n));
      const std::size_t k = len(rng);
      seq.push_back(pick(rng));
      while (seq.size() < k) {
        Vertex v = pick(rng);
        if (v != seq.back()) seq.push_back(v);
      }
      suite.record("path_inequality", check_path_inequality(g, seq),
                   describe(trial, g, CutKind::MinCut));

      Vertex s = pick(rng), t = pick(rng), v = pick(rng);
      while (t == s) t = pick(rng);
      while (v == s || v == t) v = pick(rng);
      suite.record("three_cut_nonuniqueness", check_three_cut_nonuniqueness(g, s, t, v),
                   describe(trial, g, CutKind::MinCut));
    }
    for (int attempt = 0; attempt < 64; ++attempt) {
      Vertex s = pick(rng), t = pick(rng);
      if (s == t) continue;
      std::vector<Vertex> side;
      for (Vertex w : st_min_cut(g, s, t).side_s.members())
        if (w != s) side.push_back(w);
      if (side.size() < 2) continue;
      std::shuffle(side.begin(), side.end(), rng);
      suite.record("noncrossing", check_noncrossing(g, s, t, side[0], side[1]),
                   describe(trial, g, CutKind::MinCut));
      break;
    }

    // Sweep properties, per balanced cut kind.
    const bool unique_cuts = !spec.integer_weights;
    for (CutKind kind : {CutKind::RatioCut, CutKind::NCut, CutKind::CheegerCut}) {
      const std::string ctx = describe(trial, g, kind);
      const SweepResult r = xist(g, kind);
      if (r.status != SweepStatus::Ok) continue;
      const std::size_t count = r.terminals.size();
      suite.record("xist_call_count", r.flow_calls == count - 1, ctx);

      std::vector<double> pair_values;
      bool tree_ok = true;
      for (std::size_t a = 0; a < count; ++a)
        for (std::size_t b = a + 1; b < count; ++b) {
          const double c = cut_value(g, r.terminals[a], r.terminals[b]);
          pair_values.push_back(c);
          tree_ok = tree_ok && nearly_equal(c, tree_path_minimum(r, a, b));
        }
      suite.record("flow_equivalent_tree", tree_ok, ctx);
      suite.record("distinct_value_bound", count_distinct(pair_values) <= count - 1, ctx);

      if (unique_cuts) {
        const double enumerated = min_enumerated_pair_xcut(g, kind, r.terminals);
        suite.record("xist_equals_pair_minimum", nearly_equal(r.cut.value, enumerated), ctx);

        const double exact = exact_xcut(g, kind).value;
        const double basic = xvst_basic(g, kind).cut.value;
        suite.record("exact_le_xvst_le_xist",
                     (exact <= basic || nearly_equal(exact, basic)) &&
                         (basic <= r.cut.value || nearly_equal(basic, r.cut.value)),
                     ctx);
      }
    }
  }
  return suite.take();
}

}  // namespace xist::oracle
