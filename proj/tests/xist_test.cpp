#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <set>

#include "test_support.hpp"
#include "xist/error.hpp"
#include "xist/flow.hpp"
#include "xist/oracle.hpp"
#include "xist/xist.hpp"

namespace xist {
namespace {

using testing::d6;
using testing::Dense;
using testing::k2;
using testing::k3;
using testing::make_graph;
using testing::p3;

TEST(Xist, DumbbellNCut) {
  const auto r = xist(d6(), CutKind::NCut);
  EXPECT_EQ(r.status, SweepStatus::Ok);
  EXPECT_EQ(r.terminals, (std::vector<Vertex>{2, 3}));
  EXPECT_EQ(r.flow_calls, 1u);
  EXPECT_EQ(r.cut.partition, VertexSet(6, {0, 1, 2}));
  EXPECT_NEAR(r.cut.value, 0.5 / 42.25, 1e-12);
  EXPECT_NEAR(r.cut.normalized_value, 2.0 / 13.0, 1e-12);
}

TEST(Xist, DumbbellOtherKinds) {
  EXPECT_NEAR(xist(d6(), CutKind::RatioCut).cut.value, 1.0 / 18.0, 1e-12);
  EXPECT_NEAR(xist(d6(), CutKind::CheegerCut).cut.value, 1.0 / 13.0, 1e-12);
  EXPECT_NEAR(xist(d6(), CutKind::MinCut).cut.value, 0.5, 1e-12);
}

TEST(Xist, PathIsDegenerate) {
  const auto r = xist(p3(), CutKind::NCut);
  EXPECT_EQ(r.status, SweepStatus::DegenerateVloc);
  EXPECT_TRUE(std::isinf(r.cut.value));
  EXPECT_TRUE(r.cut.partition.empty());
  EXPECT_EQ(r.flow_calls, 0u);

  const auto f = xist_with_fallback(p3(), CutKind::NCut);
  EXPECT_EQ(f.status, SweepStatus::Ok);
  EXPECT_EQ(f.flow_calls, 3u);
  EXPECT_TRUE(f.cut.partition.is_proper());
  EXPECT_NEAR(f.cut.value, Dense(p3()).best_xcut(CutKind::NCut), 1e-12);
}

TEST(Xist, SingleVertexStaysDegenerate) {
  const auto g = make_graph(1, {});
  EXPECT_EQ(xist_with_fallback(g, CutKind::NCut).status, SweepStatus::DegenerateVloc);
}

TEST(Xist, TriangleRatioCut) {
  const auto r = xist(k3(), CutKind::RatioCut);
  EXPECT_EQ(r.flow_calls, 2u);
  EXPECT_DOUBLE_EQ(r.cut.value, 1.0);
  // A singleton split, reported from vertex 0's side.
  EXPECT_EQ(std::min(r.cut.partition.size(), 3 - r.cut.partition.size()), 1u);
  EXPECT_TRUE(r.cut.partition.contains(0));
}

TEST(Xist, SingleEdge) {
  const auto r = xist(k2(), CutKind::NCut);
  EXPECT_EQ(r.flow_calls, 1u);
  EXPECT_EQ(r.cut.partition, VertexSet(2, {0}));
  EXPECT_DOUBLE_EQ(r.cut.normalized_value, 2.0);
}

TEST(Xist, DisconnectedGivesZeroComponentCut) {
  const auto g = make_graph(5, {{0, 1, 1.0}, {1, 2, 1.0}, {3, 4, 1.0}});
  for (auto fn : {&xvst_basic_serial}) {
    const auto r = fn(g, CutKind::NCut, std::nullopt);
    EXPECT_EQ(r.status, SweepStatus::Disconnected);
    EXPECT_EQ(r.cut.value, 0.0);
  }
  const auto r = xist(g, CutKind::NCut);
  EXPECT_EQ(r.status, SweepStatus::Disconnected);
  EXPECT_EQ(r.cut.value, 0.0);
  EXPECT_EQ(r.flow_calls, 0u);
  EXPECT_EQ(r.cut.partition, VertexSet(5, {0, 1, 2}));
  EXPECT_DOUBLE_EQ(crossing_weight(g, r.cut.partition), 0.0);
}

TEST(Xist, DisconnectedSkipsIsolatedVertexForVolumeCuts) {
  const auto g = make_graph(5, {{1, 2, 1.0}, {3, 4, 1.0}});
  EXPECT_EQ(xist(g, CutKind::NCut).cut.partition, VertexSet(5, {1, 2}));
  EXPECT_EQ(xist(g, CutKind::RatioCut).cut.partition, VertexSet(5, {0}));
  // With one isolated vertex every component cut has zero volume balance.
  const auto lone = make_graph(4, {{1, 2, 1.0}, {2, 3, 1.0}});
  EXPECT_EQ(xist(lone, CutKind::NCut).cut.partition, VertexSet(4, {0}));
}

TEST(Xist, PartitionHoldsVertexZero) {
  // Pair (3, 2) is cut with source 3; the reported side is the complement.
  const auto r = xist(d6(), CutKind::NCut, {true});
  ASSERT_EQ(r.trace.size(), 1u);
  EXPECT_EQ(r.trace[0].s, 3u);
  EXPECT_EQ(r.trace[0].t, 2u);
  EXPECT_TRUE(r.cut.partition.contains(0));
}

TEST(XistOnSubset, Errors) {
  EXPECT_THROW(xist_on_subset(d6(), CutKind::NCut, VertexSet(6, {2})), Error);
  EXPECT_THROW(xist_on_subset(d6(), CutKind::NCut, VertexSet(5, {1, 2})), Error);
  try {
    xist_on_subset(d6(), CutKind::NCut, VertexSet(6, {2}));
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::SubsetTooSmall);
  }
}

TEST(XistOnSubset, AllVerticesOfDumbbell) {
  const auto r = xist_on_subset(d6(), CutKind::NCut, VertexSet::full(6));
  EXPECT_EQ(r.flow_calls, 5u);
  EXPECT_EQ(r.cut.partition, VertexSet(6, {0, 1, 2}));
}

TEST(Xist, TraceRecordsEveryCall) {
  std::mt19937_64 rng(4);
  oracle::RandomGraphSpec spec;
  spec.n = 12;
  const auto g = oracle::random_connected_graph(spec, rng);
  const auto r = xist_on_subset(g, CutKind::NCut, VertexSet::full(12), {true});
  ASSERT_EQ(r.trace.size(), 11u);
  double best = r.trace.front().xcut_value;
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    const auto &it = r.trace[i];
    EXPECT_EQ(it.index, i + 1);
    EXPECT_EQ(it.s, r.terminals[it.index]);
    EXPECT_LT(it.tau[it.index], it.index);
    EXPECT_EQ(it.t, r.terminals[it.tau[it.index]]);
    EXPECT_DOUBLE_EQ(it.mincut_value, st_min_cut(g, it.s, it.t).value);
    best = std::min(best, it.xcut_value);
  }
  EXPECT_EQ(r.tau, r.trace.back().tau);
  EXPECT_EQ(r.cut.value, best);
  EXPECT_TRUE(xist(g, CutKind::NCut).trace.empty());
}

// Xvst picks the lexicographically smallest pair among ties. On K3 every pair
// cut costs the same, so the winner is pair (0, 1) with source side {0}.
TEST(Xvst, TieBreaksToSmallestPair) {
  for (auto fn : {&xvst_basic, &xvst_basic_serial}) {
    const auto r = fn(k3(), CutKind::RatioCut, std::nullopt);
    EXPECT_EQ(r.flow_calls, 3u);
    EXPECT_EQ(r.cut.partition, VertexSet(3, {0}));
  }
}

TEST(Xvst, SubsetRestrictsPairs) {
  const auto r = xvst_basic(d6(), CutKind::NCut, VertexSet(6, {0, 1}));
  EXPECT_EQ(r.flow_calls, 1u);
  EXPECT_EQ(r.terminals, (std::vector<Vertex>{0, 1}));
}

// Over random graphs: the Xist value equals the best enumerated pair cut
// over V_loc and the chain exact <= Xvst <= Xist holds. The Gomory-Hu tree
// recorded in tau reproduces every pairwise min-cut as the lightest edge on
// the tree path.
TEST(Xist, RandomGraphProperties) {
  std::mt19937_64 rng(21);
  int nondegenerate = 0;
  for (int trial = 0; trial < 200; ++trial) {
    oracle::RandomGraphSpec spec;
    spec.n = 4 + trial % 7;
    const auto g = oracle::random_connected_graph(spec, rng);
    const auto vloc = local_maxima(g);
    for (CutKind kind : {CutKind::RatioCut, CutKind::NCut, CutKind::CheegerCut}) {
      const auto r = xist(g, kind);
      if (vloc.size() < 2) {
        EXPECT_EQ(r.status, SweepStatus::DegenerateVloc);
        continue;
      }
      ++nondegenerate;
      EXPECT_EQ(r.flow_calls, vloc.size() - 1);
      const double pair_min = oracle::min_enumerated_pair_xcut(g, kind, vloc);
      EXPECT_NEAR(r.cut.value, pair_min, 1e-9 * (1.0 + pair_min));
      const double exact = Dense(g).best_xcut(kind);
      const auto all = xvst_basic(g, kind);
      EXPECT_LE(exact, all.cut.value + 1e-12);
      EXPECT_LE(all.cut.value, r.cut.value + 1e-12);
      EXPECT_NEAR(r.cut.value, xcut_value(g, kind, r.cut.partition), 1e-12);
    }

    const auto r = xist_on_subset(g, CutKind::NCut, VertexSet::full(spec.n));
    std::set<double> distinct;
    for (std::size_t a = 0; a < spec.n; ++a) {
      for (std::size_t b = a + 1; b < spec.n; ++b) {
        // Lightest edge on the tree path from a to b.
        std::vector<std::size_t> pa{a}, pb{b};
        while (pa.back() != 0) pa.push_back(r.tau[pa.back()]);
        while (pb.back() != 0) pb.push_back(r.tau[pb.back()]);
        while (pa.size() > 1 && pb.size() > 1 && pa[pa.size() - 2] == pb[pb.size() - 2]) {
          pa.pop_back();
          pb.pop_back();
        }
        double lightest = std::numeric_limits<double>::infinity();
        for (std::size_t i = 0; i + 1 < pa.size(); ++i) lightest = std::min(lightest, r.tree_weight[pa[i]]);
        for (std::size_t i = 0; i + 1 < pb.size(); ++i) lightest = std::min(lightest, r.tree_weight[pb[i]]);
        const double c = Dense(g).st_min(a, b).first;
        EXPECT_NEAR(lightest, c, 1e-9);
        distinct.insert(std::round(c * 1e9));
      }
    }
    EXPECT_LE(distinct.size(), spec.n - 1);
  }
  EXPECT_GE(nondegenerate, 30);
}

TEST(Xist, ParallelAndSerialXvstAgree) {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 40; ++trial) {
    oracle::RandomGraphSpec spec;
    spec.n = 5 + trial % 20;
    spec.edge_probability = 0.3;
    spec.integer_weights = trial % 2 == 0;
    if (spec.integer_weights) spec.min_weight = 1.0, spec.max_weight = 3.0;
    const auto g = oracle::random_connected_graph(spec, rng);
    for (CutKind kind : {CutKind::RatioCut, CutKind::NCut}) {
      const auto a = xvst_basic(g, kind);
      const auto b = xvst_basic_serial(g, kind);
      EXPECT_EQ(a.cut.value, b.cut.value);
      EXPECT_EQ(a.cut.partition, b.cut.partition);
    }
  }
}

}  // namespace
}  // namespace xist
