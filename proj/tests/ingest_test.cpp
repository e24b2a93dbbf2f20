#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>

#include "xist/error.hpp"
#include "xist/ingest.hpp"

namespace xist::ingest {
namespace {

ErrorCode code_of(auto &&fn) {
  try {
    fn();
  } catch (const Error &e) {
    return e.code();
  }
  ADD_FAILURE() << "expected an xist::Error";
  return ErrorCode::IoError;
}

TEST(EdgeList, ParsesWithCommentsAndDefaults) {
  const auto r = parse_edge_list("# header\n10 20 2.5\n20 30\n\n30 10 0.5 # trailing\n");
  EXPECT_EQ(r.graph.num_vertices(), 3u);
  EXPECT_EQ(r.graph.num_edges(), 3u);
  EXPECT_EQ(r.original_ids, (std::vector<std::uint64_t>{10, 20, 30}));
  EXPECT_DOUBLE_EQ(r.graph.degree(0), 3.0);
  EXPECT_DOUBLE_EQ(r.graph.degree(1), 3.5);
}

TEST(EdgeList, CrLfAndTabs) {
  const auto r = parse_edge_list("0\t1\t1\r\n1 2 1\r\n");
  EXPECT_EQ(r.graph.num_edges(), 2u);
}

TEST(EdgeList, ErrorsNameTheLine) {
  try {
    parse_edge_list("0 1\n0 x\n");
    ADD_FAILURE();
  } catch (const Error &e) {
    EXPECT_EQ(e.code(), ErrorCode::ParseError);
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
  EXPECT_EQ(code_of([] { parse_edge_list("0 1 2 3\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_edge_list("0\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_edge_list("0 1 -1\n"); }), ErrorCode::ParseError);
}

TEST(EdgeList, EmitRoundTrips) {
  const auto a = parse_edge_list("0 1 0.1\n1 2 0.30000000000000004\n2 0 7\n");
  const auto b = parse_edge_list(emit_edge_list(a.graph));
  ASSERT_EQ(a.graph.num_edges(), b.graph.num_edges());
  for (std::size_t i = 0; i < a.graph.num_edges(); ++i)
    EXPECT_EQ(a.graph.edges()[i].w, b.graph.edges()[i].w);
}

TEST(EdgeList, LargestComponent) {
  const auto r = parse_edge_list("0 1\n2 3\n3 4\n");
  const auto sub = largest_component(r.graph);
  EXPECT_EQ(sub.original, (std::vector<Vertex>{2, 3, 4}));
  EXPECT_EQ(sub.graph.num_edges(), 2u);
}

TEST(Pgm, Parses) {
  const auto img = parse_pgm("P2\n# comment\n2 2\n255\n1 2\n3 4\n");
  EXPECT_EQ(img.width, 2u);
  EXPECT_EQ(img.height, 2u);
  EXPECT_DOUBLE_EQ(img.at(1, 0), 3.0);
  EXPECT_EQ(code_of([] { parse_pgm("P5\n2 2\n255\n"); }), ErrorCode::ParseError);
  EXPECT_EQ(code_of([] { parse_pgm("P2\n2 2\n255\n1 2 3\n"); }), ErrorCode::ParseError);
}

TEST(CsvImage, Parses) {
  const auto img = parse_csv_image("1,2,3\n4,5,6\n");
  EXPECT_EQ(img.width, 3u);
  EXPECT_EQ(img.height, 2u);
  EXPECT_DOUBLE_EQ(img.at(1, 2), 6.0);
  EXPECT_EQ(code_of([] { parse_csv_image("1,2\n3\n"); }), ErrorCode::ParseError);
}

TEST(ImageGrid, TwoByTwoIsComplete) {
  const auto img = parse_csv_image("1,2\n3,4\n");
  const auto ig = image_grid_graph(img, 2);
  EXPECT_EQ(ig.graph.num_vertices(), 4u);
  EXPECT_EQ(ig.graph.num_edges(), 6u);
  EXPECT_DOUBLE_EQ(ig.graph.edges()[0].w, 2.0);  // (0,1): 1 * 2
  EXPECT_EQ(ig.intensity_maxima, VertexSet(4, {3}));
}

TEST(ImageGrid, BlockAveraging) {
  const auto img = parse_csv_image("1,3,0,0\n1,3,0,0\n2,2,4,4\n2,2,4,4\n");
  const auto ig = image_grid_graph(img, 2);
  EXPECT_DOUBLE_EQ(ig.grid.at(0, 0), 2.0);
  EXPECT_DOUBLE_EQ(ig.grid.at(0, 1), 0.0);
  EXPECT_DOUBLE_EQ(ig.grid.at(1, 1), 4.0);
  // Zero-intensity cell has no edges.
  EXPECT_EQ(ig.graph.num_edges(), 3u);
}

TEST(ImageGrid, EqualNeighboursAreBothMaxima) {
  const auto ig = image_grid_graph(parse_csv_image("5,5\n1,1\n"), 2);
  EXPECT_EQ(ig.intensity_maxima, VertexSet(4, {0, 1}));
}

TEST(ImageGrid, BadGrid) {
  const auto img = parse_csv_image("1,2\n3,4\n");
  EXPECT_EQ(code_of([&] { image_grid_graph(img, 0); }), ErrorCode::BadGrid);
  EXPECT_EQ(code_of([&] { image_grid_graph(img, 3); }), ErrorCode::BadGrid);
}

TEST(ImageGrid, SyntheticImageIsDeterministic) {
  const auto a = synthetic_cell_image(64, 3);
  const auto b = synthetic_cell_image(64, 3);
  EXPECT_EQ(a.intensities, b.intensities);
  const auto ig = image_grid_graph(a, 16);
  EXPECT_EQ(ig.graph.num_vertices(), 256u);
  EXPECT_TRUE(is_connected(ig.graph));
}

TEST(KnnEps, PairAtEpsDistance) {
  const std::vector<Point2> pts{{0.0, 0.0}, {0.2, 0.0}};
  const auto g = knn_eps_graph(pts, {1, 0.2, 0.2});
  ASSERT_EQ(g.num_edges(), 1u);
  EXPECT_NEAR(g.edges()[0].w, std::exp(-1.0), 1e-15);
}

TEST(KnnEps, UnionOfNeighboursAndBall) {
  // Collinear points 0, 1, 2, 10 with k = 1 and a tiny ball: each point joins
  // its nearest neighbour only.
  const std::vector<Point2> pts{{0, 0}, {1, 0}, {2, 0}, {10, 0}};
  const auto g = knn_eps_graph(pts, {1, 0.01, 1.0});
  // NN(0)=1, NN(1)=0 (tie with 2, lower index), NN(2)=1, NN(3)=2.
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_TRUE(is_connected(g));
  const auto ball = knn_eps_graph(pts, {1, 1.5, 1.0});
  EXPECT_EQ(ball.num_edges(), 3u);
}

TEST(KnnEps, ParallelMatchesSerial) {
  const auto pts = sample_gaussian_mixture(400, 2.0, 5).points;
  const auto a = knn_eps_graph(pts);
  const auto b = knn_eps_graph_serial(pts);
  ASSERT_EQ(a.num_edges(), b.num_edges());
  for (std::size_t i = 0; i < a.num_edges(); ++i) {
    EXPECT_EQ(a.edges()[i].u, b.edges()[i].u);
    EXPECT_EQ(a.edges()[i].v, b.edges()[i].v);
    EXPECT_EQ(a.edges()[i].w, b.edges()[i].w);
  }
}

TEST(Mixture, DeterministicAndCentred) {
  const auto a = sample_gaussian_mixture(10000, 4.0, 1);
  const auto b = sample_gaussian_mixture(10000, 4.0, 1);
  ASSERT_EQ(a.points.size(), 10000u);
  EXPECT_EQ(a.labels, b.labels);
  double sx[2] = {0, 0}, sy[2] = {0, 0};
  std::size_t cnt[2] = {0, 0};
  for (std::size_t i = 0; i < a.points.size(); ++i) {
    EXPECT_EQ(a.points[i].x, b.points[i].x);
    const int l = a.labels[i];
    sx[l] += a.points[i].x;
    sy[l] += a.points[i].y;
    ++cnt[l];
  }
  EXPECT_NEAR(sx[0] / cnt[0], 0.0, 0.1);
  EXPECT_NEAR(sy[0] / cnt[0], 0.0, 0.1);
  EXPECT_NEAR(sx[1] / cnt[1], 4.0, 0.1);
  EXPECT_NEAR(sy[1] / cnt[1], 4.0, 0.1);
  EXPECT_NEAR(static_cast<double>(cnt[0]) / 10000.0, 0.5, 0.03);
  EXPECT_NE(sample_gaussian_mixture(50, 4.0, 2).points[0].x, a.points[0].x);
}

TEST(ClassificationRate, Examples) {
  const std::vector<int> truth{0, 0, 1, 1};
  EXPECT_DOUBLE_EQ(classification_rate(truth, std::vector<int>{0, 0, 1, 1}), 1.0);
  EXPECT_DOUBLE_EQ(classification_rate(truth, std::vector<int>{1, 1, 0, 0}), 1.0);
  EXPECT_DOUBLE_EQ(classification_rate(truth, std::vector<int>{0, 1, 1, 1}), 0.75);
  EXPECT_DOUBLE_EQ(classification_rate(truth, std::vector<int>{0, 1, 0, 1}), 0.5);
  EXPECT_EQ(code_of([&] { classification_rate(truth, std::vector<int>{0}); }),
            ErrorCode::LengthMismatch);
}

TEST(PointsCsv, RoundTrip) {
  const auto pts = sample_gaussian_mixture(20, 2.0, 9);
  const auto back = parse_points_csv(emit_points_csv(pts));
  ASSERT_EQ(back.points.size(), 20u);
  EXPECT_EQ(back.labels, pts.labels);
  for (std::size_t i = 0; i < 20; ++i) {
    EXPECT_EQ(back.points[i].x, pts.points[i].x);
    EXPECT_EQ(back.points[i].y, pts.points[i].y);
  }
  const auto unlabeled = parse_points_csv("# x,y\n0,1\n2.5,3\n");
  EXPECT_EQ(unlabeled.points.size(), 2u);
  EXPECT_TRUE(unlabeled.labels.empty());
}

TEST(Files, AtomicWriteAndRead) {
  const auto dir = std::filesystem::temp_directory_path() / "xist_ingest_test";
  std::filesystem::create_directories(dir);
  const auto path = dir / "out.txt";
  write_file_atomic(path, "hello\n");
  EXPECT_EQ(read_file(path), "hello\n");
  EXPECT_FALSE(std::filesystem::exists(dir / "out.txt.tmp"));
  EXPECT_EQ(code_of([&] { read_file(dir / "missing.txt"); }), ErrorCode::IoError);
  std::filesystem::remove_all(dir);
}

TEST(FormatDouble, ShortestRoundTrip) {
  EXPECT_EQ(format_double(0.1), "0.1");
  EXPECT_EQ(format_double(2.0), "2");
  EXPECT_EQ(std::stod(format_double(1.0 / 3.0)), 1.0 / 3.0);
}

}  // namespace
}  // namespace xist::ingest
