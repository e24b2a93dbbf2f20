#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "xist/graph.hpp"
#include "xist/vertex_set.hpp"

namespace xist::ingest {

// ---------------------------------------------------------------------------
// Edge lists

struct EdgeListGraph {
  WeightedGraph graph;
  /// original_ids[v] is the id vertex v carried in the input.
  std::vector<std::uint64_t> original_ids;
};

/// Parses "u v" or "u v w" lines; '#' starts a comment, tokens are split on
/// any whitespace. Ids are arbitrary nonnegative integers, remapped densely
/// in order of first appearance. Missing weights default to 1. Throws
/// ParseError with the offending line number.
EdgeListGraph parse_edge_list(std::string_view text);

/// One "u v w" line per edge, weights in shortest round-trip form.
std::string emit_edge_list(const WeightedGraph &g);

/// Induced subgraph on the largest component (ties: smallest vertex id).
Subgraph largest_component(const WeightedGraph &g);

// ---------------------------------------------------------------------------
// Images

struct GrayImage {
  std::size_t width = 0;
  std::size_t height = 0;
  /// Row-major, nonnegative.
  std::vector<double> intensities;

  double at(std::size_t row, std::size_t col) const {
    return intensities[row * width + col];
  }
};

/// ASCII PGM ("P2"). Throws ParseError.
GrayImage parse_pgm(std::string_view text);
/// Comma-separated rows of equal length. Throws ParseError.
GrayImage parse_csv_image(std::string_view text);

struct ImageGraph {
  WeightedGraph graph;
  /// r×r block-averaged intensities, row-major; vertex id = row * r + col.
  GrayImage grid;
  /// Grid points whose intensity is >= that of all eight neighbours.
  VertexSet intensity_maxima;
};

/// Block-averages the image onto an r×r grid and joins each grid point to its
/// eight neighbours with weight I(u)·I(v); zero products are non-edges.
/// Throws BadGrid unless 1 <= r <= min(width, height).
ImageGraph image_grid_graph(const GrayImage &img, std::size_t r);

/// Deterministic test image: a few Gaussian "cells" on a dim background with
/// a faint per-pixel jitter, so that neighbouring weights are distinct.
GrayImage synthetic_cell_image(std::size_t size, std::uint64_t seed,
                               std::size_t cells = 4);

// ---------------------------------------------------------------------------
// Point clouds

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

struct LabeledPoints {
  std::vector<Point2> points;
  std::vector<int> labels;
};

struct KnnEpsParams {
  std::size_t k = 5;
  double eps = 0.2;
  double scale = 0.2;
};

/// {u, v} is an edge iff u ∈ NN_k(v), v ∈ NN_k(u) or ‖u - v‖ <= eps, with
/// weight exp(-‖u - v‖ / scale). Nearest-neighbour ties rank the lower index
/// first. Query points are processed in parallel.
WeightedGraph knn_eps_graph(std::span<const Point2> points,
                            const KnnEpsParams &params = {});

/// Sequential reference for knn_eps_graph; identical output.
WeightedGraph knn_eps_graph_serial(std::span<const Point2> points,
                                   const KnnEpsParams &params = {});

/// Name of the deterministic sampling scheme used below: mt19937_64 seeded
/// with `seed`; uniforms are the top 53 bits scaled by 2^-53; per point one
/// uniform u picks the component (u < 1/2 → label 0 around the origin,
/// otherwise label 1 around (δ, δ)), then one Box-Muller pair
/// (u1, u2) → sqrt(-2 ln(1 - u1)) · (cos 2πu2, sin 2πu2) gives the offset.
inline constexpr std::string_view kMixtureSampler = "xist-gauss-v1";

/// n draws from ½·N((0,0), I) + ½·N((δ,δ), I) with component labels.
LabeledPoints sample_gaussian_mixture(std::size_t n, double delta,
                                      std::uint64_t seed);

/// Fraction of agreeing labels, maximized over both label permutations.
/// Throws LengthMismatch.
double classification_rate(std::span<const int> truth,
                           std::span<const int> predicted);

/// "x,y[,label]" per line; '#' comment lines and blank lines are skipped.
LabeledPoints parse_points_csv(std::string_view text);
std::string emit_points_csv(const LabeledPoints &points);

// ---------------------------------------------------------------------------
// Files

std::string read_file(const std::filesystem::path &path);
/// Writes via a temporary sibling and rename, so readers never see a
/// partial file.
void write_file_atomic(const std::filesystem::path &path, std::string_view data);

/// Shortest decimal string that round-trips `value`.
std::string format_double(double value);

}  // namespace xist::ingest
