#include "xist/ingest.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>
#include <unordered_map>
#include <utility>

#include "xist/error.hpp"

namespace xist::ingest {
namespace {

std::string_view strip_comment(std::string_view line) {
  if (auto hash = line.find('#'); hash != std::string_view::npos)
    line = line.substr(0, hash);
  return line;
}

std::vector<std::string_view> split_whitespace(std::string_view line) {
  std::vector<std::string_view> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
    std::size_t j = i;
    while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
    if (j > i) tokens.push_back(line.substr(i, j - i));
    i = j;
  }
  return tokens;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

template <typename T>
bool parse_number(std::string_view token, T &out) {
  token = trim(token);
  if (!token.empty() && token.front() == '+') token.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), out);
  return ec == std::errc{} && ptr == token.data() + token.size();
}

[[noreturn]] void parse_fail(std::size_t line_no, const std::string &why) {
  throw Error(ErrorCode::ParseError, "line " + std::to_string(line_no) + ": " + why);
}

template <typename Fn>
void for_each_line(std::string_view text, Fn &&fn) {
  std::size_t line_no = 0;
  while (!text.empty()) {
    ++line_no;
    const auto nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    fn(line_no, line);
    if (nl == std::string_view::npos) break;
    text.remove_prefix(nl + 1);
  }
}

}  // namespace

EdgeListGraph parse_edge_list(std::string_view text) {
  EdgeListGraph out;
  std::unordered_map<std::uint64_t, Vertex> dense;
  std::vector<Edge> edges;
  auto id_of = [&](std::uint64_t raw) {
    auto [it, inserted] = dense.try_emplace(raw, static_cast<Vertex>(dense.size()));
    if (inserted) out.original_ids.push_back(raw);
    return it->second;
  };

  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    const auto tokens = split_whitespace(strip_comment(line));
    if (tokens.empty()) return;
    if (tokens.size() != 2 && tokens.size() != 3)
      parse_fail(line_no, "expected \"u v\" or \"u v w\"");
    std::uint64_t u = 0, v = 0;
    if (!parse_number(tokens[0], u) || !parse_number(tokens[1], v))
      parse_fail(line_no, "vertex ids must be nonnegative integers");
    double w = 1.0;
    if (tokens.size() == 3 && (!parse_number(tokens[2], w) || !std::isfinite(w)))
      parse_fail(line_no, "bad weight '" + std::string(tokens[2]) + "'");
    if (w < 0.0) parse_fail(line_no, "negative weight");
    const Vertex a = id_of(u);
    const Vertex b = id_of(v);
    edges.push_back({a, b, w});
  });

  out.graph = build_graph(dense.size(), edges);
  return out;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, ptr);
}

std::string emit_edge_list(const WeightedGraph &g) {
  std::string out;
  for (const Edge &e : g.edges()) {
    out += std::to_string(e.u);
    out += ' ';
    out += std::to_string(e.v);
    out += ' ';
    out += format_double(e.w);
    out += '\n';
  }
  return out;
}

Subgraph largest_component(const WeightedGraph &g) {
  if (g.num_vertices() == 0) return Subgraph{};
  const auto components = connected_components(g);
  // Components arrive ordered by smallest vertex; the first maximum wins.
  const auto best = std::max_element(
      components.begin(), components.end(),
      [](const VertexSet &a, const VertexSet &b) { return a.size() < b.size(); });
  return restrict(g, *best);
}

// ---------------------------------------------------------------------------
// Images

GrayImage parse_pgm(std::string_view text) {
  std::vector<std::pair<std::string_view, std::size_t>> tokens;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    for (auto tok : split_whitespace(strip_comment(line))) tokens.emplace_back(tok, line_no);
  });
  if (tokens.empty() || tokens[0].first != "P2")
    throw Error(ErrorCode::ParseError, "line 1: expected ASCII PGM magic 'P2'");
  if (tokens.size() < 4)
    throw Error(ErrorCode::ParseError, "truncated PGM header");

  GrayImage img;
  double maxval = 0.0;
  if (!parse_number(tokens[1].first, img.width) ||
      !parse_number(tokens[2].first, img.height) ||
      !parse_number(tokens[3].first, maxval) || img.width == 0 ||
      img.height == 0 || maxval <= 0.0)
    parse_fail(tokens[3].second, "bad PGM header");
  const std::size_t count = img.width * img.height;
  if (tokens.size() != 4 + count)
    throw Error(ErrorCode::ParseError,
                "PGM declares " + std::to_string(count) + " pixels, found " +
                    std::to_string(tokens.size() - 4));
  img.intensities.resize(count);
  for (std::size_t i = 0; i < count; ++i) {
    double v = 0.0;
    const auto &[tok, line_no] = tokens[4 + i];
    if (!parse_number(tok, v) || v < 0.0 || v > maxval)
      parse_fail(line_no, "pixel value '" + std::string(tok) + "' outside [0, maxval]");
    img.intensities[i] = v;
  }
  return img;
}

GrayImage parse_csv_image(std::string_view text) {
  GrayImage img;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(strip_comment(line));
    if (line.empty()) return;
    std::size_t cols = 0;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      const auto cell = line.substr(start, comma == std::string_view::npos ? line.npos : comma - start);
      double v = 0.0;
      if (!parse_number(cell, v) || !std::isfinite(v) || v < 0.0)
        parse_fail(line_no, "bad intensity '" + std::string(trim(cell)) + "'");
      img.intensities.push_back(v);
      ++cols;
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (img.height == 0) img.width = cols;
    else if (cols != img.width)
      parse_fail(line_no, "row has " + std::to_string(cols) + " columns, expected " +
                              std::to_string(img.width));
    ++img.height;
  });
  if (img.height == 0) throw Error(ErrorCode::ParseError, "empty image");
  return img;
}

ImageGraph image_grid_graph(const GrayImage &img, std::size_t r) {
  if (r == 0 || r > std::min(img.width, img.height))
    throw Error(ErrorCode::BadGrid,
                "grid size " + std::to_string(r) + " must lie in [1, " +
                    std::to_string(std::min(img.width, img.height)) + "]");
  if (img.intensities.size() != img.width * img.height)
    throw Error(ErrorCode::BadGrid, "intensity count does not match dimensions");

  ImageGraph out;
  out.grid.width = r;
  out.grid.height = r;
  out.grid.intensities.assign(r * r, 0.0);
  for (std::size_t gr = 0; gr < r; ++gr) {
    const std::size_t r0 = gr * img.height / r, r1 = (gr + 1) * img.height / r;
    for (std::size_t gc = 0; gc < r; ++gc) {
      const std::size_t c0 = gc * img.width / r, c1 = (gc + 1) * img.width / r;
      double sum = 0.0;
      for (std::size_t y = r0; y < r1; ++y)
        for (std::size_t x = c0; x < c1; ++x) sum += img.at(y, x);
      out.grid.intensities[gr * r + gc] = sum / static_cast<double>((r1 - r0) * (c1 - c0));
    }
  }

  const auto id = [r](std::size_t row, std::size_t col) {
    return static_cast<Vertex>(row * r + col);
  };
  std::vector<Edge> edges;
  out.intensity_maxima = VertexSet(r * r);
  for (std::size_t row = 0; row < r; ++row) {
    for (std::size_t col = 0; col < r; ++col) {
      const double here = out.grid.at(row, col);
      bool maximal = true;
      for (int dr = -1; dr <= 1; ++dr) {
        for (int dc = -1; dc <= 1; ++dc) {
          if (dr == 0 && dc == 0) continue;
          const auto nr = static_cast<std::ptrdiff_t>(row) + dr;
          const auto nc = static_cast<std::ptrdiff_t>(col) + dc;
          if (nr < 0 || nc < 0 || nr >= static_cast<std::ptrdiff_t>(r) ||
              nc >= static_cast<std::ptrdiff_t>(r))
            continue;
          const double there = out.grid.at(static_cast<std::size_t>(nr),
                                            static_cast<std::size_t>(nc));
          if (there > here) maximal = false;
          const Vertex a = id(row, col);
          const Vertex b = id(static_cast<std::size_t>(nr), static_cast<std::size_t>(nc));
          if (a < b) edges.push_back({a, b, here * there});
        }
      }
      if (maximal) out.intensity_maxima.insert(id(row, col));
    }
  }
  out.graph = build_graph(r * r, edges);
  return out;
}

GrayImage synthetic_cell_image(std::size_t size, std::uint64_t seed,
                               std::size_t cells) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  struct Blob {
    double row, col, sigma;
  };
  std::vector<Blob> blobs;
  const auto extent = static_cast<double>(size);
  for (std::size_t c = 0; c < cells; ++c)
    blobs.push_back({extent * (0.15 + 0.7 * uniform()), extent * (0.15 + 0.7 * uniform()),
                     extent * (0.06 + 0.05 * uniform())});

  GrayImage img;
  img.width = size;
  img.height = size;
  img.intensities.resize(size * size);
  for (std::size_t row = 0; row < size; ++row) {
    for (std::size_t col = 0; col < size; ++col) {
      double v = 0.05 + 0.01 * uniform();
      for (const Blob &b : blobs) {
        const double dr = static_cast<double>(row) - b.row;
        const double dc = static_cast<double>(col) - b.col;
        v += std::exp(-(dr * dr + dc * dc) / (2.0 * b.sigma * b.sigma));
      }
      img.intensities[row * size + col] = v;
    }
  }
  return img;
}

// ---------------------------------------------------------------------------
// Point clouds

namespace {

double distance(const Point2 &a, const Point2 &b) {
  return std::hypot(a.x - b.x, a.y - b.y);
}

// Neighbours of point u that it links to: its k nearest plus everything
// within eps. Only v > u is kept for the eps clause; kNN links are kept in
// both directions and deduplicated later.
std::vector<Vertex> links_of(std::span<const Point2> points, Vertex u,
                             const KnnEpsParams &params) {
  const auto n = static_cast<Vertex>(points.size());
  std::vector<std::pair<double, Vertex>> ranked;
  ranked.reserve(n - 1);
  for (Vertex v = 0; v < n; ++v)
    if (v != u) ranked.emplace_back(distance(points[u], points[v]), v);
  const std::size_t k = std::min<std::size_t>(params.k, ranked.size());
  std::partial_sort(ranked.begin(), ranked.begin() + static_cast<std::ptrdiff_t>(k),
                    ranked.end());
  std::vector<Vertex> links;
  for (std::size_t i = 0; i < k; ++i) links.push_back(ranked[i].second);
  for (std::size_t i = k; i < ranked.size(); ++i)
    if (ranked[i].first <= params.eps) links.push_back(ranked[i].second);
  return links;
}

WeightedGraph assemble(std::span<const Point2> points,
                       const std::vector<std::vector<Vertex>> &links,
                       const KnnEpsParams &params) {
  std::vector<std::pair<Vertex, Vertex>> pairs;
  for (Vertex u = 0; u < links.size(); ++u)
    for (Vertex v : links[u]) pairs.emplace_back(std::min(u, v), std::max(u, v));
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());

  std::vector<Edge> edges;
  edges.reserve(pairs.size());
  for (const auto &[u, v] : pairs)
    edges.push_back({u, v, std::exp(-distance(points[u], points[v]) / params.scale)});
  return build_graph(points.size(), edges);
}

void check_points(std::span<const Point2> points) {
  if (points.size() < 2)
    throw Error(ErrorCode::PreconditionViolated, "need at least two points");
}

}  // namespace

WeightedGraph knn_eps_graph_serial(std::span<const Point2> points,
                                   const KnnEpsParams &params) {
  check_points(points);
  std::vector<std::vector<Vertex>> links(points.size());
  for (Vertex u = 0; u < points.size(); ++u) links[u] = links_of(points, u, params);
  return assemble(points, links, params);
}

WeightedGraph knn_eps_graph(std::span<const Point2> points,
                            const KnnEpsParams &params) {
  check_points(points);
  std::vector<std::vector<Vertex>> links(points.size());
  const auto n = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel for schedule(static)
  for (std::ptrdiff_t u = 0; u < n; ++u)
    links[static_cast<std::size_t>(u)] = links_of(points, static_cast<Vertex>(u), params);
  return assemble(points, links, params);
}

LabeledPoints sample_gaussian_mixture(std::size_t n, double delta,
                                      std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto uniform = [&rng] {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
  };
  LabeledPoints out;
  out.points.reserve(n);
  out.labels.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    const int label = uniform() < 0.5 ? 0 : 1;
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(1.0 - u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    const double centre = label == 0 ? 0.0 : delta;
    out.points.push_back({centre + radius * std::cos(angle),
                          centre + radius * std::sin(angle)});
    out.labels.push_back(label);
  }
  return out;
}

double classification_rate(std::span<const int> truth,
                           std::span<const int> predicted) {
  if (truth.size() != predicted.size())
    throw Error(ErrorCode::LengthMismatch,
                std::to_string(truth.size()) + " true labels vs " +
                    std::to_string(predicted.size()) + " predicted");
  if (truth.empty()) return 1.0;
  std::size_t same = 0;
  for (std::size_t i = 0; i < truth.size(); ++i)
    if (truth[i] == predicted[i]) ++same;
  const std::size_t swapped = truth.size() - same;
  return static_cast<double>(std::max(same, swapped)) /
         static_cast<double>(truth.size());
}

LabeledPoints parse_points_csv(std::string_view text) {
  LabeledPoints out;
  bool labelled = false;
  for_each_line(text, [&](std::size_t line_no, std::string_view line) {
    line = trim(strip_comment(line));
    if (line.empty()) return;
    std::vector<std::string_view> cells;
    std::size_t start = 0;
    for (;;) {
      const auto comma = line.find(',', start);
      cells.push_back(line.substr(start, comma == std::string_view::npos ? line.npos : comma - start));
      if (comma == std::string_view::npos) break;
      start = comma + 1;
    }
    if (cells.size() != 2 && cells.size() != 3)
      parse_fail(line_no, "expected \"x,y\" or \"x,y,label\"");
    Point2 p;
    if (!parse_number(cells[0], p.x) || !parse_number(cells[1], p.y) ||
        !std::isfinite(p.x) || !std::isfinite(p.y))
      parse_fail(line_no, "bad coordinate");
    const bool has_label = cells.size() == 3;
    if (out.points.empty()) labelled = has_label;
    else if (has_label != labelled) parse_fail(line_no, "inconsistent label column");
    if (has_label) {
      int label = 0;
      if (!parse_number(cells[2], label)) parse_fail(line_no, "bad label");
      out.labels.push_back(label);
    }
    out.points.push_back(p);
  });
  return out;
}

std::string emit_points_csv(const LabeledPoints &points) {
  const bool labelled = !points.labels.empty();
  if (labelled && points.labels.size() != points.points.size())
    throw Error(ErrorCode::LengthMismatch, "labels and points differ in length");
  std::string out;
  for (std::size_t i = 0; i < points.points.size(); ++i) {
    out += format_double(points.points[i].x);
    out += ',';
    out += format_double(points.points[i].y);
    if (labelled) {
      out += ',';
      out += std::to_string(points.labels[i]);
    }
    out += '\n';
  }
  return out;
}

// ---------------------------------------------------------------------------
// Files

std::string read_file(const std::filesystem::path &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file_atomic(const std::filesystem::path &path, std::string_view data) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
    if (!out) throw Error(ErrorCode::IoError, "short write to " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot rename onto " + path.string() + ": " + ec.message());
}

}  // namespace xist::ingest
