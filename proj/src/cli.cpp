#include "xist/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iostream>
#include <limits>
#include <optional>
#include <sstream>

#include "xist/cuts.hpp"
#include "xist/error.hpp"
#include "xist/ingest.hpp"
#include "xist/multixist.hpp"
#include "xist/oracle.hpp"
#include "xist/xist.hpp"

namespace xist::cli {
namespace {

using Json = nlohmann::ordered_json;
using Clock = std::chrono::steady_clock;

struct InputOptions {
  std::string input;
  std::string format = "edgelist";
  std::string cut = "ncut";
  bool largest_component = false;
  std::size_t grid = 0;
  std::size_t knn = 5;
  double eps = 0.2;
  double scale = 0.2;
  std::string labels;
  std::string metrics;
  std::string trace;
  bool omit_timing = false;
};

struct LoadedGraph {
  WeightedGraph graph;
  std::optional<VertexSet> intensity_maxima;
};

void add_input_options(CLI::App &cmd, InputOptions &o) {
  cmd.add_option("--input", o.input, "Input file")->required();
  cmd.add_option("--format", o.format, "Input format")
      ->check(CLI::IsMember({"edgelist", "pgm", "csv", "csv-points"}));
  cmd.add_option("--cut", o.cut, "Balanced cut functional")
      ->check(CLI::IsMember({"mincut", "ratio", "ncut", "cheeger"}));
  cmd.add_flag("--largest-component", o.largest_component,
               "Restrict the graph to its largest connected component");
  cmd.add_option("--grid", o.grid, "Grid size r for image inputs (default: min(width, height))");
  cmd.add_option("--knn", o.knn, "Nearest neighbours per point (csv-points)");
  cmd.add_option("--eps", o.eps, "Neighbourhood radius (csv-points)");
  cmd.add_option("--scale", o.scale, "Weight length scale (csv-points)");
  cmd.add_option("--labels", o.labels, "Label output file, one integer per vertex");
  cmd.add_option("--metrics", o.metrics, "Metrics output file (JSON)");
  cmd.add_option("--trace", o.trace, "Per-iteration trace output file (JSON)");
  cmd.add_flag("--omit-timing", o.omit_timing,
               "Write wall_time_seconds as null so reruns are byte-identical");
}

LoadedGraph load_graph(const InputOptions &o) {
  const std::string text = ingest::read_file(o.input);
  LoadedGraph loaded;
  if (o.format == "edgelist") {
    loaded.graph = ingest::parse_edge_list(text).graph;
  } else if (o.format == "csv-points") {
    const auto points = ingest::parse_points_csv(text);
    loaded.graph = ingest::knn_eps_graph(points.points, {o.knn, o.eps, o.scale});
  } else {
    const auto img = o.format == "pgm" ? ingest::parse_pgm(text) : ingest::parse_csv_image(text);
    const std::size_t r = o.grid ? o.grid : std::min(img.width, img.height);
    auto built = ingest::image_grid_graph(img, r);
    loaded.graph = std::move(built.graph);
    loaded.intensity_maxima = std::move(built.intensity_maxima);
  }

  if (o.largest_component && loaded.graph.num_vertices() > 0) {
    Subgraph sub = ingest::largest_component(loaded.graph);
    if (loaded.intensity_maxima) {
      VertexSet local(sub.original.size());
      for (std::size_t i = 0; i < sub.original.size(); ++i)
        if (loaded.intensity_maxima->contains(sub.original[i])) local.insert(static_cast<Vertex>(i));
      loaded.intensity_maxima = std::move(local);
    }
    loaded.graph = std::move(sub.graph);
  }
  return loaded;
}

std::string labels_text(std::span<const int> labels) {
  std::string out;
  for (int l : labels) {
    out += std::to_string(l);
    out += '\n';
  }
  return out;
}

Json number_or_null(double v) {
  return std::isfinite(v) ? Json(v) : Json(nullptr);
}

void write_json(const std::string &path, const Json &j) {
  if (!path.empty()) ingest::write_file_atomic(path, j.dump(2) + "\n");
}

Json timing(const InputOptions &o, Clock::time_point start) {
  if (o.omit_timing) return nullptr;
  return std::chrono::duration<double>(Clock::now() - start).count();
}

int cmd_cut(const InputOptions &o, const std::string &subset, std::ostream &out,
            std::ostream &err) {
  const auto start = Clock::now();
  const CutKind kind = *parse_cut_kind(o.cut);
  LoadedGraph loaded = load_graph(o);
  const WeightedGraph &g = loaded.graph;
  if (g.num_vertices() < 2) {
    err << "error: the graph needs at least two vertices\n";
    return kExitDataError;
  }

  SweepOptions sweep;
  sweep.record_trace = !o.trace.empty();
  SweepResult r;
  if (subset == "all") {
    r = xvst_basic(g, kind);
  } else if (subset == "intensity") {
    if (!loaded.intensity_maxima) {
      err << "error: --subset intensity needs an image input (pgm or csv)\n";
      return kExitUsage;
    }
    if (loaded.intensity_maxima->size() < 2 && is_connected(g)) {
      err << "error: fewer than two intensity maxima; rerun with --subset all\n";
      return kExitDegenerateVloc;
    }
    r = xist_on_subset(g, kind, *loaded.intensity_maxima, sweep);
  } else {
    r = xist(g, kind, sweep);
  }
  if (r.status == SweepStatus::DegenerateVloc) {
    err << "error: the graph has a single local maximum, so Xist has no pair "
           "to cut; rerun with --subset all\n";
    return kExitDegenerateVloc;
  }

  std::vector<int> labels(g.num_vertices());
  for (Vertex v = 0; v < g.num_vertices(); ++v) labels[v] = r.cut.partition.contains(v) ? 0 : 1;
  if (!o.labels.empty()) ingest::write_file_atomic(o.labels, labels_text(labels));

  Json m;
  m["command"] = "cut";
  m["cut"] = std::string(to_string(kind));
  m["subset"] = subset;
  m["status"] = to_string(r.status);
  m["n"] = g.num_vertices();
  m["m"] = g.num_edges();
  m["value"] = number_or_null(r.cut.value);
  m["normalized_value"] = number_or_null(r.cut.normalized_value);
  m["partition_size"] = r.cut.partition.size();
  m["partition_volume"] = vol(g, r.cut.partition);
  m["terminals"] = r.terminals.size();
  m["flow_calls"] = r.flow_calls;
  m["wall_time_seconds"] = timing(o, start);
  write_json(o.metrics, m);

  if (!o.trace.empty()) {
    Json t = Json::array();
    for (const SweepIteration &it : r.trace)
      t.push_back({{"i", it.index},
                   {"s", it.s},
                   {"t", it.t},
                   {"mincut_value", number_or_null(it.mincut_value)},
                   {"xcut_value", number_or_null(it.xcut_value)},
                   {"tau", it.tau}});
    write_json(o.trace, t);
  }

  out << "status=" << to_string(r.status) << " value=" << ingest::format_double(r.cut.value)
      << " normalized=" << ingest::format_double(r.cut.normalized_value)
      << " |S|=" << r.cut.partition.size() << " flow_calls=" << r.flow_calls << "\n";
  return kExitOk;
}

int cmd_multicut(const InputOptions &o, std::size_t k, std::ostream &out,
                 std::ostream &err) {
  const auto start = Clock::now();
  const CutKind kind = *parse_cut_kind(o.cut);
  const WeightedGraph g = load_graph(o).graph;
  const MultiCutResult r = multi_xist(g, kind, k);
  if (r.status == MultiStatus::UnreachableK) {
    err << "error: only " << r.clusters.size() << " splittable clusters exist, k = " << k << "\n";
    return kExitDataError;
  }
  if (!o.labels.empty()) ingest::write_file_atomic(o.labels, labels_text(r.labels));

  Json m;
  m["command"] = "multicut";
  m["cut"] = std::string(to_string(kind));
  m["status"] = "ok";
  m["n"] = g.num_vertices();
  m["m"] = g.num_edges();
  m["k"] = k;
  Json sizes = Json::array();
  for (const VertexSet &c : r.clusters) sizes.push_back(c.size());
  m["cluster_sizes"] = sizes;
  m["value"] = number_or_null(multiway_xcut_value(g, kind, r.clusters));
  m["steps"] = r.trace.size();
  m["wall_time_seconds"] = timing(o, start);
  write_json(o.metrics, m);

  if (!o.trace.empty()) {
    Json t = Json::array();
    for (const MultiStep &s : r.trace)
      t.push_back({{"slot", s.slot},
                   {"new_slot", s.new_slot},
                   {"first_size", s.first.size()},
                   {"second_size", s.second.size()},
                   {"first_cost", number_or_null(s.first_cost)},
                   {"second_cost", number_or_null(s.second_cost)}});
    write_json(o.trace, t);
  }

  out << "clusters=" << r.clusters.size() << " value="
      << ingest::format_double(multiway_xcut_value(g, kind, r.clusters)) << "\n";
  return kExitOk;
}

int cmd_oracle(const oracle::SuiteOptions &options, std::ostream &out) {
  const auto report = oracle::run_property_suite(options);
  for (const auto &t : report.tallies) {
    out << (t.violations ? "FAIL " : "ok   ") << t.name << ": " << t.checks << " checks, "
        << t.violations << " violations";
    if (t.violations) out << " (first: " << t.first_failure << ")";
    out << "\n";
  }
  return report.ok() ? kExitOk : kExitDataError;
}

int cmd_gen_gaussian(std::size_t n, double delta, std::uint64_t seed,
                     const std::string &path, std::ostream &out) {
  const auto points = ingest::sample_gaussian_mixture(n, delta, seed);
  const std::string csv = ingest::emit_points_csv(points);
  if (path.empty()) out << csv;
  else ingest::write_file_atomic(path, csv);
  return kExitOk;
}

std::vector<std::size_t> parse_sizes(const std::string &list) {
  std::vector<std::size_t> sizes;
  std::stringstream ss(list);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t v = 0;
    try {
      v = std::stoul(item);
    } catch (const std::exception &) {
      throw CLI::ValidationError("--sizes", "'" + item + "' is not a grid size");
    }
    sizes.push_back(v);
  }
  if (sizes.empty()) throw CLI::ValidationError("--sizes", "empty list");
  return sizes;
}

int cmd_bench_grid(const std::string &image, const std::string &format,
                   const std::vector<std::size_t> &sizes, const std::string &cut,
                   std::size_t repeats, const std::string &path, std::ostream &out) {
  ingest::GrayImage img;
  if (image.empty()) {
    img = ingest::synthetic_cell_image(480, 7);
  } else {
    const std::string text = ingest::read_file(image);
    const bool csv = format == "csv" || (format.empty() && image.ends_with(".csv"));
    img = csv ? ingest::parse_csv_image(text) : ingest::parse_pgm(text);
  }
  const CutKind kind = *parse_cut_kind(cut);

  std::string csv = "r,n,m,terminals,flow_calls,seconds\n";
  for (std::size_t r : sizes) {
    const auto built = ingest::image_grid_graph(img, r);
    double best = std::numeric_limits<double>::infinity();
    SweepResult result;
    for (std::size_t rep = 0; rep < std::max<std::size_t>(1, repeats); ++rep) {
      const auto start = Clock::now();
      result = xist_with_fallback(built.graph, kind);
      best = std::min(best, std::chrono::duration<double>(Clock::now() - start).count());
    }
    csv += std::to_string(r) + "," + std::to_string(built.graph.num_vertices()) + "," +
           std::to_string(built.graph.num_edges()) + "," +
           std::to_string(result.terminals.size()) + "," +
           std::to_string(result.flow_calls) + "," + ingest::format_double(best) + "\n";
  }
  if (path.empty()) out << csv;
  else ingest::write_file_atomic(path, csv);
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Balanced graph cuts through st-MinCuts between local maxima", "xistcut"};
  app.require_subcommand(1);

  InputOptions cut_opts;
  std::string subset = "degree";
  auto *cut = app.add_subcommand("cut", "Two-way cut with Xist");
  add_input_options(*cut, cut_opts);
  cut->add_option("--subset", subset, "Terminal set: degree maxima, intensity maxima, or all vertices")
      ->check(CLI::IsMember({"degree", "intensity", "all"}));

  InputOptions multi_opts;
  std::size_t k = 2;
  auto *multicut = app.add_subcommand("multicut", "k-way cut with Multi-Xist");
  add_input_options(*multicut, multi_opts);
  multicut->add_option("--k", k, "Number of clusters")->required()->check(CLI::Range(2, 1 << 30));

  oracle::SuiteOptions suite;
  suite.max_n = 14;
  auto *oracle_cmd = app.add_subcommand("oracle", "Property suite on random graphs");
  oracle_cmd->add_option("--min-n", suite.min_n, "Smallest graph size")->check(CLI::Range(4, 16));
  oracle_cmd->add_option("--max-n", suite.max_n, "Largest graph size")->check(CLI::Range(4, 16));
  oracle_cmd->add_option("--trials", suite.trials, "Number of random graphs");
  oracle_cmd->add_option("--seed", suite.seed, "Random seed");

  auto *gen = app.add_subcommand("gen", "Generate synthetic inputs");
  gen->require_subcommand(1);
  std::size_t gen_n = 100;
  double gen_delta = 4.0;
  std::uint64_t gen_seed = 1;
  std::string gen_out;
  auto *gaussian = gen->add_subcommand("gaussian", "Two-component Gaussian mixture points");
  gaussian->add_option("--n", gen_n, "Number of points")->check(CLI::PositiveNumber);
  gaussian->add_option("--delta", gen_delta, "Offset of the second component")->check(CLI::NonNegativeNumber);
  gaussian->add_option("--seed", gen_seed, "Random seed");
  gaussian->add_option("--out", gen_out, "Output CSV (default: stdout)");

  auto *bench = app.add_subcommand("bench", "Timing studies");
  bench->require_subcommand(1);
  std::string bench_image, bench_format, bench_sizes = "8,12,16,24,32", bench_cut = "ncut", bench_out;
  std::size_t bench_repeats = 3;
  auto *grid = bench->add_subcommand("grid", "Xist wall time over image grid sizes");
  grid->add_option("--image", bench_image, "PGM or CSV image (default: synthetic cells)");
  grid->add_option("--format", bench_format, "Image format")->check(CLI::IsMember({"pgm", "csv"}));
  grid->add_option("--sizes", bench_sizes, "Comma-separated grid sizes");
  grid->add_option("--cut", bench_cut, "Balanced cut functional")
      ->check(CLI::IsMember({"mincut", "ratio", "ncut", "cheeger"}));
  grid->add_option("--repeats", bench_repeats, "Timed repetitions per size (minimum is kept)");
  grid->add_option("--out", bench_out, "Output CSV (default: stdout)");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
    if (*cut) return cmd_cut(cut_opts, subset, out, err);
    if (*multicut) return cmd_multicut(multi_opts, k, out, err);
    if (*oracle_cmd) {
      if (suite.min_n > suite.max_n) throw CLI::ValidationError("--min-n", "exceeds --max-n");
      return cmd_oracle(suite, out);
    }
    if (*gaussian) return cmd_gen_gaussian(gen_n, gen_delta, gen_seed, gen_out, out);
    if (*grid)
      return cmd_bench_grid(bench_image, bench_format, parse_sizes(bench_sizes), bench_cut,
                            bench_repeats, bench_out, out);
  } catch (const CLI::CallForHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp &e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError &e) {
    app.exit(e, out, err);
    return kExitUsage;
  } catch (const Error &e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kExitDataError;
  }
  return kExitUsage;
}

int run(int argc, char **argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(args, std::cout, std::cerr);
}

}  // namespace xist::cli
