#include "cli.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <sstream>
#include <vector>

#include <CLI11.hpp>

#include "quadcolor/coloring.hpp"
#include "quadcolor/error.hpp"
#include "quadcolor/generators.hpp"
#include "quadcolor/io.hpp"
#include "quadcolor/map.hpp"
#include "quadcolor/rainbow.hpp"

namespace quadcolor::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GenTorusArgs {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::string output;
  std::string coords;
};

struct GenRandomArgs {
  std::string base;
  std::size_t steps = 0;
  std::uint64_t seed = 0;
  std::string output;
};

struct ColoringsArgs {
  std::string map;
  bool count = false;
  bool enumerate = false;
  bool sample = false;
  std::optional<std::uint64_t> limit;
  std::uint64_t seed = 0;
  bool fix_edge = false;
  unsigned threads = 1;
};

struct VerifyArgs {
  std::string map;
  std::string coloring;
  bool all = false;
  std::optional<std::uint64_t> limit;
  std::optional<std::uint64_t> samples;
  std::uint64_t seed = 0;
  unsigned threads = 1;
  bool json = false;
};

struct RenderArgs {
  std::string map;
  std::string coords;
  std::string coloring;
  std::string output;
};

EmbeddedMap load_map(const std::string& path) { return parse_map(read_text_file(path)); }

void print_sweep(std::ostream& out, const SweepSummary& s) {
  out << "checked: " << s.checked << '\n' << "failures: " << s.failures << '\n';
  out << "rainbow_total histogram:";
  for (const auto& [total, n] : s.rainbow_histogram) out << ' ' << total << ':' << n;
  out << '\n';
}

void print_report(std::ostream& out, const TheoremReport& r) {
  out << "class counts:";
  for (const auto c : kRainbowClasses) out << ' ' << class_key(c) << '=' << r.count(c);
  out << "\nrainbow faces: " << r.rainbow_total << (r.parity_even ? " (even)" : " (odd)")
      << "\ndelta sum: " << r.delta_sum << "\nverdict: " << (r.verdict ? "holds" : "VIOLATED")
      << '\n';
}

void print_validation(std::ostream& out, const ValidationReport& r) {
  const auto flag = [](bool b) { return b ? "yes" : "no"; };
  out << "vertices " << r.vertex_count << ", edges " << r.edge_count << ", faces "
      << r.face_count << ", genus " << r.genus << '\n'
      << "loopless: " << flag(r.is_loopless) << '\n'
      << "connected: " << flag(r.is_connected) << '\n'
      << "2-edge-connected: " << flag(r.is_two_edge_connected) << '\n'
      << "all faces of length 4: " << flag(r.all_faces_length_four) << '\n'
      << "all face boundaries simple: " << flag(r.all_face_boundaries_simple) << '\n'
      << "quadrangulation: " << flag(r.verdict) << '\n';
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Quadrangulations, proper 4-colorings and rainbow face counts", "quadcolor"};
  app.require_subcommand(1);

  // gen
  auto* gen = app.add_subcommand("gen", "Generate a quadrangulation map file");
  gen->require_subcommand(1);
  GenTorusArgs torus;
  auto* gen_torus = gen->add_subcommand("torus-grid", "C_rows x C_cols on the torus");
  gen_torus->add_option("--rows", torus.rows, "Number of rows (>= 3)")->required();
  gen_torus->add_option("--cols", torus.cols, "Number of columns (>= 3)")->required();
  gen_torus->add_option("-o,--output", torus.output, "Map file to write")->required();
  gen_torus->add_option("--coords", torus.coords, "Grid coordinate file to write");
  std::string cube_output;
  auto* gen_cube = gen->add_subcommand("cube", "The hexahedron on the sphere");
  gen_cube->add_option("-o,--output", cube_output, "Map file to write")->required();
  GenRandomArgs random;
  auto* gen_random = gen->add_subcommand("random", "Random diagonal expansions of a base map");
  gen_random->add_option("--base", random.base, "Base quadrangulation")->required();
  gen_random->add_option("--steps", random.steps, "Number of expansions")->required();
  gen_random->add_option("--seed", random.seed, "Seed")->required();
  gen_random->add_option("-o,--output", random.output, "Map file to write")->required();

  // validate
  std::string validate_map;
  bool validate_json = false;
  auto* validate = app.add_subcommand("validate", "Check the quadrangulation conditions");
  validate->add_option("map", validate_map, "Map file")->required();
  validate->add_flag("--json", validate_json, "Print a JSON report");

  // colorings
  ColoringsArgs col;
  auto* colorings = app.add_subcommand("colorings", "Count, enumerate or sample proper 4-colorings");
  colorings->add_option("map", col.map, "Map file")->required();
  auto* col_count = colorings->add_flag("--count", col.count, "Print the number of colorings");
  auto* col_enum = colorings->add_flag("--enumerate", col.enumerate,
                                       "Print colorings, one per line in vertex order");
  auto* col_sample = colorings->add_flag("--sample", col.sample,
                                         "Print one random coloring in coloring-file format");
  col_count->excludes(col_enum)->excludes(col_sample);
  col_enum->excludes(col_sample);
  colorings->add_option("--limit", col.limit, "Stop after this many colorings")->needs(col_enum);
  colorings->add_option("--seed", col.seed, "Seed for --sample")->needs(col_sample);
  colorings->add_flag("--fix-edge", col.fix_edge,
                      "Count with one edge pinned to colors (1,2), times 12")
      ->needs(col_count);
  colorings->add_option("--threads", col.threads, "Worker threads for --count")
      ->check(CLI::Range(1u, 256u));

  // verify
  VerifyArgs ver;
  auto* verify = app.add_subcommand("verify", "Check the rainbow face reversal identity");
  verify->add_option("map", ver.map, "Map file")->required();
  auto* ver_coloring = verify->add_option("--coloring", ver.coloring, "Coloring file");
  auto* ver_all = verify->add_flag("--all", ver.all, "Check every proper coloring");
  auto* ver_sample = verify->add_option("--sample", ver.samples, "Check N sampled colorings");
  ver_coloring->excludes(ver_all)->excludes(ver_sample);
  ver_all->excludes(ver_sample);
  verify->add_option("--limit", ver.limit, "With --all, stop after this many")->needs(ver_all);
  verify->add_option("--seed", ver.seed, "Seed for --sample")->needs(ver_sample);
  verify->add_option("--threads", ver.threads, "Worker threads for --all")
      ->check(CLI::Range(1u, 256u));
  verify->add_flag("--json", ver.json, "Print a JSON report");

  // render
  RenderArgs ren;
  auto* render = app.add_subcommand("render", "Draw a torus grid as SVG");
  render->add_option("map", ren.map, "Map file")->required();
  render->add_option("--coords", ren.coords, "Grid coordinate file")->required();
  render->add_option("--coloring", ren.coloring, "Coloring file")->required();
  render->add_option("-o,--output", ren.output, "SVG file to write")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
    if (colorings->parsed() && !col.count && !col.enumerate && !col.sample) {
      throw UsageError("colorings: one of --count, --enumerate or --sample is required");
    }
    if (verify->parsed() && ver.coloring.empty() && !ver.all && !ver.samples) {
      throw UsageError("verify: one of --coloring, --all or --sample is required");
    }
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    if (gen_torus->parsed()) {
      const auto grid = torus_grid(torus.rows, torus.cols);
      const std::vector<std::string> comments = {
          "torus grid " + std::to_string(torus.rows) + "x" + std::to_string(torus.cols)};
      write_text_file(torus.output, serialize_map(grid.map, comments));
      if (!torus.coords.empty()) write_text_file(torus.coords, serialize_coordinates(grid.coords));
      return kExitOk;
    }
    if (gen_cube->parsed()) {
      const std::vector<std::string> comments = {"cube"};
      write_text_file(cube_output, serialize_map(cube(), comments));
      return kExitOk;
    }
    if (gen_random->parsed()) {
      const auto map = random_quadrangulation(load_map(random.base), random.steps, random.seed);
      const std::vector<std::string> comments = {
          "random diagonal expansion: rng " + std::string(kRandomAlgorithm) + " seed " +
          std::to_string(random.seed) + " steps " + std::to_string(random.steps)};
      write_text_file(random.output, serialize_map(map, comments));
      return kExitOk;
    }
    if (validate->parsed()) {
      const auto report = validate_quadrangulation(load_map(validate_map));
      if (validate_json) {
        out << to_json(report);
      } else {
        print_validation(out, report);
      }
      return report.verdict ? kExitOk : kExitFailure;
    }
    if (colorings->parsed()) {
      const auto map = load_map(col.map);
      if (col.count) {
        out << count_proper_colorings(map, {.fix_first_edge = col.fix_edge, .threads = col.threads})
            << '\n';
      } else if (col.enumerate) {
        enumerate_proper_colorings(
            map,
            [&out](const Coloring& c) {
              for (std::size_t v = 0; v < c.size(); ++v) {
                out << (v ? " " : "") << static_cast<int>(c[static_cast<VertexId>(v)]);
              }
              out << '\n';
            },
            col.limit);
      } else {
        out << serialize_coloring(sample_proper_coloring(map, col.seed));
      }
      return kExitOk;
    }
    if (verify->parsed()) {
      const auto map = load_map(ver.map);
      if (!ver.coloring.empty()) {
        const auto coloring = parse_coloring(read_text_file(ver.coloring), map.vertex_count());
        const TheoremChecker checker(map);
        const auto report = checker.evaluate(coloring);
        if (ver.json) {
          out << to_json(report);
        } else {
          print_report(out, report);
        }
        if (!report.verdict) err << checker.diagnostic(coloring);
        return report.verdict ? kExitOk : kExitFailure;
      }
      const auto summary = ver.all
                               ? verify_all_colorings(map, {.limit = ver.limit, .threads = ver.threads})
                               : verify_sampled(map, *ver.samples, ver.seed);
      if (ver.json) {
        out << to_json(summary);
      } else {
        print_sweep(out, summary);
      }
      if (summary.first_failure) err << *summary.first_failure;
      return summary.failures == 0 ? kExitOk : kExitFailure;
    }
    if (render->parsed()) {
      const auto map = load_map(ren.map);
      const auto coords = parse_coordinates(read_text_file(ren.coords));
      const auto coloring = parse_coloring(read_text_file(ren.coloring), map.vertex_count());
      write_text_file(ren.output, render_svg(map, coords, coloring));
      return kExitOk;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace quadcolor::cli
