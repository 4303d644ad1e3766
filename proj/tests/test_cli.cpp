#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <random>
#include <sstream>

#include <json.hpp>

#include "cli.hpp"
#include "helpers.hpp"
#include "quadcolor/generators.hpp"
#include "quadcolor/io.hpp"

using namespace quadcolor;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::initializer_list<std::string> args) {
  const std::vector<std::string> v(args);
  std::ostringstream out, err;
  const int code = cli::run(v, out, err);
  return {code, out.str(), err.str()};
}

class TempDir {
 public:
  TempDir() {
    std::random_device rd;
    path_ = std::filesystem::temp_directory_path() /
            ("quadcolor-cli-" + std::to_string(rd()) + std::to_string(rd()));
    std::filesystem::create_directories(path_);
  }
  ~TempDir() {
    std::error_code ec;
    std::filesystem::remove_all(path_, ec);
  }
  std::string operator/(const std::string& name) const { return (path_ / name).string(); }

 private:
  std::filesystem::path path_;
};

}  // namespace

TEST_CASE("cli: generated torus validates") {
  TempDir dir;
  const auto map = dir / "t.map";
  const auto coords = dir / "t.coords";
  CHECK(run({"gen", "torus-grid", "--rows", "4", "--cols", "5", "-o", map, "--coords", coords})
            .code == cli::kExitOk);
  CHECK(parse_map(read_text_file(map)) == torus_grid(4, 5).map);
  CHECK(parse_coordinates(read_text_file(coords)) == torus_grid(4, 5).coords);

  const auto r = run({"validate", map});
  CHECK(r.code == cli::kExitOk);
  CHECK(r.out.find("genus 1") != std::string::npos);

  const auto j = run({"validate", map, "--json"});
  CHECK(j.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(j.out).at("genus") == 1);

  CHECK(run({"gen", "torus-grid", "--rows", "2", "--cols", "5", "-o", map}).code ==
        cli::kExitFailure);
}

TEST_CASE("cli: validate rejects a bridge") {
  TempDir dir;
  const auto map = dir / "bridge.map";
  write_text_file(map, serialize_map(testing::path_map(2)));
  const auto r = run({"validate", map});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.out.find("2-edge-connected: no") != std::string::npos);
}

TEST_CASE("cli: unreadable or malformed input is a failure, not a usage error") {
  TempDir dir;
  CHECK(run({"validate", dir / "missing.map"}).code == cli::kExitFailure);
  const auto bad = dir / "bad.map";
  write_text_file(bad, "quadmap 1\ndarts 3\n");
  const auto r = run({"validate", bad});
  CHECK(r.code == cli::kExitFailure);
  CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("cli: usage errors") {
  CHECK(run({}).code == cli::kExitUsage);
  CHECK(run({"frobnicate"}).code == cli::kExitUsage);
  CHECK(run({"verify"}).code == cli::kExitUsage);
  CHECK(run({"verify", "x.map"}).code == cli::kExitUsage);
  CHECK(run({"colorings", "x.map"}).code == cli::kExitUsage);
  CHECK(run({"colorings", "x.map", "--count", "--sample"}).code == cli::kExitUsage);
  CHECK(run({"gen", "torus-grid", "--rows", "3"}).code == cli::kExitUsage);
  CHECK(run({"--help"}).code == cli::kExitOk);
}

TEST_CASE("cli: colorings") {
  TempDir dir;
  const auto map = dir / "cube.map";
  REQUIRE(run({"gen", "cube", "-o", map}).code == cli::kExitOk);

  CHECK(run({"colorings", map, "--count"}).out == "2652\n");
  CHECK(run({"colorings", map, "--count", "--fix-edge"}).out == "2652\n");
  CHECK(run({"colorings", map, "--count", "--threads", "3"}).out == "2652\n");

  const auto listed = run({"colorings", map, "--enumerate", "--limit", "3"});
  CHECK(listed.code == cli::kExitOk);
  CHECK(listed.out.substr(0, 16) == "1 2 2 1 2 1 1 2\n");
  CHECK(std::count(listed.out.begin(), listed.out.end(), '\n') == 3);

  const auto sampled = run({"colorings", map, "--sample", "--seed", "9"});
  CHECK(sampled.code == cli::kExitOk);
  CHECK(parse_coloring(sampled.out, 8) == sample_proper_coloring(cube(), 9));
}

TEST_CASE("cli: verify modes") {
  TempDir dir;
  const auto map = dir / "cube.map";
  REQUIRE(run({"gen", "cube", "-o", map}).code == cli::kExitOk);
  const auto coloring = dir / "c.txt";
  write_text_file(coloring, serialize_coloring(testing::cube_residue_coloring()));

  const auto one = run({"verify", map, "--coloring", coloring, "--json"});
  CHECK(one.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(one.out).at("verdict") == true);

  const auto all = run({"verify", map, "--all", "--threads", "2"});
  CHECK(all.code == cli::kExitOk);
  CHECK(all.out.find("checked: 2652") != std::string::npos);
  CHECK(all.out.find("failures: 0") != std::string::npos);

  const auto limited = run({"verify", map, "--all", "--limit", "100", "--json"});
  CHECK(nlohmann::json::parse(limited.out).at("checked") == 100);

  const auto sampled = run({"verify", map, "--sample", "50", "--seed", "3", "--json"});
  CHECK(sampled.code == cli::kExitOk);
  CHECK(nlohmann::json::parse(sampled.out).at("checked") == 50);
  CHECK(sampled.out == run({"verify", map, "--sample", "50", "--seed", "3", "--json"}).out);

  write_text_file(coloring, "0 1\n1 1\n2 1\n3 1\n4 1\n5 1\n6 1\n7 1\n");
  CHECK(run({"verify", map, "--coloring", coloring}).code == cli::kExitFailure);
}

TEST_CASE("cli: random generation is reproducible") {
  TempDir dir;
  const auto base = dir / "cube.map";
  REQUIRE(run({"gen", "cube", "-o", base}).code == cli::kExitOk);
  const auto a = dir / "a.map";
  const auto b = dir / "b.map";
  CHECK(run({"gen", "random", "--base", base, "--steps", "30", "--seed", "5", "-o", a}).code ==
        cli::kExitOk);
  CHECK(run({"gen", "random", "--base", base, "--steps", "30", "--seed", "5", "-o", b}).code ==
        cli::kExitOk);
  CHECK(read_text_file(a) == read_text_file(b));
  CHECK(parse_map(read_text_file(a)) == random_quadrangulation(cube(), 30, 5));
  CHECK(run({"validate", a}).code == cli::kExitOk);
}

TEST_CASE("cli: render") {
  TempDir dir;
  const auto map = dir / "t.map";
  const auto coords = dir / "t.coords";
  const auto coloring = dir / "c.txt";
  const auto svg = dir / "t.svg";
  REQUIRE(run({"gen", "torus-grid", "--rows", "4", "--cols", "4", "-o", map, "--coords", coords})
              .code == cli::kExitOk);
  write_text_file(coloring, serialize_coloring(testing::grid_residue_coloring(4, 4)));
  CHECK(run({"render", map, "--coords", coords, "--coloring", coloring, "-o", svg}).code ==
        cli::kExitOk);
  const auto grid = torus_grid(4, 4);
  CHECK(read_text_file(svg) ==
        render_svg(grid.map, grid.coords, testing::grid_residue_coloring(4, 4)));
}
