#include <doctest.h>

#include <fstream>

#include <json.hpp>

#include "helpers.hpp"
#include "quadcolor/error.hpp"
#include "quadcolor/generators.hpp"
#include "quadcolor/io.hpp"

using namespace quadcolor;

namespace {

std::string golden(const std::string& name) {
  return read_text_file(std::string(QUADCOLOR_GOLDEN_DIR) + "/" + name);
}

std::size_t count_occurrences(const std::string& text, const std::string& needle) {
  std::size_t n = 0;
  for (auto pos = text.find(needle); pos != std::string::npos; pos = text.find(needle, pos + 1)) {
    ++n;
  }
  return n;
}

}  // namespace

TEST_CASE("cube serializes to the golden file") {
  CHECK(serialize_map(cube()) == golden("cube.map"));
  CHECK(parse_map(golden("cube.map")) == cube());
}

TEST_CASE("map round trip is exact on generated maps") {
  const std::vector<EmbeddedMap> maps = {four_cycle(), cube(), torus_grid(3, 3).map,
                                         torus_grid(5, 4).map,
                                         random_quadrangulation(cube(), 60, 2),
                                         random_quadrangulation(torus_grid(3, 3).map, 60, 3)};
  for (const auto& map : maps) {
    const auto text = serialize_map(map);
    const auto parsed = parse_map(text);
    CHECK(parsed == map);
    CHECK(serialize_map(parsed) == text);
  }
}

TEST_CASE("comments and blank lines are ignored") {
  const std::vector<std::string> comments = {"generated by a test", "second line"};
  const auto text = serialize_map(cube(), comments);
  CHECK(text.find("# generated by a test\n") != std::string::npos);
  CHECK(parse_map(text) == cube());
  CHECK(parse_map("\n# leading\n" + text + "\n\n") == cube());
}

TEST_CASE("rotation lists may start anywhere") {
  const auto map = cube();
  auto text = serialize_map(map);
  const auto r = map.rotation(0);
  std::string line = "vertex 0:";
  for (const auto d : r) line += " " + std::to_string(d);
  std::string rotated = "vertex 0:";
  for (std::size_t i = 1; i <= r.size(); ++i) rotated += " " + std::to_string(r[i % r.size()]);
  const auto pos = text.find(line + "\n");
  REQUIRE(pos != std::string::npos);
  text.replace(pos, line.size(), rotated);
  CHECK(parse_map(text) == map);
}

TEST_CASE("relabeled maps may serialize differently") {
  const auto map = four_cycle();
  std::vector<DartId> perm = {1, 0, 2, 3, 4, 5, 6, 7};
  const auto relabeled = map.relabeled(perm);
  CHECK(euler_genus(relabeled) == euler_genus(map));
  CHECK(serialize_map(relabeled) != serialize_map(map));
}

TEST_CASE("parse errors") {
  SUBCASE("empty file") {
    CHECK_THROWS_WITH_AS((void)parse_map(""), doctest::Contains("missing header"), ParseError);
    CHECK_THROWS_WITH_AS((void)parse_map("# only a comment\n"), doctest::Contains("missing header"),
                         ParseError);
  }
  SUBCASE("wrong header") {
    CHECK_THROWS_AS((void)parse_map("quadmap 2\ndarts 0\n"), ParseError);
    CHECK_THROWS_AS((void)parse_map("graph\n"), ParseError);
  }
  SUBCASE("dart listed twice") {
    try {
      (void)parse_map("quadmap 1\ndarts 4\nvertex 0: 0 2\nvertex 1: 1 2\nedge 0 1\nedge 2 3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
      CHECK(std::string(e.what()).find("already listed") != std::string::npos);
    }
  }
  SUBCASE("dart in two edges") {
    try {
      (void)parse_map("quadmap 1\ndarts 4\nvertex 0: 0 2\nvertex 1: 1 3\nedge 0 1\nedge 0 3\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 6);
    }
  }
  SUBCASE("dart count mismatch") {
    CHECK_THROWS_WITH_AS((void)parse_map("quadmap 1\ndarts 4\nvertex 0: 0\nvertex 1: 1\nedge 0 1\n"),
                         doctest::Contains("dart count mismatch"), ParseError);
    CHECK_THROWS_AS((void)parse_map("quadmap 1\ndarts 2\nvertex 0: 0\nvertex 1: 5\nedge 0 1\n"),
                    ParseError);
  }
  SUBCASE("self-paired dart") {
    CHECK_THROWS_WITH_AS((void)parse_map("quadmap 1\ndarts 2\nvertex 0: 0\nvertex 1: 1\nedge 0 0\n"),
                         doctest::Contains("loop detected"), ParseError);
  }
  SUBCASE("garbage") {
    try {
      (void)parse_map("quadmap 1\ndarts 2\nvertex 0: 0\nvertex 1: x\n");
      FAIL("expected a parse error");
    } catch (const ParseError& e) {
      CHECK(e.line() == 4);
    }
    CHECK_THROWS_AS((void)parse_map("quadmap 1\ndarts 2\nfoo 1 2\n"), ParseError);
    CHECK_THROWS_AS((void)parse_map("quadmap 1\ndarts 3\n"), ParseError);
  }
  SUBCASE("missing vertex") {
    CHECK_THROWS_WITH_AS((void)parse_map("quadmap 1\ndarts 2\nvertex 0: 0\nvertex 2: 1\nedge 0 1\n"),
                         doctest::Contains("vertex 1 is missing"), ParseError);
  }
  SUBCASE("structural errors surface from the map builder") {
    CHECK_THROWS_AS(
        (void)parse_map("quadmap 1\ndarts 4\nvertex 0: 0\nvertex 1: 1\nvertex 2: 2\nvertex 3: 3\n"
                  "edge 0 1\nedge 2 3\n"),
        StructureError);
  }
}

TEST_CASE("coloring files") {
  const Coloring c({1, 2, 3, 4});
  CHECK(serialize_coloring(c) == "0 1\n1 2\n2 3\n3 4\n");
  CHECK(parse_coloring(serialize_coloring(c), 4) == c);
  CHECK(parse_coloring("# comment\n3 4\n0 1\n2 3\n1 2\n", 4) == c);
  CHECK_THROWS_AS((void)parse_coloring("0 1\n1 2\n2 3\n", 4), ParseError);
  CHECK_THROWS_AS((void)parse_coloring("0 1\n0 2\n", 2), ParseError);
  CHECK_THROWS_AS((void)parse_coloring("0 5\n", 1), ParseError);
  CHECK_THROWS_AS((void)parse_coloring("0 0\n", 1), ParseError);
  CHECK_THROWS_AS((void)parse_coloring("4 1\n", 4), ParseError);
}

TEST_CASE("coordinate files") {
  const auto grid = torus_grid(3, 4);
  const auto text = serialize_coordinates(grid.coords);
  CHECK(text.rfind("gridcoords 1\nsize 3 4\n", 0) == 0);
  CHECK(parse_coordinates(text) == grid.coords);
  CHECK_THROWS_AS((void)parse_coordinates(""), ParseError);
  CHECK_THROWS_AS((void)parse_coordinates("gridcoords 1\nsize 1 2\n0 0 0\n"), ParseError);
  CHECK_THROWS_AS((void)parse_coordinates("gridcoords 1\nsize 1 2\n0 0 0\n1 0 0\n"), ParseError);
}

TEST_CASE("theorem report JSON schema") {
  const auto report = verify_theorem(torus_grid(4, 4).map, testing::grid_residue_coloring(4, 4));
  const auto j = nlohmann::json::parse(to_json(report));
  REQUIRE(j.is_object());
  const auto& counts = j.at("class_counts");
  REQUIRE(counts.is_object());
  CHECK(counts.size() == 6);
  for (const auto* key : {"1234", "1243", "1324", "1342", "1423", "1432"}) {
    REQUIRE(counts.contains(key));
    CHECK(counts.at(key).is_number_unsigned());
  }
  CHECK(counts.at("1243") == 4);
  CHECK(counts.at("1234") == 0);
  CHECK(j.at("rainbow_total") == 16);
  CHECK(j.at("delta_sum").is_number_integer());
  CHECK(j.at("delta_sum") == 0);
  const auto& pairs = j.at("pair_equalities");
  REQUIRE(pairs.is_object());
  CHECK(pairs.size() == 3);
  for (const auto& [key, value] : pairs.items()) CHECK(value.is_boolean());
  CHECK(j.at("parity_even") == true);
  CHECK(j.at("verdict") == true);
}

TEST_CASE("validation and sweep JSON") {
  const auto v = nlohmann::json::parse(to_json(validate_quadrangulation(cube())));
  for (const auto* key : {"is_loopless", "is_connected", "is_two_edge_connected",
                          "all_faces_length_four", "all_face_boundaries_simple", "verdict"}) {
    CHECK(v.at(key).is_boolean());
  }
  CHECK(v.at("genus") == 0);

  const auto s = nlohmann::json::parse(to_json(verify_all_colorings(cube())));
  CHECK(s.at("checked") == 2652);
  CHECK(s.at("failures") == 0);
  CHECK(s.at("rainbow_total_histogram").at("6") == 24);
  CHECK_FALSE(s.contains("first_failure"));
}

TEST_CASE("SVG rendering") {
  const auto grid = torus_grid(4, 4);
  const auto residue = testing::grid_residue_coloring(4, 4);

  SUBCASE("residue coloring has no gray face") {
    const auto svg = render_svg(grid.map, grid.coords, residue);
    CHECK(count_occurrences(svg, "class=\"face gray\"") == 0);
    CHECK(count_occurrences(svg, "class=\"face white\"") == 16);
    CHECK(svg == render_svg(grid.map, grid.coords, residue));
    CHECK(svg == golden("c4x4_residue.svg"));
  }
  SUBCASE("two-color checkerboard has no gray face") {
    std::vector<Color> colors(16);
    for (std::size_t v = 0; v < 16; ++v) colors[v] = static_cast<Color>(1 + (v / 4 + v % 4) % 2);
    const auto svg = render_svg(grid.map, grid.coords, Coloring(colors));
    CHECK(count_occurrences(svg, "class=\"face gray\"") == 0);
  }
  SUBCASE("gray faces are the 1234 and 1432 faces") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
      const auto c = sample_proper_coloring(grid.map, seed);
      const auto report = verify_theorem(grid.map, c);
      const auto svg = render_svg(grid.map, grid.coords, c);
      CHECK(count_occurrences(svg, "class=\"face gray\"") ==
            report.count(CycleClass::k1234) + report.count(CycleClass::k1432));
    }
  }
  SUBCASE("errors") {
    GridCoordinates missing = grid.coords;
    missing.positions.pop_back();
    CHECK_THROWS_AS((void)render_svg(grid.map, missing, residue), PreconditionError);
    const auto grown = random_quadrangulation(grid.map, 1, 1);
    CHECK_THROWS_AS((void)render_svg(grown, grid.coords, sample_proper_coloring(grown, 1)),
                    PreconditionError);
    CHECK_THROWS_AS((void)render_svg(grid.map, grid.coords, Coloring(std::vector<Color>(16, 1))),
                    ColoringError);
  }
}
