#pragma once

#include <filesystem>
#include <span>
#include <string>
#include <string_view>

#include "quadcolor/coloring.hpp"
#include "quadcolor/generators.hpp"
#include "quadcolor/map.hpp"
#include "quadcolor/rainbow.hpp"

namespace quadcolor {

// Map files are line oriented; '#' starts a comment.
//
//   quadmap 1
//   darts <2E>
//   vertex <v>: <d1> <d2> ... <dk>     clockwise rotation at v
//   edge <da> <db>                     twin pair
//
// Vertex ids must be exactly 0..V-1. Syntax errors and dart bookkeeping
// errors raise ParseError with the offending line; structural problems found
// when building the map (loops, disconnection) raise StructureError.
[[nodiscard]] EmbeddedMap parse_map(std::string_view text);

/// Canonical text: vertices ascending, each rotation starting at its
/// smallest dart, edges sorted by their smaller dart. `comments` are written
/// as '#' lines after the header.
[[nodiscard]] std::string serialize_map(const EmbeddedMap& map,
                                        std::span<const std::string> comments = {});

// Coloring files hold one "<vertex> <color>" line per vertex.
[[nodiscard]] Coloring parse_coloring(std::string_view text, std::size_t vertex_count);
[[nodiscard]] std::string serialize_coloring(const Coloring& coloring);

// Coordinate sidecar for grid maps:
//
//   gridcoords 1
//   size <rows> <cols>
//   <vertex> <row> <col>
[[nodiscard]] GridCoordinates parse_coordinates(std::string_view text);
[[nodiscard]] std::string serialize_coordinates(const GridCoordinates& coords);

[[nodiscard]] std::string read_text_file(const std::filesystem::path& path);
void write_text_file(const std::filesystem::path& path, std::string_view text);

// JSON reports (single object, two-space indent, trailing newline).
[[nodiscard]] std::string to_json(const ValidationReport& report);
[[nodiscard]] std::string to_json(const TheoremReport& report);
[[nodiscard]] std::string to_json(const SweepSummary& summary);

/// Flat drawing of a torus grid: the fundamental rectangle with wraparound
/// edges cut into stubs at its border. Vertices show their color and faces of
/// class 1234 or 1432 are filled gray. Every face is emitted as a
/// `<g class="face gray">` or `<g class="face white">` group.
///
/// Throws PreconditionError when a vertex has no coordinates or a face or
/// edge does not sit on the grid, ColoringError for an improper coloring.
[[nodiscard]] std::string render_svg(const EmbeddedMap& map, const GridCoordinates& coords,
                                     const Coloring& coloring);

}  // namespace quadcolor
