#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

#include "quadcolor/map.hpp"

namespace quadcolor {

/// Grid position of every vertex of a torus grid. Row 0 is the top row.
struct GridCoordinates {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<std::pair<std::size_t, std::size_t>> positions;  // (row, col) per vertex

  friend bool operator==(const GridCoordinates&, const GridCoordinates&) = default;
};

struct TorusGrid {
  EmbeddedMap map;
  GridCoordinates coords;
};

/// C_rows x C_cols on the torus. Vertex (r, c) has id r * cols + c and its
/// clockwise rotation is (right, down, left, up) with dart ids
/// 4 * id + {0, 1, 2, 3}. Throws PreconditionError unless rows, cols >= 3.
[[nodiscard]] TorusGrid torus_grid(std::size_t rows, std::size_t cols);

/// The hexahedron on the sphere. Vertex (x, y, z) in {0,1}^3 has id
/// x + 2y + 4z.
[[nodiscard]] EmbeddedMap cube();

/// A single 4-cycle 0-1-2-3 on the sphere: two quadrilateral faces.
[[nodiscard]] EmbeddedMap four_cycle();

/// Inserts a new vertex inside `face` joined to `corner` and to the corner
/// opposite it. With face (a, b, c, d) read from `corner` = a, the face is
/// replaced by (a, b, c, v) and (c, d, a, v). The new vertex gets the next
/// vertex id and the new darts are a->v, v->a, c->v, v->c numbered from
/// dart_count() upwards. Throws PreconditionError if `face` is not a face of
/// `map` of length 4 on four distinct vertices, or `corner` is not on it.
[[nodiscard]] EmbeddedMap diagonal_expand(const EmbeddedMap& map, const Face& face,
                                          VertexId corner);

/// Name of the pseudorandom generator used by random_quadrangulation.
inline constexpr std::string_view kRandomAlgorithm = "mt19937_64";

/// Applies `steps` diagonal expansions to `base`. Each step traces the faces,
/// then draws a face index (rng() % faces) and a corner index (rng() % 4)
/// from std::mt19937_64 seeded with `seed`. Throws PreconditionError if
/// `base` is not a quadrangulation.
[[nodiscard]] EmbeddedMap random_quadrangulation(const EmbeddedMap& base, std::size_t steps,
                                                 std::uint64_t seed);

}  // namespace quadcolor
