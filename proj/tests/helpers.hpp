#pragma once

#include <algorithm>
#include <array>
#include <vector>

#include "quadcolor/coloring.hpp"
#include "quadcolor/map.hpp"

namespace quadcolor::testing {

/// c(x, y, z) = 1 + ((x + 2y + 3z) mod 4) on the cube, vertex id x + 2y + 4z.
inline Coloring cube_residue_coloring() {
  std::vector<Color> colors(8);
  for (VertexId v = 0; v < 8; ++v) {
    const unsigned x = v & 1u, y = (v >> 1) & 1u, z = (v >> 2) & 1u;
    colors[v] = static_cast<Color>(1 + (x + 2 * y + 3 * z) % 4);
  }
  return Coloring(colors);
}

/// c(i, j) = 1 + ((i + 2j) mod 4) on a torus grid, i the row and j the column.
inline Coloring grid_residue_coloring(std::size_t rows, std::size_t cols) {
  std::vector<Color> colors(rows * cols);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) {
      colors[i * cols + j] = static_cast<Color>(1 + (i + 2 * j) % 4);
    }
  }
  return Coloring(colors);
}

/// Path 0-1-...-(n-1) with its only possible rotation system.
inline EmbeddedMap path_map(std::size_t n) {
  std::vector<std::vector<DartId>> rotations(n);
  std::vector<DartId> twin;
  for (VertexId v = 0; v + 1 < n; ++v) {
    const auto d = static_cast<DartId>(twin.size());
    rotations[v].push_back(d);
    rotations[v + 1].push_back(d + 1);
    twin.push_back(d + 1);
    twin.push_back(d);
  }
  return build_map(std::move(rotations), std::move(twin));
}

/// K_n with every vertex rotating through its neighbours in increasing order.
inline EmbeddedMap complete_graph_map(std::size_t n) {
  std::vector<std::vector<DartId>> rotations(n);
  std::vector<DartId> twin;
  std::vector<std::vector<DartId>> out(n, std::vector<DartId>(n));
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      const auto d = static_cast<DartId>(twin.size());
      out[a][b] = d;
      out[b][a] = d + 1;
      twin.push_back(d + 1);
      twin.push_back(d);
    }
  }
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = 0; b < n; ++b) {
      if (a != b) rotations[a].push_back(out[a][b]);
    }
  }
  return build_map(std::move(rotations), std::move(twin));
}

/// Every permutation of {1, 2, 3, 4}.
inline std::vector<std::array<Color, 4>> all_color_permutations() {
  std::array<Color, 4> p{1, 2, 3, 4};
  std::vector<std::array<Color, 4>> result;
  do {
    result.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return result;
}

}  // namespace quadcolor::testing
