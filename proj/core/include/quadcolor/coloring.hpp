#pragma once

#include <array>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "quadcolor/map.hpp"

namespace quadcolor {

using Color = std::uint8_t;
inline constexpr Color kColorCount = 4;

/// A color in {1, 2, 3, 4} for every vertex.
class Coloring {
 public:
  Coloring() = default;
  /// Throws ColoringError if any value lies outside {1, 2, 3, 4}.
  explicit Coloring(std::vector<Color> colors);

  [[nodiscard]] std::size_t size() const noexcept { return colors_.size(); }
  [[nodiscard]] Color operator[](VertexId v) const { return colors_[v]; }
  [[nodiscard]] std::span<const Color> values() const noexcept { return colors_; }

  /// Recolors every vertex by `permutation[c - 1]`; the permutation must be
  /// a bijection of {1, 2, 3, 4}.
  [[nodiscard]] Coloring permuted(const std::array<Color, 4>& permutation) const;

  friend auto operator<=>(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Color> colors_;
};

/// True iff the endpoints of every edge get different colors. Throws
/// ColoringError when the coloring does not have one entry per vertex.
[[nodiscard]] bool is_proper(const EmbeddedMap& map, const Coloring& coloring);

struct FixedColor {
  VertexId vertex;
  Color color;
};

/// Streams the proper 4-colorings of a map in lexicographic order of the
/// color vector (vertex 0 most significant) by backtracking over vertices in
/// id order. Vertices listed in `fixed` only take their given color, which
/// restricts the stream to the matching sub-sequence.
///
/// A map without vertices yields exactly one empty coloring.
class ProperColoringEnumerator {
 public:
  explicit ProperColoringEnumerator(const EmbeddedMap& map,
                                    std::span<const FixedColor> fixed = {});

  /// Next coloring, or nullopt once the stream is exhausted.
  std::optional<Coloring> next();

 private:
  bool conflicts(std::size_t v, Color c) const;

  std::vector<std::vector<VertexId>> earlier_neighbors_;
  std::vector<std::uint8_t> allowed_;  // bit c set when color c may be used
  std::vector<Color> colors_;
  std::size_t position_ = 0;
  bool done_ = false;
};

/// Calls `visit` for every proper coloring in lexicographic order, stopping
/// after `limit` colorings. Returns the number visited.
std::uint64_t enumerate_proper_colorings(const EmbeddedMap& map,
                                         const std::function<void(const Coloring&)>& visit,
                                         std::optional<std::uint64_t> limit = std::nullopt);

/// All proper colorings, collected.
[[nodiscard]] std::vector<Coloring> proper_colorings(
    const EmbeddedMap& map, std::optional<std::uint64_t> limit = std::nullopt);

/// Proper colorings of vertices 0..depth-1 of the subgraph they induce, in
/// lexicographic order. Running one ProperColoringEnumerator per prefix (with
/// the prefix fixed) and concatenating the streams reproduces the full
/// enumeration; this is how work is split between threads.
[[nodiscard]] std::vector<std::vector<Color>> coloring_prefixes(const EmbeddedMap& map,
                                                                std::size_t depth);

/// Splits the enumeration into prefix blocks and runs them on `threads`
/// threads. `make_worker` is called once per thread, up front on the calling
/// thread, and the visitor it returns only ever runs on that worker's thread.
/// Blocks are claimed in order but finish in any order, so visitors should
/// accumulate order-independent results.
void parallel_enumerate_proper_colorings(
    const EmbeddedMap& map, unsigned threads,
    const std::function<std::function<void(const Coloring&)>()>& make_worker,
    std::span<const FixedColor> fixed = {});

struct CountOptions {
  /// Pin the endpoints of the edge of dart 0 to colors (1, 2) and multiply
  /// the result by 12. Gives the same total because every proper coloring is
  /// one of 12 color permutations of a pinned one.
  bool fix_first_edge = false;
  unsigned threads = 1;
};

[[nodiscard]] std::uint64_t count_proper_colorings(const EmbeddedMap& map,
                                                   const CountOptions& options = {});

/// A proper coloring found by randomized backtracking, deterministic per
/// (map, seed).
///
/// Vertex ranks and per-vertex color orders are drawn from std::mt19937_64.
/// The search always extends the uncolored vertex with the fewest remaining
/// colors (ties broken by rank), tries its colors in its own random order,
/// and backtracks as soon as some uncolored vertex has no color left. Throws
/// ColoringError if the map has no proper 4-coloring.
[[nodiscard]] Coloring sample_proper_coloring(const EmbeddedMap& map, std::uint64_t seed);

}  // namespace quadcolor
