#include "quadcolor/coloring.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <string>
#include <thread>

#include "quadcolor/error.hpp"
#include "random.hpp"

namespace quadcolor {

namespace {

constexpr std::uint8_t kAllColors = 0b11110;  // bits 1..4

std::vector<std::vector<VertexId>> earlier_neighbors(const EmbeddedMap& map) {
  std::vector<std::vector<VertexId>> result(map.vertex_count());
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    auto& list = result[v];
    for (const auto d : map.rotation(v)) {
      const auto u = map.target(d);
      if (u < v) list.push_back(u);
    }
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
  }
  return result;
}

}  // namespace

Coloring::Coloring(std::vector<Color> colors) : colors_(std::move(colors)) {
  for (std::size_t v = 0; v < colors_.size(); ++v) {
    if (colors_[v] < 1 || colors_[v] > kColorCount) {
      throw ColoringError("vertex " + std::to_string(v) + " has color " +
                          std::to_string(static_cast<int>(colors_[v])) +
                          ", expected a value in 1..4");
    }
  }
}

Coloring Coloring::permuted(const std::array<Color, 4>& permutation) const {
  auto sorted = permutation;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Color, 4>{1, 2, 3, 4}) {
    throw ColoringError("color permutation is not a bijection of {1,2,3,4}");
  }
  auto colors = colors_;
  for (auto& c : colors) c = permutation[c - 1];
  return Coloring(std::move(colors));
}

bool is_proper(const EmbeddedMap& map, const Coloring& coloring) {
  if (coloring.size() != map.vertex_count()) {
    throw ColoringError("coloring has " + std::to_string(coloring.size()) +
                        " entries but the map has " + std::to_string(map.vertex_count()) +
                        " vertices");
  }
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (coloring[map.origin(d)] == coloring[map.target(d)]) return false;
  }
  return true;
}

ProperColoringEnumerator::ProperColoringEnumerator(const EmbeddedMap& map,
                                                   std::span<const FixedColor> fixed)
    : earlier_neighbors_(earlier_neighbors(map)),
      allowed_(map.vertex_count(), kAllColors),
      colors_(map.vertex_count(), 0) {
  for (const auto& [v, c] : fixed) {
    if (v >= map.vertex_count()) throw ColoringError("fixed vertex out of range");
    if (c < 1 || c > kColorCount) throw ColoringError("fixed color out of range");
    allowed_[v] &= static_cast<std::uint8_t>(1u << c);
  }
}

bool ProperColoringEnumerator::conflicts(std::size_t v, Color c) const {
  return std::any_of(earlier_neighbors_[v].begin(), earlier_neighbors_[v].end(),
                     [&](VertexId u) { return colors_[u] == c; });
}

std::optional<Coloring> ProperColoringEnumerator::next() {
  if (done_) return std::nullopt;
  const auto n = colors_.size();
  if (n == 0) {
    done_ = true;
    return Coloring{};
  }
  // position_ points at the vertex whose color is advanced next; after a
  // yield it is the last vertex.
  while (true) {
    auto c = static_cast<Color>(colors_[position_] + 1);
    while (c <= kColorCount && (!((allowed_[position_] >> c) & 1u) || conflicts(position_, c))) {
      ++c;
    }
    if (c > kColorCount) {
      colors_[position_] = 0;
      if (position_ == 0) {
        done_ = true;
        return std::nullopt;
      }
      --position_;
      continue;
    }
    colors_[position_] = c;
    if (position_ + 1 == n) return Coloring(colors_);
    ++position_;
  }
}

std::uint64_t enumerate_proper_colorings(const EmbeddedMap& map,
                                         const std::function<void(const Coloring&)>& visit,
                                         std::optional<std::uint64_t> limit) {
  ProperColoringEnumerator stream(map);
  std::uint64_t visited = 0;
  while (!limit || visited < *limit) {
    auto coloring = stream.next();
    if (!coloring) break;
    visit(*coloring);
    ++visited;
  }
  return visited;
}

std::vector<Coloring> proper_colorings(const EmbeddedMap& map,
                                       std::optional<std::uint64_t> limit) {
  std::vector<Coloring> result;
  enumerate_proper_colorings(
      map, [&](const Coloring& c) { result.push_back(c); }, limit);
  return result;
}

std::vector<std::vector<Color>> coloring_prefixes(const EmbeddedMap& map, std::size_t depth) {
  depth = std::min(depth, map.vertex_count());
  const auto earlier = earlier_neighbors(map);
  std::vector<std::vector<Color>> result;
  std::vector<Color> prefix(depth, 1);
  // Odometer over {1..4}^depth in lexicographic order.
  while (true) {
    bool ok = true;
    for (std::size_t v = 0; v < depth && ok; ++v) {
      for (const auto u : earlier[v]) {
        if (prefix[u] == prefix[v]) {
          ok = false;
          break;
        }
      }
    }
    if (ok) result.push_back(prefix);
    std::size_t i = depth;
    while (i > 0 && prefix[i - 1] == kColorCount) prefix[--i] = 1;
    if (i == 0) break;
    ++prefix[i - 1];
  }
  return result;
}

void parallel_enumerate_proper_colorings(
    const EmbeddedMap& map, unsigned threads,
    const std::function<std::function<void(const Coloring&)>()>& make_worker,
    std::span<const FixedColor> fixed) {
  threads = std::max(threads, 1u);
  if (threads == 1 || map.vertex_count() == 0) {
    auto visit = make_worker();
    ProperColoringEnumerator stream(map, fixed);
    while (auto c = stream.next()) visit(*c);
    return;
  }

  std::size_t depth = 1;
  auto prefixes = coloring_prefixes(map, depth);
  while (depth < map.vertex_count() && depth < 8 && prefixes.size() < 8 * threads) {
    prefixes = coloring_prefixes(map, ++depth);
  }

  std::vector<std::function<void(const Coloring&)>> workers;
  for (unsigned t = 0; t < threads; ++t) workers.push_back(make_worker());

  std::atomic<std::size_t> next_block{0};
  std::vector<std::jthread> pool;
  for (unsigned t = 0; t < threads; ++t) {
    pool.emplace_back([&, t] {
      std::vector<FixedColor> pins(fixed.begin(), fixed.end());
      const auto base = pins.size();
      while (true) {
        const auto block = next_block.fetch_add(1);
        if (block >= prefixes.size()) break;
        pins.resize(base);
        for (std::size_t v = 0; v < prefixes[block].size(); ++v) {
          pins.push_back({static_cast<VertexId>(v), prefixes[block][v]});
        }
        ProperColoringEnumerator stream(map, pins);
        while (auto c = stream.next()) workers[t](*c);
      }
    });
  }
}

std::uint64_t count_proper_colorings(const EmbeddedMap& map, const CountOptions& options) {
  std::vector<FixedColor> fixed;
  std::uint64_t multiplier = 1;
  if (options.fix_first_edge && map.dart_count() > 0) {
    fixed = {{map.origin(0), 1}, {map.target(0), 2}};
    multiplier = 12;
  }
  std::vector<std::uint64_t> counts;
  counts.reserve(std::max(options.threads, 1u));
  parallel_enumerate_proper_colorings(
      map, options.threads,
      [&]() -> std::function<void(const Coloring&)> {
        auto& slot = counts.emplace_back(0);
        return [&slot](const Coloring&) { ++slot; };
      },
      fixed);
  return multiplier * std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
}

Coloring sample_proper_coloring(const EmbeddedMap& map, std::uint64_t seed) {
  const auto n = map.vertex_count();
  detail::Rng rng(seed);

  std::vector<std::size_t> by_rank(n);
  std::iota(by_rank.begin(), by_rank.end(), std::size_t{0});
  detail::shuffle(std::span(by_rank), rng);
  std::vector<std::size_t> rank(n);
  for (std::size_t i = 0; i < n; ++i) rank[by_rank[i]] = i;

  std::vector<std::array<Color, 4>> color_order(n, {1, 2, 3, 4});
  for (auto& order : color_order) detail::shuffle(std::span(order), rng);

  std::vector<std::vector<VertexId>> neighbors(n);
  for (VertexId v = 0; v < n; ++v) {
    for (const auto d : map.rotation(v)) neighbors[v].push_back(map.target(d));
  }

  // blocked[v][c]: colored neighbors of v carrying color c
  std::vector<std::array<std::uint32_t, kColorCount + 1>> blocked(n, {0, 0, 0, 0, 0});
  std::vector<Color> color(n, 0);
  const auto available = [&](VertexId v) {
    int k = 0;
    for (Color c = 1; c <= kColorCount; ++c) k += blocked[v][c] == 0;
    return k;
  };
  const auto select = [&]() -> std::optional<VertexId> {
    std::optional<VertexId> best;
    int best_avail = kColorCount + 1;
    for (VertexId v = 0; v < n; ++v) {
      if (color[v] != 0) continue;
      const int a = available(v);
      if (a < best_avail || (a == best_avail && rank[v] < rank[*best])) {
        best = v;
        best_avail = a;
      }
    }
    return best;
  };
  const auto assign = [&](VertexId v, Color c) {
    color[v] = c;
    bool dead_end = false;
    for (const auto u : neighbors[v]) {
      ++blocked[u][c];
      if (color[u] == 0 && blocked[u][c] == 1 && available(u) == 0) dead_end = true;
    }
    return !dead_end;
  };
  const auto unassign = [&](VertexId v) {
    for (const auto u : neighbors[v]) --blocked[u][color[v]];
    color[v] = 0;
  };

  struct Frame {
    VertexId vertex;
    std::size_t next = 0;
  };
  std::vector<Frame> stack;
  bool extend = true;
  while (true) {
    if (extend) {
      const auto v = select();
      if (!v) break;
      stack.push_back({*v});
    }
    auto& frame = stack.back();
    bool placed = false;
    while (frame.next < kColorCount && !placed) {
      const auto c = color_order[frame.vertex][frame.next++];
      if (blocked[frame.vertex][c] != 0) continue;
      if (assign(frame.vertex, c)) {
        placed = true;
      } else {
        unassign(frame.vertex);
      }
    }
    if (placed) {
      extend = true;
      continue;
    }
    stack.pop_back();
    if (stack.empty()) throw ColoringError("map has no proper 4-coloring");
    unassign(stack.back().vertex);
    extend = false;
  }
  return Coloring(std::move(color));
}

}  // namespace quadcolor
