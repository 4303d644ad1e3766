#include "quadcolor/rainbow.hpp"

#include <algorithm>
#include <sstream>

#include "quadcolor/io.hpp"
#include "random.hpp"

namespace quadcolor {

namespace {

constexpr std::array<std::string_view, 7> kKeys = {"1234", "1243", "1324", "1342",
                                                   "1423", "1432", "none"};

std::array<Color, 4> face_colors(const Face& face, const Coloring& coloring) {
  if (face.vertices.size() != 4) {
    throw PreconditionError("face has length " + std::to_string(face.vertices.size()) +
                            ", expected 4");
  }
  std::array<Color, 4> around{};
  for (std::size_t i = 0; i < 4; ++i) {
    if (face.vertices[i] >= coloring.size()) throw ColoringError("face vertex is not colored");
    around[i] = coloring[face.vertices[i]];
  }
  return around;
}

}  // namespace

std::string_view class_key(CycleClass c) { return kKeys[class_index(c)]; }

std::optional<CycleClass> class_from_key(std::string_view key) {
  for (std::size_t i = 0; i < kKeys.size(); ++i) {
    if (kKeys[i] == key) return static_cast<CycleClass>(i);
  }
  return std::nullopt;
}

std::array<Color, 4> class_tuple(CycleClass c) {
  if (c == CycleClass::not_rainbow) throw PreconditionError("not a rainbow class");
  const auto key = class_key(c);
  return {static_cast<Color>(key[0] - '0'), static_cast<Color>(key[1] - '0'),
          static_cast<Color>(key[2] - '0'), static_cast<Color>(key[3] - '0')};
}

CycleClass reversal(CycleClass c) {
  if (c == CycleClass::not_rainbow) return c;
  const auto t = class_tuple(c);
  // (1, a, b, c) read backwards from 1 is (1, c, b, a).
  return classify_colors({t[0], t[3], t[2], t[1]});
}

CycleClass classify_colors(const std::array<Color, 4>& around) {
  auto sorted = around;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != std::array<Color, 4>{1, 2, 3, 4}) return CycleClass::not_rainbow;
  const auto lead = static_cast<std::size_t>(std::find(around.begin(), around.end(), 1) -
                                             around.begin());
  std::string key;
  for (std::size_t i = 0; i < 4; ++i) key.push_back(static_cast<char>('0' + around[(lead + i) % 4]));
  return *class_from_key(key);
}

CycleClass classify_face(const Face& face, const Coloring& coloring) {
  return classify_colors(face_colors(face, coloring));
}

EdgeDirection edge_direction(const EmbeddedMap& map, DartId d, const Coloring& coloring) {
  const auto from = coloring[map.origin(d)];
  const auto to = coloring[map.target(d)];
  if (from == to) {
    throw ColoringError("edge " + std::to_string(map.origin(d)) + "-" +
                        std::to_string(map.target(d)) + " has both ends colored " +
                        std::to_string(static_cast<int>(from)));
  }
  return from > to ? EdgeDirection::along : EdgeDirection::against;
}

FaceDelta delta_of_colors(const std::array<Color, 4>& around) {
  FaceDelta result;
  for (std::size_t i = 0; i < 4; ++i) {
    const auto from = around[i];
    const auto to = around[(i + 1) % 4];
    if (from == to) throw ColoringError("adjacent face corners share a color");
    (from > to ? result.plus : result.minus) += 1;
  }
  result.delta = result.plus - result.minus;
  return result;
}

FaceDelta face_delta(const Face& face, const Coloring& coloring) {
  return delta_of_colors(face_colors(face, coloring));
}

void TheoremReport::finalize() {
  rainbow_total = 0;
  for (const auto n : class_counts) rainbow_total += n;
  for (std::size_t p = 0; p < kReversalPairs.size(); ++p) {
    pair_equalities[p] = count(kReversalPairs[p][0]) == count(kReversalPairs[p][1]);
  }
  parity_even = rainbow_total % 2 == 0;
  verdict = std::all_of(pair_equalities.begin(), pair_equalities.end(), [](bool b) { return b; }) &&
            parity_even && delta_sum == 0;
}

TheoremChecker::TheoremChecker(EmbeddedMap map) : map_(std::move(map)) {
  const auto validation = validate_quadrangulation(map_);
  if (!validation.verdict) throw PreconditionError("map is not a quadrangulation");
  faces_ = trace_faces(map_);
}

TheoremReport TheoremChecker::evaluate(const Coloring& coloring) const {
  if (coloring.size() != map_.vertex_count()) {
    throw ColoringError("coloring has " + std::to_string(coloring.size()) +
                        " entries but the map has " + std::to_string(map_.vertex_count()) +
                        " vertices");
  }
  // Every edge bounds some face, so delta_of_colors also checks properness.
  TheoremReport report;
  for (const auto& face : faces_) {
    const auto around = face_colors(face, coloring);
    report.delta_sum += delta_of_colors(around).delta;
    const auto cls = classify_colors(around);
    if (cls != CycleClass::not_rainbow) ++report.class_counts[class_index(cls)];
  }
  report.finalize();
  return report;
}

TheoremReport TheoremChecker::check(const Coloring& coloring) const {
  auto report = evaluate(coloring);
  if (!report.verdict) throw TheoremViolation(report, diagnostic(coloring));
  return report;
}

std::string TheoremChecker::diagnostic(const Coloring& coloring) const {
  std::ostringstream out;
  out << "map:\n" << serialize_map(map_) << "coloring:\n" << serialize_coloring(coloring);
  out << "faces:\n";
  for (std::size_t f = 0; f < faces_.size(); ++f) {
    const auto& face = faces_[f];
    out << "  face " << f << ":";
    for (const auto v : face.vertices) out << ' ' << v << '=' << static_cast<int>(coloring[v]);
    if (face.size() == 4) {
      const auto around = face_colors(face, coloring);
      out << "  class " << class_key(classify_colors(around));
      try {
        out << " delta " << delta_of_colors(around).delta;
      } catch (const ColoringError&) {
        out << " delta undefined";
      }
    }
    out << '\n';
  }
  return out.str();
}

TheoremReport verify_theorem(const EmbeddedMap& map, const Coloring& coloring) {
  return TheoremChecker(map).check(coloring);
}

void SweepSummary::merge(const SweepSummary& other) {
  checked += other.checked;
  failures += other.failures;
  for (const auto& [total, n] : other.rainbow_histogram) rainbow_histogram[total] += n;
  if (!first_failure && other.first_failure) first_failure = other.first_failure;
}

namespace {

void record(SweepSummary& summary, const TheoremChecker& checker, const Coloring& coloring) {
  const auto report = checker.evaluate(coloring);
  ++summary.checked;
  ++summary.rainbow_histogram[report.rainbow_total];
  if (!report.verdict) {
    ++summary.failures;
    if (!summary.first_failure) summary.first_failure = checker.diagnostic(coloring);
  }
}

}  // namespace

SweepSummary verify_all_colorings(const EmbeddedMap& map, const SweepOptions& options) {
  const TheoremChecker checker(map);
  SweepSummary summary;
  if (options.limit) {
    enumerate_proper_colorings(
        map, [&](const Coloring& c) { record(summary, checker, c); }, options.limit);
    return summary;
  }
  std::vector<SweepSummary> partial;
  partial.reserve(std::max(options.threads, 1u));
  parallel_enumerate_proper_colorings(
      map, options.threads, [&]() -> std::function<void(const Coloring&)> {
        auto& slot = partial.emplace_back();
        return [&slot, &checker](const Coloring& c) { record(slot, checker, c); };
      });
  for (const auto& p : partial) summary.merge(p);
  return summary;
}

std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index) {
  return detail::derive_seed(seed, index);
}

SweepSummary verify_sampled(const EmbeddedMap& map, std::uint64_t samples, std::uint64_t seed) {
  const TheoremChecker checker(map);
  SweepSummary summary;
  for (std::uint64_t i = 0; i < samples; ++i) {
    record(summary, checker, sample_proper_coloring(map, sample_seed(seed, i)));
  }
  return summary;
}

}  // namespace quadcolor
