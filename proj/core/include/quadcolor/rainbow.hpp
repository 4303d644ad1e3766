#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "quadcolor/coloring.hpp"
#include "quadcolor/error.hpp"
#include "quadcolor/map.hpp"

namespace quadcolor {

/// Cyclic order of the four colors around a rainbow face, named by its
/// rotation that starts with color 1.
enum class CycleClass : std::uint8_t {
  k1234,
  k1243,
  k1324,
  k1342,
  k1423,
  k1432,
  not_rainbow,
};

inline constexpr std::array<CycleClass, 6> kRainbowClasses = {
    CycleClass::k1234, CycleClass::k1243, CycleClass::k1324,
    CycleClass::k1342, CycleClass::k1423, CycleClass::k1432,
};

/// The three (class, reversed class) pairs whose face counts must agree.
inline constexpr std::array<std::array<CycleClass, 2>, 3> kReversalPairs = {{
    {CycleClass::k1234, CycleClass::k1432},
    {CycleClass::k1243, CycleClass::k1342},
    {CycleClass::k1324, CycleClass::k1423},
}};

/// "1234", ..., "1432"; "none" for not_rainbow.
[[nodiscard]] std::string_view class_key(CycleClass c);
[[nodiscard]] std::optional<CycleClass> class_from_key(std::string_view key);
/// Canonical 4-tuple of a rainbow class.
[[nodiscard]] std::array<Color, 4> class_tuple(CycleClass c);
/// Class of the reversed cyclic order. not_rainbow maps to itself.
[[nodiscard]] CycleClass reversal(CycleClass c);
[[nodiscard]] inline std::size_t class_index(CycleClass c) { return static_cast<std::size_t>(c); }

/// Classifies colors read around a face. Not rainbow unless all four colors
/// occur; otherwise the tuple is rotated so that color 1 leads.
[[nodiscard]] CycleClass classify_colors(const std::array<Color, 4>& around);
/// Throws PreconditionError if the face does not have length 4.
[[nodiscard]] CycleClass classify_face(const Face& face, const Coloring& coloring);

enum class EdgeDirection { along, against };

/// Every edge is directed from its higher-colored end to its lower-colored
/// end; a dart is `along` when it points the same way. Throws ColoringError
/// when the endpoints share a color.
[[nodiscard]] EdgeDirection edge_direction(const EmbeddedMap& map, DartId d,
                                           const Coloring& coloring);

/// Boundary edges of a face split by whether their direction agrees with the
/// face traversal (`plus`) or opposes it (`minus`).
struct FaceDelta {
  int plus = 0;
  int minus = 0;
  int delta = 0;

  friend bool operator==(const FaceDelta&, const FaceDelta&) = default;
};

/// FaceDelta for colors read around a 4-face. Throws ColoringError if two
/// consecutive colors are equal.
[[nodiscard]] FaceDelta delta_of_colors(const std::array<Color, 4>& around);
/// Throws PreconditionError if the face does not have length 4.
[[nodiscard]] FaceDelta face_delta(const Face& face, const Coloring& coloring);

struct TheoremReport {
  std::array<std::uint64_t, 6> class_counts{};  // indexed by class_index
  std::uint64_t rainbow_total = 0;
  std::int64_t delta_sum = 0;
  std::array<bool, 3> pair_equalities{};  // in kReversalPairs order
  bool parity_even = false;
  bool verdict = false;

  [[nodiscard]] std::uint64_t count(CycleClass c) const { return class_counts[class_index(c)]; }

  /// Recomputes the derived fields (rainbow_total, pair_equalities,
  /// parity_even, verdict) from class_counts and delta_sum.
  void finalize();

  friend bool operator==(const TheoremReport&, const TheoremReport&) = default;
};

/// A coloring for which the face census contradicts the counting identity.
/// Carries the report and a dump of the map, the coloring and the faces.
class TheoremViolation : public Error {
 public:
  TheoremViolation(TheoremReport report, const std::string& dump)
      : Error("rainbow face counts violate the reversal identity\n" + dump),
        report_(report) {}

  [[nodiscard]] const TheoremReport& report() const noexcept { return report_; }

 private:
  TheoremReport report_;
};

/// Validates a quadrangulation once and checks many colorings against it.
/// Safe to share between threads after construction.
class TheoremChecker {
 public:
  /// Throws PreconditionError if `map` is not a quadrangulation.
  explicit TheoremChecker(EmbeddedMap map);

  /// Face census without judging the verdict. Throws ColoringError if the
  /// coloring is improper or the wrong size.
  [[nodiscard]] TheoremReport evaluate(const Coloring& coloring) const;
  /// Like evaluate, but throws TheoremViolation when the verdict is false.
  TheoremReport check(const Coloring& coloring) const;

  [[nodiscard]] const EmbeddedMap& map() const noexcept { return map_; }
  [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }

  /// Human-readable dump of the map, the coloring and every face.
  [[nodiscard]] std::string diagnostic(const Coloring& coloring) const;

 private:
  EmbeddedMap map_;
  std::vector<Face> faces_;
};

/// Face census of one proper coloring of a quadrangulation. Throws
/// PreconditionError for a non-quadrangulation, ColoringError for an improper
/// coloring and TheoremViolation if the counts disagree.
[[nodiscard]] TheoremReport verify_theorem(const EmbeddedMap& map, const Coloring& coloring);

struct SweepSummary {
  std::uint64_t checked = 0;
  std::uint64_t failures = 0;
  std::map<std::uint64_t, std::uint64_t> rainbow_histogram;  // rainbow_total -> colorings
  std::optional<std::string> first_failure;

  void merge(const SweepSummary& other);
  friend bool operator==(const SweepSummary&, const SweepSummary&) = default;
};

struct SweepOptions {
  std::optional<std::uint64_t> limit;
  /// Ignored when `limit` is set; a limited sweep follows the sequential
  /// lexicographic stream.
  unsigned threads = 1;
};

/// Checks every proper coloring (up to `limit`, in enumeration order).
[[nodiscard]] SweepSummary verify_all_colorings(const EmbeddedMap& map,
                                                const SweepOptions& options = {});

/// Checks `samples` colorings drawn by sample_proper_coloring; sample i uses
/// a seed derived from (seed, i) by splitmix64 mixing.
[[nodiscard]] SweepSummary verify_sampled(const EmbeddedMap& map, std::uint64_t samples,
                                          std::uint64_t seed);

/// Seed handed to sample_proper_coloring for sample `index` of a sweep.
[[nodiscard]] std::uint64_t sample_seed(std::uint64_t seed, std::uint64_t index);

}  // namespace quadcolor
