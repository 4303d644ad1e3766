#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace quadcolor {

using DartId = std::uint32_t;
using VertexId = std::uint32_t;

/// A connected, loopless graph cellularly embedded in an orientable surface,
/// stored as a rotation system.
///
/// Every edge is split into two darts (half-edges) paired by `twin`. Each
/// vertex lists its outgoing darts in clockwise cyclic order. The face
/// successor of a dart is `rotation_next(twin(d))`; faces are the orbits of
/// that permutation and their traversal order is the global "clockwise"
/// orientation used for reading colors around a face.
///
/// Instances are immutable once built. Rotation lists are stored starting at
/// their smallest dart id, which keeps the cyclic order and makes equality a
/// plain comparison.
class EmbeddedMap {
 public:
  EmbeddedMap() = default;

  /// Validates and builds a map.
  ///
  /// `rotations[v]` is the clockwise list of darts leaving vertex `v` and
  /// `twin` is the edge pairing. Throws StructureError when a dart is missing
  /// or duplicated, the pairing is not a fixed-point-free involution, an edge
  /// is a loop, or the graph is disconnected.
  static EmbeddedMap build(std::vector<std::vector<DartId>> rotations,
                           std::vector<DartId> twin);

  /// Builds the map whose traced faces are exactly `faces` (cyclic vertex
  /// lists in traversal order). Each directed edge u->v must occur in exactly
  /// one face and its reverse in exactly one face, so the underlying graph
  /// must be simple. Dart ids are assigned in order of appearance.
  static EmbeddedMap from_faces(std::size_t vertex_count,
                                std::span<const std::vector<VertexId>> faces);

  [[nodiscard]] std::size_t vertex_count() const noexcept { return rotations_.size(); }
  [[nodiscard]] std::size_t dart_count() const noexcept { return twin_.size(); }
  [[nodiscard]] std::size_t edge_count() const noexcept { return twin_.size() / 2; }

  [[nodiscard]] DartId twin(DartId d) const { return twin_[d]; }
  [[nodiscard]] VertexId origin(DartId d) const { return origin_[d]; }
  [[nodiscard]] VertexId target(DartId d) const { return origin_[twin_[d]]; }

  /// Clockwise successor of `d` around its origin.
  [[nodiscard]] DartId rotation_next(DartId d) const { return rotation_next_[d]; }
  [[nodiscard]] DartId rotation_prev(DartId d) const { return rotation_prev_[d]; }

  /// Next dart along the face that `d` bounds.
  [[nodiscard]] DartId face_next(DartId d) const { return rotation_next_[twin_[d]]; }

  [[nodiscard]] std::span<const DartId> rotation(VertexId v) const { return rotations_[v]; }
  [[nodiscard]] std::size_t degree(VertexId v) const { return rotations_[v].size(); }
  [[nodiscard]] const std::vector<std::vector<DartId>>& rotations() const noexcept {
    return rotations_;
  }
  [[nodiscard]] const std::vector<DartId>& twins() const noexcept { return twin_; }

  /// Same graph with every rotation reversed: the mirror-image embedding.
  /// Every face is traversed in the opposite sense.
  [[nodiscard]] EmbeddedMap mirrored() const;

  /// Same embedding with dart `d` renamed to `new_id[d]`.
  [[nodiscard]] EmbeddedMap relabeled(std::span<const DartId> new_id) const;

  friend bool operator==(const EmbeddedMap&, const EmbeddedMap&) = default;

 private:
  std::vector<std::vector<DartId>> rotations_;
  std::vector<DartId> twin_;
  std::vector<VertexId> origin_;
  std::vector<DartId> rotation_next_;
  std::vector<DartId> rotation_prev_;
};

/// Free-function spelling of EmbeddedMap::build.
[[nodiscard]] EmbeddedMap build_map(std::vector<std::vector<DartId>> rotations,
                                    std::vector<DartId> twin);

/// One face boundary: `darts[i]` leaves `vertices[i]`.
struct Face {
  std::vector<DartId> darts;
  std::vector<VertexId> vertices;

  [[nodiscard]] std::size_t size() const noexcept { return darts.size(); }
  friend bool operator==(const Face&, const Face&) = default;
};

/// All faces of the map. Each orbit starts at its smallest dart and orbits
/// are ordered by that dart, so the result is deterministic.
[[nodiscard]] std::vector<Face> trace_faces(const EmbeddedMap& map);

/// `result[d]` is the index in `faces` of the face containing dart `d`.
[[nodiscard]] std::vector<std::size_t> face_index_of_darts(const EmbeddedMap& map,
                                                           std::span<const Face> faces);

/// Genus k from V - E + F = 2 - 2k. A map without edges has genus 0.
/// Throws StructureError if the characteristic is odd or exceeds 2.
[[nodiscard]] int euler_genus(const EmbeddedMap& map);
[[nodiscard]] int euler_genus(const EmbeddedMap& map, std::span<const Face> faces);

/// True when removing any single edge leaves the graph connected.
[[nodiscard]] bool is_two_edge_connected(const EmbeddedMap& map);

struct ValidationReport {
  bool is_loopless = false;
  bool is_connected = false;
  bool is_two_edge_connected = false;
  bool all_faces_length_four = false;
  bool all_face_boundaries_simple = false;
  int genus = 0;
  std::size_t vertex_count = 0;
  std::size_t edge_count = 0;
  std::size_t face_count = 0;
  bool verdict = false;
};

/// Checks every condition for a quadrangulation of an orientable surface:
/// loopless, connected, bridgeless, and every face a 4-cycle on four distinct
/// vertices. Failures are reported in flags, never thrown.
[[nodiscard]] ValidationReport validate_quadrangulation(const EmbeddedMap& map);

}  // namespace quadcolor
