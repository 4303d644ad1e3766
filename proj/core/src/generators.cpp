#include "quadcolor/generators.hpp"

#include <algorithm>
#include <array>
#include <string>

#include "quadcolor/error.hpp"
#include "random.hpp"

namespace quadcolor {

TorusGrid torus_grid(std::size_t rows, std::size_t cols) {
  if (rows < 3 || cols < 3) {
    throw PreconditionError("torus grid needs at least 3 rows and 3 columns, got " +
                            std::to_string(rows) + "x" + std::to_string(cols));
  }
  enum : DartId { kRight = 0, kDown = 1, kLeft = 2, kUp = 3 };
  const auto id = [cols](std::size_t r, std::size_t c) {
    return static_cast<DartId>(r * cols + c);
  };

  const auto v_count = rows * cols;
  std::vector<std::vector<DartId>> rotations(v_count);
  std::vector<DartId> twin(4 * v_count);
  TorusGrid grid;
  grid.coords.rows = rows;
  grid.coords.cols = cols;
  grid.coords.positions.resize(v_count);
  for (std::size_t r = 0; r < rows; ++r) {
    for (std::size_t c = 0; c < cols; ++c) {
      const auto v = id(r, c);
      const auto right = id(r, (c + 1) % cols);
      const auto down = id((r + 1) % rows, c);
      rotations[v] = {4 * v + kRight, 4 * v + kDown, 4 * v + kLeft, 4 * v + kUp};
      twin[4 * v + kRight] = 4 * right + kLeft;
      twin[4 * right + kLeft] = 4 * v + kRight;
      twin[4 * v + kDown] = 4 * down + kUp;
      twin[4 * down + kUp] = 4 * v + kDown;
      grid.coords.positions[v] = {r, c};
    }
  }
  grid.map = EmbeddedMap::build(std::move(rotations), std::move(twin));
  return grid;
}

EmbeddedMap cube() {
  // Faces in a consistent orientation, each listed counterclockwise as seen
  // from outside the solid.
  static const std::vector<std::vector<VertexId>> kFaces = {
      {1, 3, 7, 5}, {0, 4, 6, 2},  // x = 1, x = 0
      {2, 6, 7, 3}, {0, 1, 5, 4},  // y = 1, y = 0
      {4, 5, 7, 6}, {0, 2, 3, 1},  // z = 1, z = 0
  };
  return EmbeddedMap::from_faces(8, kFaces);
}

EmbeddedMap four_cycle() {
  static const std::vector<std::vector<VertexId>> kFaces = {{0, 1, 2, 3}, {3, 2, 1, 0}};
  return EmbeddedMap::from_faces(4, kFaces);
}

EmbeddedMap diagonal_expand(const EmbeddedMap& map, const Face& face, VertexId corner) {
  if (face.size() != 4 || face.vertices.size() != 4) {
    throw PreconditionError("face has length " + std::to_string(face.size()) + ", expected 4");
  }
  for (std::size_t i = 0; i < 4; ++i) {
    const auto d = face.darts[i];
    if (d >= map.dart_count() || map.origin(d) != face.vertices[i] ||
        map.face_next(d) != face.darts[(i + 1) % 4]) {
      throw PreconditionError("face is not a face of this map");
    }
  }
  auto sorted = face.vertices;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
    throw PreconditionError("face boundary is not a simple cycle");
  }
  const auto at = std::find(face.vertices.begin(), face.vertices.end(), corner);
  if (at == face.vertices.end()) {
    throw PreconditionError("vertex " + std::to_string(corner) + " is not on the face");
  }
  const auto k = static_cast<std::size_t>(at - face.vertices.begin());
  const auto b_to_c = face.darts[(k + 1) % 4];
  const auto d_to_a = face.darts[(k + 3) % 4];
  const auto a = face.vertices[k];
  const auto c = face.vertices[(k + 2) % 4];

  const auto n = static_cast<DartId>(map.dart_count());
  const DartId a_to_v = n;
  const DartId v_to_a = n + 1;
  const DartId c_to_v = n + 2;
  const DartId v_to_c = n + 3;

  auto rotations = map.rotations();
  const auto insert_after = [&rotations](VertexId at_vertex, DartId after, DartId inserted) {
    auto& r = rotations[at_vertex];
    r.insert(std::find(r.begin(), r.end(), after) + 1, inserted);
  };
  // face_next(d->a) must become a->v and face_next(b->c) must become c->v.
  insert_after(a, map.twin(d_to_a), a_to_v);
  insert_after(c, map.twin(b_to_c), c_to_v);
  rotations.push_back({v_to_a, v_to_c});

  auto twin = map.twins();
  twin.insert(twin.end(), {v_to_a, a_to_v, v_to_c, c_to_v});
  return EmbeddedMap::build(std::move(rotations), std::move(twin));
}

EmbeddedMap random_quadrangulation(const EmbeddedMap& base, std::size_t steps,
                                   std::uint64_t seed) {
  if (!validate_quadrangulation(base).verdict) {
    throw PreconditionError("base map is not a quadrangulation");
  }
  detail::Rng rng(seed);
  auto map = base;
  for (std::size_t step = 0; step < steps; ++step) {
    const auto faces = trace_faces(map);
    const auto& face = faces[detail::uniform_below(rng, faces.size())];
    const auto corner = face.vertices[detail::uniform_below(rng, 4)];
    map = diagonal_expand(map, face, corner);
  }
  return map;
}

}  // namespace quadcolor
