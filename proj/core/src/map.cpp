#include "quadcolor/map.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "quadcolor/error.hpp"

namespace quadcolor {

namespace {

constexpr DartId kUnset = static_cast<DartId>(-1);

std::string dart_str(DartId d) { return std::to_string(d); }

bool is_connected(const std::vector<std::vector<DartId>>& rotations,
                  const std::vector<DartId>& twin, const std::vector<VertexId>& origin) {
  const auto n = rotations.size();
  if (n <= 1) return true;
  std::vector<char> seen(n, 0);
  std::vector<VertexId> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const auto v = stack.back();
    stack.pop_back();
    for (const auto d : rotations[v]) {
      const auto w = origin[twin[d]];
      if (!seen[w]) {
        seen[w] = 1;
        ++reached;
        stack.push_back(w);
      }
    }
  }
  return reached == n;
}

}  // namespace

EmbeddedMap EmbeddedMap::build(std::vector<std::vector<DartId>> rotations,
                               std::vector<DartId> twin) {
  const std::size_t n = twin.size();
  std::size_t listed = 0;
  for (const auto& r : rotations) listed += r.size();
  if (listed != n) {
    throw StructureError("rotations list " + std::to_string(listed) + " darts but the pairing has " +
                         std::to_string(n));
  }
  if (n % 2 != 0) throw StructureError("odd number of darts: " + std::to_string(n));

  std::vector<VertexId> origin(n, kUnset);
  for (VertexId v = 0; v < rotations.size(); ++v) {
    for (const auto d : rotations[v]) {
      if (d >= n) throw StructureError("dart " + dart_str(d) + " out of range");
      if (origin[d] != kUnset) throw StructureError("duplicate dart " + dart_str(d));
      origin[d] = v;
    }
  }
  // listed == n and no duplicates, so every dart is present.

  for (DartId d = 0; d < n; ++d) {
    const auto t = twin[d];
    if (t >= n) throw StructureError("twin of dart " + dart_str(d) + " out of range");
    if (t == d) throw StructureError("loop detected: dart " + dart_str(d) + " paired with itself");
    if (twin[t] != d) {
      throw StructureError("pairing is not an involution at dart " + dart_str(d));
    }
    if (origin[d] == origin[t]) {
      throw StructureError("loop detected: edge {" + dart_str(d) + ", " + dart_str(t) +
                           "} joins vertex " + std::to_string(origin[d]) + " to itself");
    }
  }

  if (!is_connected(rotations, twin, origin)) throw StructureError("graph is disconnected");

  EmbeddedMap map;
  map.rotation_next_.assign(n, kUnset);
  map.rotation_prev_.assign(n, kUnset);
  for (auto& r : rotations) {
    if (r.empty()) continue;
    std::rotate(r.begin(), std::min_element(r.begin(), r.end()), r.end());
    for (std::size_t i = 0; i < r.size(); ++i) {
      const auto next = r[(i + 1) % r.size()];
      map.rotation_next_[r[i]] = next;
      map.rotation_prev_[next] = r[i];
    }
  }
  map.rotations_ = std::move(rotations);
  map.twin_ = std::move(twin);
  map.origin_ = std::move(origin);
  return map;
}

EmbeddedMap EmbeddedMap::from_faces(std::size_t vertex_count,
                                    std::span<const std::vector<VertexId>> faces) {
  std::map<std::pair<VertexId, VertexId>, DartId> dart_of;
  for (const auto& face : faces) {
    for (std::size_t i = 0; i < face.size(); ++i) {
      const auto u = face[i];
      const auto v = face[(i + 1) % face.size()];
      if (u >= vertex_count || v >= vertex_count) {
        throw StructureError("face vertex out of range");
      }
      const auto id = static_cast<DartId>(dart_of.size());
      if (!dart_of.emplace(std::pair{u, v}, id).second) {
        throw StructureError("directed edge " + std::to_string(u) + "->" + std::to_string(v) +
                             " appears in two faces");
      }
    }
  }

  const auto n = dart_of.size();
  std::vector<DartId> twin(n, kUnset);
  std::vector<VertexId> origin(n);
  for (const auto& [uv, d] : dart_of) {
    const auto it = dart_of.find({uv.second, uv.first});
    if (it == dart_of.end()) {
      throw StructureError("directed edge " + std::to_string(uv.first) + "->" +
                           std::to_string(uv.second) + " has no reverse in any face");
    }
    twin[d] = it->second;
    origin[d] = uv.first;
  }

  // Consecutive u->v->w in a face means rotation_next(v->u) = v->w.
  std::vector<DartId> next(n, kUnset);
  for (const auto& face : faces) {
    const auto k = face.size();
    for (std::size_t i = 0; i < k; ++i) {
      const auto u = face[i];
      const auto v = face[(i + 1) % k];
      const auto w = face[(i + 2) % k];
      next[dart_of.at({v, u})] = dart_of.at({v, w});
    }
  }

  std::vector<std::vector<DartId>> rotations(vertex_count);
  std::vector<char> placed(n, 0);
  for (DartId d = 0; d < n; ++d) {
    if (placed[d]) continue;
    auto& rot = rotations[origin[d]];
    if (!rot.empty()) {
      throw StructureError("darts around vertex " + std::to_string(origin[d]) +
                           " do not form a single rotation");
    }
    for (auto e = d; !placed[e]; e = next[e]) {
      placed[e] = 1;
      rot.push_back(e);
    }
  }
  return build(std::move(rotations), std::move(twin));
}

EmbeddedMap EmbeddedMap::mirrored() const {
  auto rotations = rotations_;
  for (auto& r : rotations) std::reverse(r.begin(), r.end());
  return build(std::move(rotations), twin_);
}

EmbeddedMap EmbeddedMap::relabeled(std::span<const DartId> new_id) const {
  if (new_id.size() != dart_count()) throw StructureError("relabeling has wrong size");
  auto rotations = rotations_;
  for (auto& r : rotations) {
    for (auto& d : r) d = new_id[d];
  }
  std::vector<DartId> twin(dart_count());
  for (DartId d = 0; d < dart_count(); ++d) twin[new_id[d]] = new_id[twin_[d]];
  return build(std::move(rotations), std::move(twin));
}

EmbeddedMap build_map(std::vector<std::vector<DartId>> rotations, std::vector<DartId> twin) {
  return EmbeddedMap::build(std::move(rotations), std::move(twin));
}

std::vector<Face> trace_faces(const EmbeddedMap& map) {
  std::vector<Face> faces;
  std::vector<char> visited(map.dart_count(), 0);
  for (DartId start = 0; start < map.dart_count(); ++start) {
    if (visited[start]) continue;
    Face face;
    for (auto d = start; !visited[d]; d = map.face_next(d)) {
      visited[d] = 1;
      face.darts.push_back(d);
      face.vertices.push_back(map.origin(d));
    }
    faces.push_back(std::move(face));
  }
  return faces;
}

std::vector<std::size_t> face_index_of_darts(const EmbeddedMap& map,
                                             std::span<const Face> faces) {
  std::vector<std::size_t> index(map.dart_count(), static_cast<std::size_t>(-1));
  for (std::size_t f = 0; f < faces.size(); ++f) {
    for (const auto d : faces[f].darts) index[d] = f;
  }
  return index;
}

int euler_genus(const EmbeddedMap& map) { return euler_genus(map, trace_faces(map)); }

int euler_genus(const EmbeddedMap& map, std::span<const Face> faces) {
  if (map.edge_count() == 0) return 0;
  const auto chi = static_cast<long long>(map.vertex_count()) -
                   static_cast<long long>(map.edge_count()) +
                   static_cast<long long>(faces.size());
  if (chi > 2 || (2 - chi) % 2 != 0) {
    throw StructureError("Euler characteristic " + std::to_string(chi) +
                         " does not correspond to an orientable surface");
  }
  return static_cast<int>((2 - chi) / 2);
}

bool is_two_edge_connected(const EmbeddedMap& map) {
  const auto n = map.vertex_count();
  if (n == 0) return true;

  // Iterative DFS with low-link values. The tree edge into a vertex is
  // skipped by dart id, so parallel edges are handled correctly.
  constexpr std::size_t kNone = static_cast<std::size_t>(-1);
  std::vector<std::size_t> order(n, kNone);
  std::vector<std::size_t> low(n, 0);
  struct Frame {
    VertexId vertex;
    DartId entered_by;  // dart from parent, kUnset at the root
    std::size_t next;   // index into rotation(vertex)
  };
  std::size_t counter = 0;
  for (VertexId root = 0; root < n; ++root) {
    if (order[root] != kNone) continue;
    std::vector<Frame> stack{{root, kUnset, 0}};
    order[root] = low[root] = counter++;
    while (!stack.empty()) {
      auto& top = stack.back();
      const auto rot = map.rotation(top.vertex);
      if (top.next < rot.size()) {
        const auto d = rot[top.next++];
        if (top.entered_by != kUnset && d == map.twin(top.entered_by)) continue;
        const auto w = map.target(d);
        if (order[w] == kNone) {
          order[w] = low[w] = counter++;
          stack.push_back({w, d, 0});
        } else {
          low[top.vertex] = std::min(low[top.vertex], order[w]);
        }
        continue;
      }
      const auto done = top;
      stack.pop_back();
      if (stack.empty()) break;
      auto& parent = stack.back();
      low[parent.vertex] = std::min(low[parent.vertex], low[done.vertex]);
      if (low[done.vertex] > order[parent.vertex]) return false;  // bridge
    }
  }
  return true;
}

ValidationReport validate_quadrangulation(const EmbeddedMap& map) {
  ValidationReport report;
  report.vertex_count = map.vertex_count();
  report.edge_count = map.edge_count();

  report.is_loopless = true;
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (map.origin(d) == map.target(d)) report.is_loopless = false;
  }
  report.is_connected = is_connected(map.rotations(), map.twins(), [&] {
    std::vector<VertexId> origin(map.dart_count());
    for (DartId d = 0; d < map.dart_count(); ++d) origin[d] = map.origin(d);
    return origin;
  }());
  report.is_two_edge_connected = is_two_edge_connected(map);

  const auto faces = trace_faces(map);
  report.face_count = faces.size();
  report.all_faces_length_four =
      !faces.empty() && std::all_of(faces.begin(), faces.end(),
                                    [](const Face& f) { return f.size() == 4; });
  report.all_face_boundaries_simple =
      !faces.empty() && std::all_of(faces.begin(), faces.end(), [](const Face& f) {
        auto vs = f.vertices;
        std::sort(vs.begin(), vs.end());
        return std::adjacent_find(vs.begin(), vs.end()) == vs.end();
      });
  report.genus = euler_genus(map, faces);
  report.verdict = report.is_loopless && report.is_connected && report.is_two_edge_connected &&
                   report.all_faces_length_four && report.all_face_boundaries_simple;
  return report;
}

}  // namespace quadcolor
