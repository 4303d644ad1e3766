#include <algorithm>
#include <array>
#include <optional>
#include <sstream>
#include <vector>

#include "quadcolor/error.hpp"
#include "quadcolor/io.hpp"

namespace quadcolor {

namespace {

constexpr long kCell = 80;
constexpr long kHalf = kCell / 2;
constexpr long kMargin = 40;
constexpr long kRadius = 13;
constexpr const char* kGray = "#b4b4b4";

// Horizontal (or vertical) extent of the cell that starts at grid line
// `index`, cut where it crosses the border of the fundamental rectangle.
std::vector<std::pair<long, long>> cell_spans(std::size_t index, std::size_t count) {
  const long start = kMargin + static_cast<long>(index) * kCell + kHalf;
  const long border = kMargin + static_cast<long>(count) * kCell;
  if (index + 1 < count) return {{start, kCell}};
  return {{start, border - start}, {kMargin, kHalf}};
}

// (from, to) with to == from + 1 modulo `count`, if a and b are cyclic
// neighbours.
std::optional<std::pair<std::size_t, std::size_t>> grid_step(std::size_t a, std::size_t b,
                                                             std::size_t count) {
  if (b == (a + 1) % count) return std::pair{a, b};
  if (a == (b + 1) % count) return std::pair{b, a};
  return std::nullopt;
}

long center(std::size_t index) { return kMargin + static_cast<long>(index) * kCell + kHalf; }

}  // namespace

std::string render_svg(const EmbeddedMap& map, const GridCoordinates& coords,
                       const Coloring& coloring) {
  const auto n = map.vertex_count();
  if (coords.positions.size() < n) {
    throw PreconditionError("missing coordinates for vertex " +
                            std::to_string(coords.positions.size()));
  }
  if (coords.rows < 3 || coords.cols < 3) {
    throw PreconditionError("grid must have at least 3 rows and 3 columns");
  }
  if (!is_proper(map, coloring)) throw ColoringError("coloring is not proper");

  const auto rows = coords.rows;
  const auto cols = coords.cols;
  const auto& pos = coords.positions;
  const long width = 2 * kMargin + static_cast<long>(cols) * kCell;
  const long height = 2 * kMargin + static_cast<long>(rows) * kCell;

  std::ostringstream out;
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  out << "<rect x=\"0\" y=\"0\" width=\"" << width << "\" height=\"" << height
      << "\" fill=\"white\"/>\n";

  std::size_t gray_faces = 0;
  for (const auto& face : trace_faces(map)) {
    if (face.size() != 4) throw PreconditionError("face of length " + std::to_string(face.size()));
    // The face occupies the cell whose top-left corner is the vertex whose
    // right and lower neighbours are also on the face.
    std::optional<std::pair<std::size_t, std::size_t>> corner;
    for (const auto v : face.vertices) {
      const auto [r, c] = pos[v];
      std::array<std::pair<std::size_t, std::size_t>, 4> cell = {{
          {r, c}, {r, (c + 1) % cols}, {(r + 1) % rows, c}, {(r + 1) % rows, (c + 1) % cols}}};
      const bool matches = std::all_of(cell.begin(), cell.end(), [&](const auto& rc) {
        return std::any_of(face.vertices.begin(), face.vertices.end(),
                           [&](VertexId w) { return pos[w] == rc; });
      });
      if (matches) corner = pos[v];
    }
    if (!corner) throw PreconditionError("face is not a grid cell");

    const auto cls = classify_face(face, coloring);
    const bool gray = cls == CycleClass::k1234 || cls == CycleClass::k1432;
    gray_faces += gray;
    out << "<g class=\"face " << (gray ? "gray" : "white") << "\" data-cycle=\"" << class_key(cls)
        << "\">";
    for (const auto& [y, h] : cell_spans(corner->first, rows)) {
      for (const auto& [x, w] : cell_spans(corner->second, cols)) {
        out << "<rect x=\"" << x << "\" y=\"" << y << "\" width=\"" << w << "\" height=\"" << h
            << "\" fill=\"" << (gray ? kGray : "white") << "\"/>";
      }
    }
    out << "</g>\n";
  }

  const long left = kMargin;
  const long top = kMargin;
  const long right = kMargin + static_cast<long>(cols) * kCell;
  const long bottom = kMargin + static_cast<long>(rows) * kCell;
  out << "<g stroke=\"black\" stroke-width=\"2\">\n";
  const auto line = [&out](long x1, long y1, long x2, long y2) {
    out << "<line x1=\"" << x1 << "\" y1=\"" << y1 << "\" x2=\"" << x2 << "\" y2=\"" << y2
        << "\"/>\n";
  };
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (d > map.twin(d)) continue;
    const auto [ra, ca] = pos[map.origin(d)];
    const auto [rb, cb] = pos[map.target(d)];
    if (ra == rb) {
      const auto step = grid_step(ca, cb, cols);
      if (!step) throw PreconditionError("edge does not join grid neighbours");
      const auto [from, to] = *step;
      if (to == from + 1) {
        line(center(from), center(ra), center(to), center(ra));
      } else {
        line(center(from), center(ra), right, center(ra));
        line(left, center(ra), center(to), center(ra));
      }
    } else if (ca == cb) {
      const auto step = grid_step(ra, rb, rows);
      if (!step) throw PreconditionError("edge does not join grid neighbours");
      const auto [from, to] = *step;
      if (to == from + 1) {
        line(center(ca), center(from), center(ca), center(to));
      } else {
        line(center(ca), center(from), center(ca), bottom);
        line(center(ca), top, center(ca), center(to));
      }
    } else {
      throw PreconditionError("edge does not join grid neighbours");
    }
  }
  out << "</g>\n";

  // Identified sides of the fundamental rectangle.
  out << "<rect x=\"" << left << "\" y=\"" << top << "\" width=\"" << right - left
      << "\" height=\"" << bottom - top
      << "\" fill=\"none\" stroke=\"gray\" stroke-width=\"1\" stroke-dasharray=\"6 4\"/>\n";

  out << "<g font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\">\n";
  for (VertexId v = 0; v < n; ++v) {
    const long x = center(pos[v].second);
    const long y = center(pos[v].first);
    out << "<circle cx=\"" << x << "\" cy=\"" << y << "\" r=\"" << kRadius
        << "\" fill=\"white\" stroke=\"black\" stroke-width=\"2\"/>";
    out << "<text x=\"" << x << "\" y=\"" << y + 5 << "\">" << static_cast<int>(coloring[v])
        << "</text>\n";
  }
  out << "</g>\n";
  out << "<!-- gray faces: " << gray_faces << " -->\n";
  out << "</svg>\n";
  return out.str();
}

}  // namespace quadcolor
