#include "quadcolor/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

#include <json.hpp>

#include "quadcolor/error.hpp"

namespace quadcolor {

namespace {

constexpr DartId kUnset = static_cast<DartId>(-1);

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

// Non-blank lines with comments removed, split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  std::size_t number = 0;
  while (true) {
    ++number;
    const auto eol = text.find('\n');
    auto raw = text.substr(0, eol);
    text = eol == std::string_view::npos ? std::string_view{} : text.substr(eol + 1);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    raw = trim(raw);
    if (!raw.empty()) {
      Line line{number, {}};
      while (!raw.empty()) {
        const auto end = raw.find_first_of(" \t");
        line.tokens.push_back(raw.substr(0, end));
        raw = end == std::string_view::npos ? std::string_view{} : trim(raw.substr(end));
      }
      lines.push_back(std::move(line));
    }
    if (text.empty()) break;
  }
  return lines;
}

std::uint64_t parse_number(std::string_view token, std::size_t line) {
  std::uint64_t value = 0;
  const auto* end = token.data() + token.size();
  const auto [ptr, ec] = std::from_chars(token.data(), end, value);
  if (ec != std::errc{} || ptr != end) {
    throw ParseError(line, "expected a non-negative integer, got '" + std::string(token) + "'");
  }
  return value;
}

void expect_tokens(const Line& line, std::size_t count, std::string_view form) {
  if (line.tokens.size() != count) {
    throw ParseError(line.number, "expected '" + std::string(form) + "'");
  }
}

}  // namespace

EmbeddedMap parse_map(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header");
  auto it = lines.begin();
  if (it->tokens.size() != 2 || it->tokens[0] != "quadmap") {
    throw ParseError(it->number, "missing header 'quadmap 1'");
  }
  if (it->tokens[1] != "1") {
    throw ParseError(it->number, "unsupported format version " + std::string(it->tokens[1]));
  }
  if (++it == lines.end() || it->tokens.size() != 2 || it->tokens[0] != "darts") {
    throw ParseError(it == lines.end() ? 0 : it->number, "expected 'darts <count>'");
  }
  const auto dart_count = parse_number(it->tokens[1], it->number);
  if (dart_count % 2 != 0 || dart_count > (std::uint64_t{1} << 31)) {
    throw ParseError(it->number, "dart count must be even and at most 2^31");
  }

  std::vector<std::optional<std::vector<DartId>>> rotations;
  std::vector<std::size_t> listed_at(dart_count, 0);
  std::vector<DartId> twin(dart_count, kUnset);
  for (++it; it != lines.end(); ++it) {
    const auto& line = *it;
    const auto& head = line.tokens[0];
    if (head == "vertex") {
      if (line.tokens.size() < 2 || line.tokens[1].empty() || line.tokens[1].back() != ':') {
        throw ParseError(line.number, "expected 'vertex <id>: <darts...>'");
      }
      const auto v = parse_number(line.tokens[1].substr(0, line.tokens[1].size() - 1), line.number);
      if (v >= rotations.size()) rotations.resize(v + 1);
      if (rotations[v]) throw ParseError(line.number, "vertex " + std::to_string(v) + " listed twice");
      auto& rot = rotations[v].emplace();
      for (std::size_t i = 2; i < line.tokens.size(); ++i) {
        const auto d = parse_number(line.tokens[i], line.number);
        if (d >= dart_count) {
          throw ParseError(line.number, "dart " + std::to_string(d) + " exceeds dart count " +
                                            std::to_string(dart_count));
        }
        if (listed_at[d] != 0) {
          throw ParseError(line.number, "dart " + std::to_string(d) + " already listed on line " +
                                            std::to_string(listed_at[d]));
        }
        listed_at[d] = line.number;
        rot.push_back(static_cast<DartId>(d));
      }
    } else if (head == "edge") {
      expect_tokens(line, 3, "edge <dart> <dart>");
      const auto a = parse_number(line.tokens[1], line.number);
      const auto b = parse_number(line.tokens[2], line.number);
      for (const auto d : {a, b}) {
        if (d >= dart_count) {
          throw ParseError(line.number, "dart " + std::to_string(d) + " exceeds dart count " +
                                            std::to_string(dart_count));
        }
        if (twin[d] != kUnset) {
          throw ParseError(line.number, "dart " + std::to_string(d) + " is already paired");
        }
      }
      if (a == b) {
        throw ParseError(line.number, "loop detected: dart " + std::to_string(a) +
                                          " paired with itself");
      }
      twin[a] = static_cast<DartId>(b);
      twin[b] = static_cast<DartId>(a);
    } else {
      throw ParseError(line.number, "unexpected '" + std::string(head) + "'");
    }
  }

  for (std::size_t v = 0; v < rotations.size(); ++v) {
    if (!rotations[v]) throw ParseError(0, "vertex " + std::to_string(v) + " is missing");
  }
  for (std::size_t d = 0; d < dart_count; ++d) {
    if (listed_at[d] == 0) {
      throw ParseError(0, "dart count mismatch: dart " + std::to_string(d) +
                              " is not in any rotation");
    }
    if (twin[d] == kUnset) throw ParseError(0, "dart " + std::to_string(d) + " has no edge line");
  }

  std::vector<std::vector<DartId>> rot;
  rot.reserve(rotations.size());
  for (auto& r : rotations) rot.push_back(std::move(*r));
  return EmbeddedMap::build(std::move(rot), std::move(twin));
}

std::string serialize_map(const EmbeddedMap& map, std::span<const std::string> comments) {
  std::ostringstream out;
  out << "quadmap 1\n";
  out << "darts " << map.dart_count() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (VertexId v = 0; v < map.vertex_count(); ++v) {
    // Rotations are stored starting at their smallest dart.
    out << "vertex " << v << ':';
    for (const auto d : map.rotation(v)) out << ' ' << d;
    out << '\n';
  }
  for (DartId d = 0; d < map.dart_count(); ++d) {
    if (d < map.twin(d)) out << "edge " << d << ' ' << map.twin(d) << '\n';
  }
  return out.str();
}

Coloring parse_coloring(std::string_view text, std::size_t vertex_count) {
  std::vector<Color> colors(vertex_count, 0);
  for (const auto& line : tokenize(text)) {
    expect_tokens(line, 2, "<vertex> <color>");
    const auto v = parse_number(line.tokens[0], line.number);
    const auto c = parse_number(line.tokens[1], line.number);
    if (v >= vertex_count) {
      throw ParseError(line.number, "vertex " + std::to_string(v) + " not in map with " +
                                        std::to_string(vertex_count) + " vertices");
    }
    if (c < 1 || c > kColorCount) {
      throw ParseError(line.number, "color " + std::to_string(c) + " outside 1..4");
    }
    if (colors[v] != 0) throw ParseError(line.number, "vertex " + std::to_string(v) + " colored twice");
    colors[v] = static_cast<Color>(c);
  }
  for (std::size_t v = 0; v < vertex_count; ++v) {
    if (colors[v] == 0) throw ParseError(0, "vertex " + std::to_string(v) + " has no color");
  }
  return Coloring(std::move(colors));
}

std::string serialize_coloring(const Coloring& coloring) {
  std::ostringstream out;
  for (std::size_t v = 0; v < coloring.size(); ++v) {
    out << v << ' ' << static_cast<int>(coloring[static_cast<VertexId>(v)]) << '\n';
  }
  return out.str();
}

GridCoordinates parse_coordinates(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(0, "missing header");
  if (lines[0].tokens.size() != 2 || lines[0].tokens[0] != "gridcoords" ||
      lines[0].tokens[1] != "1") {
    throw ParseError(lines[0].number, "missing header 'gridcoords 1'");
  }
  if (lines.size() < 2 || lines[1].tokens.size() != 3 || lines[1].tokens[0] != "size") {
    throw ParseError(lines.size() < 2 ? 0 : lines[1].number, "expected 'size <rows> <cols>'");
  }
  GridCoordinates coords;
  coords.rows = parse_number(lines[1].tokens[1], lines[1].number);
  coords.cols = parse_number(lines[1].tokens[2], lines[1].number);
  const auto n = coords.rows * coords.cols;
  coords.positions.assign(n, {0, 0});
  std::vector<char> seen(n, 0);
  std::vector<char> cell_used(n, 0);
  for (std::size_t i = 2; i < lines.size(); ++i) {
    const auto& line = lines[i];
    expect_tokens(line, 3, "<vertex> <row> <col>");
    const auto v = parse_number(line.tokens[0], line.number);
    const auto r = parse_number(line.tokens[1], line.number);
    const auto c = parse_number(line.tokens[2], line.number);
    if (v >= n || r >= coords.rows || c >= coords.cols) {
      throw ParseError(line.number, "coordinate out of range");
    }
    if (seen[v]) throw ParseError(line.number, "vertex " + std::to_string(v) + " listed twice");
    if (cell_used[r * coords.cols + c]) throw ParseError(line.number, "grid position used twice");
    seen[v] = 1;
    cell_used[r * coords.cols + c] = 1;
    coords.positions[v] = {r, c};
  }
  for (std::size_t v = 0; v < n; ++v) {
    if (!seen[v]) throw ParseError(0, "vertex " + std::to_string(v) + " has no coordinates");
  }
  return coords;
}

std::string serialize_coordinates(const GridCoordinates& coords) {
  std::ostringstream out;
  out << "gridcoords 1\nsize " << coords.rows << ' ' << coords.cols << '\n';
  for (std::size_t v = 0; v < coords.positions.size(); ++v) {
    out << v << ' ' << coords.positions[v].first << ' ' << coords.positions[v].second << '\n';
  }
  return out.str();
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "' for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_text_file(const std::filesystem::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open '" + path.string() + "' for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

std::string to_json(const ValidationReport& report) {
  nlohmann::ordered_json j;
  j["is_loopless"] = report.is_loopless;
  j["is_connected"] = report.is_connected;
  j["is_two_edge_connected"] = report.is_two_edge_connected;
  j["all_faces_length_four"] = report.all_faces_length_four;
  j["all_face_boundaries_simple"] = report.all_face_boundaries_simple;
  j["genus"] = report.genus;
  j["vertices"] = report.vertex_count;
  j["edges"] = report.edge_count;
  j["faces"] = report.face_count;
  j["verdict"] = report.verdict;
  return j.dump(2) + "\n";
}

namespace {

nlohmann::ordered_json theorem_json(const TheoremReport& report) {
  nlohmann::ordered_json j;
  auto& counts = j["class_counts"] = nlohmann::ordered_json::object();
  for (const auto c : kRainbowClasses) counts[std::string(class_key(c))] = report.count(c);
  j["rainbow_total"] = report.rainbow_total;
  j["delta_sum"] = report.delta_sum;
  auto& pairs = j["pair_equalities"] = nlohmann::ordered_json::object();
  for (std::size_t p = 0; p < kReversalPairs.size(); ++p) {
    const auto key = std::string(class_key(kReversalPairs[p][0])) + "-" +
                     std::string(class_key(kReversalPairs[p][1]));
    pairs[key] = static_cast<bool>(report.pair_equalities[p]);
  }
  j["parity_even"] = report.parity_even;
  j["verdict"] = report.verdict;
  return j;
}

}  // namespace

std::string to_json(const TheoremReport& report) { return theorem_json(report).dump(2) + "\n"; }

std::string to_json(const SweepSummary& summary) {
  nlohmann::ordered_json j;
  j["checked"] = summary.checked;
  j["failures"] = summary.failures;
  auto& histogram = j["rainbow_total_histogram"] = nlohmann::ordered_json::object();
  for (const auto& [total, n] : summary.rainbow_histogram) histogram[std::to_string(total)] = n;
  if (summary.first_failure) j["first_failure"] = *summary.first_failure;
  return j.dump(2) + "\n";
}

}  // namespace quadcolor
