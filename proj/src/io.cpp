#include "ramsey_forge/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <set>
#include <sstream>
#include <vector>

#include "ramsey_forge/error.hpp"

namespace ramsey_forge {

namespace {

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    if (nl == std::string_view::npos) {
      lines.push_back(text);
      break;
    }
    lines.push_back(text.substr(0, nl));
    text.remove_prefix(nl + 1);
  }
  for (auto& line : lines) {
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
  }
  return lines;
}

std::vector<std::string_view> split_words(std::string_view line) {
  std::vector<std::string_view> words;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t')) ++i;
    std::size_t j = i;
    while (j < line.size() && line[j] != ' ' && line[j] != '\t') ++j;
    if (j > i) words.push_back(line.substr(i, j - i));
    i = j;
  }
  return words;
}

bool is_blank(std::string_view line) { return split_words(line).empty(); }

long long parse_integer(std::string_view word, int line, const char* what) {
  long long value = 0;
  auto [ptr, ec] = std::from_chars(word.data(), word.data() + word.size(), value);
  if (ec != std::errc{} || ptr != word.data() + word.size()) {
    throw ParseError(std::string("expected an integer ") + what + ", got '" + std::string(word) +
                         "'",
                     line);
  }
  return value;
}

}  // namespace

std::string format_coloring(const EdgeColoring& c) {
  std::string out = std::to_string(c.vertex_count()) + " " + std::to_string(c.color_count()) + "\n";
  for (Vertex u = 0; u + 1 < c.vertex_count(); ++u) {
    auto row = c.row(u);
    for (Vertex v = u + 1; v < c.vertex_count(); ++v) {
      if (v > u + 1) out += ' ';
      out += std::to_string(row[v]);
    }
    out += '\n';
  }
  return out;
}

EdgeColoring parse_coloring(std::string_view text) {
  auto lines = split_lines(text);
  if (lines.empty()) throw ParseError("malformed header: empty input", 1);
  auto header = split_words(lines[0]);
  if (header.size() != 2) throw ParseError("malformed header: expected 's n'", 1);
  const long long s = parse_integer(header[0], 1, "vertex count");
  const long long n = parse_integer(header[1], 1, "color count");
  if (s < 1 || s > 1'000'000) throw ParseError("malformed header: bad vertex count", 1);
  if (n < 1 || n > kMaxColors) throw ParseError("malformed header: bad color count", 1);

  std::size_t last = lines.size();
  while (last > 1 && is_blank(lines[last - 1])) --last;
  if (last != static_cast<std::size_t>(s)) {
    throw ParseError("expected " + std::to_string(s - 1) + " color rows, found " +
                         std::to_string(last - 1),
                     static_cast<int>(last) + 1);
  }

  std::vector<Color> colors;
  colors.reserve(static_cast<std::size_t>(s * (s - 1) / 2));
  for (long long u = 0; u + 1 < s; ++u) {
    const int line_no = static_cast<int>(u) + 2;
    auto words = split_words(lines[static_cast<std::size_t>(u) + 1]);
    if (words.size() != static_cast<std::size_t>(s - 1 - u)) {
      throw ParseError("row " + std::to_string(u) + " should list " + std::to_string(s - 1 - u) +
                           " colors, found " + std::to_string(words.size()),
                       line_no);
    }
    for (auto w : words) {
      long long color = parse_integer(w, line_no, "color");
      if (color < 1 || color > n) {
        throw ParseError("color " + std::to_string(color) + " outside 1.." + std::to_string(n),
                         line_no);
      }
      colors.push_back(static_cast<Color>(color));
    }
  }
  return EdgeColoring::from_upper_triangle(static_cast<int>(s), static_cast<int>(n), colors);
}

std::string format_graph(const Graph& g) {
  std::string out =
      "p " + std::to_string(g.vertex_count()) + " " + std::to_string(g.edge_count()) + "\n";
  for (auto [u, v] : g.edges()) {
    out += "e " + std::to_string(u) + " " + std::to_string(v) + "\n";
  }
  return out;
}

Graph parse_graph(std::string_view text) {
  auto lines = split_lines(text);
  std::size_t i = 0;
  while (i < lines.size() && is_blank(lines[i])) ++i;
  if (i == lines.size()) throw ParseError("missing 'p <vertices> <edges>' header", 1);
  auto header = split_words(lines[i]);
  const int header_line = static_cast<int>(i) + 1;
  if (header.size() != 3 || header[0] != "p") {
    throw ParseError("malformed header: expected 'p <vertices> <edges>'", header_line);
  }
  const long long vertices = parse_integer(header[1], header_line, "vertex count");
  const long long declared = parse_integer(header[2], header_line, "edge count");
  if (vertices < 1 || vertices > 1'000'000'000) {
    throw ParseError("bad vertex count", header_line);
  }
  if (declared < 0) throw ParseError("bad edge count", header_line);

  std::vector<Edge> edges;
  std::set<Edge> seen;
  for (++i; i < lines.size(); ++i) {
    const int line_no = static_cast<int>(i) + 1;
    auto words = split_words(lines[i]);
    if (words.empty()) continue;
    if (words.size() != 3 || words[0] != "e") {
      throw ParseError("expected 'e <u> <v>'", line_no);
    }
    const long long u = parse_integer(words[1], line_no, "endpoint");
    const long long v = parse_integer(words[2], line_no, "endpoint");
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw ParseError("endpoint out of range 0.." + std::to_string(vertices - 1), line_no);
    }
    if (u == v) throw ParseError("self-loop at vertex " + std::to_string(u), line_no);
    Edge e{static_cast<Vertex>(std::min(u, v)), static_cast<Vertex>(std::max(u, v))};
    if (!seen.insert(e).second) {
      throw ParseError("duplicate edge " + std::to_string(e.first) + " " +
                           std::to_string(e.second),
                       line_no);
    }
    edges.push_back(e);
  }
  if (static_cast<long long>(edges.size()) != declared) {
    throw ParseError("header declares " + std::to_string(declared) + " edges, found " +
                         std::to_string(edges.size()),
                     header_line);
  }
  return Graph::from_edges(static_cast<int>(vertices), edges);
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open " + path.string() + " for reading");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  if (in.bad()) throw IoError("failed reading " + path.string());
  return buffer.str();
}

void write_file(const std::filesystem::path& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  out.flush();
  if (!out) throw IoError("failed writing " + path.string());
}

EdgeColoring read_coloring(const std::filesystem::path& path) {
  return parse_coloring(read_file(path));
}

void write_coloring(const EdgeColoring& c, const std::filesystem::path& path) {
  write_file(path, format_coloring(c));
}

Graph read_graph(const std::filesystem::path& path) { return parse_graph(read_file(path)); }

void write_graph(const Graph& g, const std::filesystem::path& path) {
  write_file(path, format_graph(g));
}

}  // namespace ramsey_forge
