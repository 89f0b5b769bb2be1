#include "rainbow/io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>
#include <vector>

#include "json.hpp"

#include "rainbow/errors.hpp"

namespace rainbow::io {

namespace {

struct Line {
  int number;
  std::vector<std::string_view> tokens;
};

// Non-comment, non-blank lines split on whitespace.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view raw = text.substr(pos, end - pos);
    ++number;
    pos = end + 1;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    std::size_t first = raw.find_first_not_of(" \t");
    if (first == std::string_view::npos || raw[first] == '#') {
      if (end == text.size()) break;
      continue;
    }
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    lines.push_back(std::move(line));
    if (end == text.size()) break;
  }
  return lines;
}

std::int64_t to_int(std::string_view token, int line) {
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc{} || ptr != token.data() + token.size() || value < 0)
    throw ParseError(line, "expected a non-negative decimal integer, got '" + std::string(token) +
                               "'");
  return value;
}

void expect_fields(const Line& line, std::size_t count, const char* what) {
  if (line.tokens.size() != count)
    throw ParseError(line.number, std::string("expected ") + what + " (" + std::to_string(count) +
                                      " fields), got " + std::to_string(line.tokens.size()));
}

// Shared post-parse checks so the text and JSON paths reject exactly the same inputs.
EdgeColoredGraph assemble(std::int64_t n, const std::vector<ColoredEdge>& edges,
                          const std::vector<int>& line_of) {
  if (n > kMaxVertices)
    throw InvalidInput("vertex count " + std::to_string(n) + " exceeds " +
                       std::to_string(kMaxVertices));
  std::vector<std::vector<Vertex>> seen(static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < edges.size(); ++i) {
    const auto& e = edges[i];
    if (e.u >= n || e.v >= n)
      throw ParseError(line_of[i], "vertex out of range for n = " + std::to_string(n));
    if (e.u >= e.v) throw ParseError(line_of[i], "edge endpoints must satisfy u < v");
    auto& row = seen[static_cast<std::size_t>(e.u)];
    for (Vertex w : row)
      if (w == e.v)
        throw ParseError(line_of[i], "duplicate pair {" + std::to_string(e.u) + "," +
                                         std::to_string(e.v) + "}");
    row.push_back(e.v);
  }
  return EdgeColoredGraph(static_cast<int>(n), edges);
}

}  // namespace

EdgeColoredGraph parse_edgelist(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n m'");
  expect_fields(lines[0], 2, "header 'n m'");
  const std::int64_t n = to_int(lines[0].tokens[0], lines[0].number);
  const std::int64_t m = to_int(lines[0].tokens[1], lines[0].number);
  if (n > kMaxVertices)
    throw ParseError(lines[0].number, "vertex count exceeds " + std::to_string(kMaxVertices));
  if (static_cast<std::int64_t>(lines.size()) - 1 != m)
    throw ParseError(lines.size() > static_cast<std::size_t>(m) + 1
                         ? lines[static_cast<std::size_t>(m) + 1].number
                         : lines.back().number,
                     "header declares m = " + std::to_string(m) + " but " +
                         std::to_string(lines.size() - 1) + " edge lines follow");
  std::vector<ColoredEdge> edges;
  std::vector<int> line_of;
  edges.reserve(static_cast<std::size_t>(m));
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    expect_fields(line, 3, "'u v color'");
    const auto u = to_int(line.tokens[0], line.number);
    const auto v = to_int(line.tokens[1], line.number);
    const auto c = to_int(line.tokens[2], line.number);
    if (u >= n || v >= n)
      throw ParseError(line.number, "vertex out of range for n = " + std::to_string(n));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), ColorId{c}});
    line_of.push_back(line.number);
  }
  return assemble(n, edges, line_of);
}

std::string to_edgelist(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << g.n() << ' ' << g.m() << '\n';
  for (const auto& e : g.edges()) out << e.u << ' ' << e.v << ' ' << color_value(e.color) << '\n';
  return out.str();
}

EdgeColoredGraph parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw InvalidInput(std::string("JSON parse error: ") + e.what());
  }
  auto fail = [](const std::string& what) -> InvalidInput { return InvalidInput("JSON graph: " + what); };
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("edges"))
    throw fail("expected an object with keys 'n' and 'edges'");
  if (!doc["n"].is_number_integer() || doc["n"].get<std::int64_t>() < 0)
    throw fail("'n' must be a non-negative integer");
  if (!doc["edges"].is_array()) throw fail("'edges' must be an array");
  const auto n = doc["n"].get<std::int64_t>();
  std::vector<ColoredEdge> edges;
  std::vector<int> line_of;
  int index = 0;
  for (const auto& item : doc["edges"]) {
    ++index;
    if (!item.is_array() || item.size() != 3)
      throw fail("edge #" + std::to_string(index) + " must be [u, v, color]");
    for (const auto& x : item)
      if (!x.is_number_integer() || x.get<std::int64_t>() < 0)
        throw fail("edge #" + std::to_string(index) + " has a non-integer or negative field");
    const auto u = item[0].get<std::int64_t>();
    const auto v = item[1].get<std::int64_t>();
    if (u >= n || v >= n)
      throw fail("edge #" + std::to_string(index) + " vertex out of range for n = " + std::to_string(n));
    edges.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v), ColorId{item[2].get<std::int64_t>()}});
    line_of.push_back(index);
  }
  try {
    return assemble(n, edges, line_of);
  } catch (const ParseError& e) {
    throw fail(std::string("edge #") + std::to_string(e.line()) + ": " + e.what());
  }
}

std::string to_json(const EdgeColoredGraph& g) {
  nlohmann::json edges = nlohmann::json::array();
  for (const auto& e : g.edges()) edges.push_back({e.u, e.v, color_value(e.color)});
  nlohmann::json doc = {{"n", g.n()}, {"edges", std::move(edges)}};
  return doc.dump() + "\n";
}

EdgeColoredGraph parse_graph(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string_view::npos && text[first] == '{') return parse_json(text);
  return parse_edgelist(text);
}

OrientedGraph parse_digraph(std::string_view text) {
  const auto lines = tokenize(text);
  if (lines.empty()) throw ParseError(1, "missing header 'n a'");
  expect_fields(lines[0], 2, "header 'n a'");
  const auto n = to_int(lines[0].tokens[0], lines[0].number);
  const auto a = to_int(lines[0].tokens[1], lines[0].number);
  if (n > kMaxVertices)
    throw ParseError(lines[0].number, "vertex count exceeds " + std::to_string(kMaxVertices));
  if (static_cast<std::int64_t>(lines.size()) - 1 != a)
    throw ParseError(lines.back().number, "header declares a = " + std::to_string(a) + " but " +
                                              std::to_string(lines.size() - 1) + " arc lines follow");
  std::vector<Arc> arcs;
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    expect_fields(line, 2, "'u v'");
    const auto u = to_int(line.tokens[0], line.number);
    const auto v = to_int(line.tokens[1], line.number);
    if (u >= n || v >= n) throw ParseError(line.number, "vertex out of range for n = " + std::to_string(n));
    if (u == v) throw ParseError(line.number, "loop at vertex " + std::to_string(u));
    for (const auto& prev : arcs) {
      if (prev.tail == u && prev.head == v) throw ParseError(line.number, "repeated arc");
      if (prev.tail == v && prev.head == u) throw ParseError(line.number, "digon: opposite arc already present");
    }
    arcs.push_back({static_cast<Vertex>(u), static_cast<Vertex>(v)});
  }
  return OrientedGraph(static_cast<int>(n), arcs);
}

std::string to_digraph_text(const OrientedGraph& d) {
  std::ostringstream out;
  out << d.n() << ' ' << d.arc_count() << '\n';
  for (const auto& a : d.arcs()) out << a.tail << ' ' << a.head << '\n';
  return out.str();
}

std::string to_dot(const EdgeColoredGraph& g) {
  std::ostringstream out;
  out << "graph G {\n  node [shape=circle];\n";
  for (Vertex v = 0; v < g.n(); ++v) out << "  " << v << ";\n";
  const auto colors = g.edge_colors();
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const auto& e = g.edges()[i];
    const auto rank = static_cast<std::size_t>(colors[i]);
    out << "  " << e.u << " -- " << e.v << " [color=\"" << kDotPalette[rank % kDotPalette.size()]
        << "\", label=\"" << color_value(e.color) << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InvalidInput("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InvalidInput("cannot write '" + path + "'");
  out << contents;
}

}  // namespace rainbow::io
