#include "lineroot/text_format.hpp"

#include <algorithm>
#include <charconv>
#include <optional>
#include <sstream>
#include <vector>

namespace lineroot {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> out;
  std::size_t number = 0;
  while (!text.empty()) {
    auto end = text.find('\n');
    std::string_view raw = text.substr(0, end);
    text = end == std::string_view::npos ? std::string_view{} : text.substr(end + 1);
    ++number;
    if (!raw.empty() && raw.back() == '\r') raw.remove_suffix(1);
    Line line{number, {}};
    std::size_t i = 0;
    while (i < raw.size()) {
      while (i < raw.size() && (raw[i] == ' ' || raw[i] == '\t')) ++i;
      std::size_t j = i;
      while (j < raw.size() && raw[j] != ' ' && raw[j] != '\t') ++j;
      if (j > i) line.tokens.push_back(raw.substr(i, j - i));
      i = j;
    }
    if (line.tokens.empty() || line.tokens.front().front() == '#') continue;
    out.push_back(std::move(line));
  }
  return out;
}

std::uint64_t number_at(const Line& line, std::size_t index) {
  if (index >= line.tokens.size()) throw MalformedInput(line.number, "missing field");
  auto tok = line.tokens[index];
  std::uint64_t value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc() || ptr != tok.data() + tok.size()) {
    throw MalformedInput(line.number, "expected a non-negative integer, got '" + std::string(tok) + "'");
  }
  return value;
}

void expect_arity(const Line& line, std::size_t arity) {
  if (line.tokens.size() != arity) {
    throw MalformedInput(line.number, "expected " + std::to_string(arity) + " fields, got " +
                                          std::to_string(line.tokens.size()));
  }
}

std::size_t last_line(const std::vector<Line>& lines) {
  return lines.empty() ? 1 : lines.back().number;
}

struct EdgeListInput {
  std::size_t vertex_count;
  std::vector<Endpoints> edges;
  std::vector<std::size_t> line_of;
  bool simple_header;
};

EdgeListInput parse_edge_list(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw MalformedInput(1, "empty input");
  const auto& head = lines.front();
  if (head.tokens.front() != "graph" && head.tokens.front() != "mgraph") {
    throw MalformedInput(head.number, "expected header 'graph <n> <m>' or 'mgraph <n> <m>'");
  }
  expect_arity(head, 3);
  EdgeListInput in{number_at(head, 1), {}, {}, head.tokens.front() == "graph"};
  auto m = number_at(head, 2);
  if (lines.size() - 1 != m) {
    throw MalformedInput(lines.size() - 1 < m ? last_line(lines) : lines[m + 1].number,
                         "header declares " + std::to_string(m) + " edges, found " +
                             std::to_string(lines.size() - 1));
  }
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (line.tokens.front() != "e") throw MalformedInput(line.number, "expected 'e <u> <v>'");
    expect_arity(line, 3);
    auto u = number_at(line, 1), v = number_at(line, 2);
    if (u == v) throw MalformedInput(line.number, "loop edge on vertex " + std::to_string(u));
    if (u >= in.vertex_count || v >= in.vertex_count) {
      throw MalformedInput(line.number, "vertex index out of range");
    }
    in.edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
    in.line_of.push_back(line.number);
  }
  return in;
}

void reject_duplicates(const EdgeListInput& in) {
  std::vector<std::size_t> order(in.edges.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return in.edges[a] < in.edges[b]; });
  for (std::size_t k = 1; k < order.size(); ++k) {
    if (in.edges[order[k]] == in.edges[order[k - 1]]) {
      throw MalformedInput(in.line_of[order[k]], "duplicate edge in simple graph");
    }
  }
}

}  // namespace

MultiGraph parse_multigraph(std::string_view text) {
  auto in = parse_edge_list(text);
  if (in.simple_header) reject_duplicates(in);
  return MultiGraph(in.vertex_count, std::move(in.edges));
}

SimpleGraph parse_simple_graph(std::string_view text) {
  auto in = parse_edge_list(text);
  reject_duplicates(in);
  return SimpleGraph(in.vertex_count, in.edges);
}

RootResult parse_root(std::string_view text) {
  auto lines = tokenize(text);
  if (lines.empty()) throw MalformedInput(1, "empty input");
  const auto& head = lines.front();
  if (head.tokens.front() != "root") throw MalformedInput(head.number, "expected 'root' header");
  expect_arity(head, 4);
  auto n = number_at(head, 1), m = number_at(head, 2);
  auto mode_token = head.tokens[3];
  if (!mode_token.starts_with("mode=")) throw MalformedInput(head.number, "expected mode=<l1|ge1>");
  auto mode = parse_line_mode(mode_token.substr(5));
  if (!mode) throw MalformedInput(head.number, "unknown mode");
  if (lines.size() != 1 + 2 * m) {
    throw MalformedInput(last_line(lines), "expected " + std::to_string(m) + " 'e' and " +
                                               std::to_string(m) + " 'map' lines");
  }
  RootResult r;
  r.mode = *mode;
  std::vector<Endpoints> edges;
  for (std::size_t i = 0; i < m; ++i) {
    const auto& line = lines[1 + i];
    if (line.tokens.front() != "e") throw MalformedInput(line.number, "expected 'e <id> <u> <v>'");
    expect_arity(line, 4);
    if (number_at(line, 1) != i) throw MalformedInput(line.number, "edge ids must be listed in order");
    auto u = number_at(line, 2), v = number_at(line, 3);
    if (u == v) throw MalformedInput(line.number, "loop edge");
    if (u >= n || v >= n) throw MalformedInput(line.number, "vertex index out of range");
    edges.emplace_back(static_cast<VertexId>(u), static_cast<VertexId>(v));
  }
  r.root = MultiGraph(n, std::move(edges));
  r.vertex_to_edge.resize(m);
  std::vector<char> seen(m, 0);
  for (std::size_t i = 0; i < m; ++i) {
    const auto& line = lines[1 + m + i];
    if (line.tokens.front() != "map") throw MalformedInput(line.number, "expected 'map <vertex> <id>'");
    expect_arity(line, 3);
    if (number_at(line, 1) != i) throw MalformedInput(line.number, "map lines must be in vertex order");
    auto e = number_at(line, 2);
    if (e >= m || seen[e]) throw MalformedInput(line.number, "map is not a bijection onto the edges");
    seen[e] = 1;
    r.vertex_to_edge[i] = static_cast<EdgeId>(e);
  }
  return r;
}

std::string format_multigraph(const MultiGraph& g) {
  std::ostringstream out;
  out << "mgraph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edges()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string format_simple_graph(const SimpleGraph& g) {
  std::ostringstream out;
  out << "graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const auto& e : g.edge_list()) out << "e " << e.u << ' ' << e.v << '\n';
  return out.str();
}

std::string emit_root(const RootResult& r, std::span<const VertexId> vertex_labels) {
  std::ostringstream out;
  out << "root " << r.root.vertex_count() << ' ' << r.root.edge_count() << " mode=" << to_string(r.mode)
      << '\n';
  for (EdgeId e = 0; e < r.root.edge_count(); ++e) {
    out << "e " << e << ' ' << r.root.edge(e).u << ' ' << r.root.edge(e).v << '\n';
  }
  for (VertexId v = 0; v < r.vertex_to_edge.size(); ++v) {
    out << "map " << (vertex_labels.empty() ? v : vertex_labels[v]) << ' ' << r.vertex_to_edge[v] << '\n';
  }
  return out.str();
}

}  // namespace lineroot
