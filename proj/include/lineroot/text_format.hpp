#pragma once

// Line-oriented text formats.
//
//   graph <n> <m>          mgraph <n> <m>          root <n> <m> mode=<l1|ge1>
//   e <u> <v>   (m lines)  e <u> <v>   (m lines)   e <id> <u> <v>   (m lines, id order)
//                                                  map <vertex> <id> (vertex order)
//
// Vertices are 0-based. Lines starting with '#' and blank lines are ignored.
// In a `graph` a repeated edge is an error; in an `mgraph` it adds a parallel
// edge.

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>

#include "lineroot/graph.hpp"
#include "lineroot/reconstruct.hpp"

namespace lineroot {

class MalformedInput : public std::runtime_error {
 public:
  MalformedInput(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

MultiGraph parse_multigraph(std::string_view text);
SimpleGraph parse_simple_graph(std::string_view text);
RootResult parse_root(std::string_view text);

std::string format_multigraph(const MultiGraph& g);
std::string format_simple_graph(const SimpleGraph& g);

/// Byte-deterministic. `vertex_labels`, when given, renames the Γ-vertices in
/// the map lines (used when emitting one component of a larger graph).
std::string emit_root(const RootResult& r, std::span<const VertexId> vertex_labels = {});

}  // namespace lineroot
