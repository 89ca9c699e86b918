#pragma once

// Core graph model: loop-free multigraphs and ordinary (simple) graphs, both
// immutable once built and addressed by dense integer ids.

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace lineroot {

using VertexId = std::uint32_t;
using EdgeId = std::uint32_t;

/// Unordered vertex pair, stored with u < v.
struct Endpoints {
  VertexId u = 0;
  VertexId v = 0;

  Endpoints() = default;
  Endpoints(VertexId a, VertexId b) : u(a < b ? a : b), v(a < b ? b : a) {}

  bool contains(VertexId x) const noexcept { return x == u || x == v; }
  VertexId other(VertexId x) const noexcept { return x == u ? v : u; }

  friend bool operator==(const Endpoints&, const Endpoints&) = default;
  friend auto operator<=>(const Endpoints&, const Endpoints&) = default;
};

/// Number of vertices two endpoint pairs have in common (0, 1 or 2).
inline int shared_endpoints(const Endpoints& a, const Endpoints& b) noexcept {
  return static_cast<int>(b.contains(a.u)) + static_cast<int>(b.contains(a.v));
}

/// A multigraph: every edge has exactly two distinct endpoints, parallel edges
/// are allowed. Construction throws std::invalid_argument on loops or
/// out-of-range endpoints.
class MultiGraph {
 public:
  MultiGraph() = default;
  MultiGraph(std::size_t vertex_count, std::vector<Endpoints> edges);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t edge_count() const noexcept { return edges_.size(); }

  std::span<const Endpoints> edges() const noexcept { return edges_; }
  const Endpoints& edge(EdgeId e) const { return edges_[e]; }

  /// Edges incident to v, in increasing EdgeId order.
  std::span<const EdgeId> incident_edges(VertexId v) const noexcept {
    return {incidence_.data() + offsets_[v], incidence_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }

  friend bool operator==(const MultiGraph& a, const MultiGraph& b) {
    return a.vertex_count_ == b.vertex_count_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t vertex_count_ = 0;
  std::vector<Endpoints> edges_;
  std::vector<std::size_t> offsets_{0};
  std::vector<EdgeId> incidence_;
};

class MultiGraphBuilder {
 public:
  explicit MultiGraphBuilder(std::size_t vertex_count = 0) : vertex_count_(vertex_count) {}

  VertexId add_vertex() { return static_cast<VertexId>(vertex_count_++); }
  EdgeId add_edge(VertexId u, VertexId v);
  /// Adds `count` parallel copies of {u, v}.
  void add_edges(VertexId u, VertexId v, std::size_t count);

  std::size_t vertex_count() const noexcept { return vertex_count_; }
  MultiGraph build() &&;
  MultiGraph build() const&;

 private:
  std::size_t vertex_count_;
  std::vector<Endpoints> edges_;
};

/// An ordinary graph in compressed adjacency form. Neighbor lists are sorted.
/// Construction throws std::invalid_argument on loops, duplicate edges or
/// out-of-range endpoints.
class SimpleGraph {
 public:
  SimpleGraph() = default;
  SimpleGraph(std::size_t vertex_count, std::span<const Endpoints> edges);
  SimpleGraph(std::size_t vertex_count, std::initializer_list<std::pair<VertexId, VertexId>> edges);

  /// Adopts ready-made adjacency lists: offsets has vertex_count + 1 entries,
  /// every list is strictly increasing, loop-free and mirrored. Only the
  /// shape is checked.
  static SimpleGraph from_sorted_adjacency(std::vector<std::size_t> offsets, std::vector<VertexId> adjacency);

  std::size_t vertex_count() const noexcept { return offsets_.size() - 1; }
  std::size_t edge_count() const noexcept { return adjacency_.size() / 2; }

  std::span<const VertexId> neighbors(VertexId v) const noexcept {
    return {adjacency_.data() + offsets_[v], adjacency_.data() + offsets_[v + 1]};
  }
  std::size_t degree(VertexId v) const noexcept { return offsets_[v + 1] - offsets_[v]; }
  bool adjacent(VertexId a, VertexId b) const noexcept;

  /// All edges as {u < v}, lexicographically sorted.
  std::vector<Endpoints> edge_list() const;

  friend bool operator==(const SimpleGraph& a, const SimpleGraph& b) {
    return a.offsets_ == b.offsets_ && a.adjacency_ == b.adjacency_;
  }

 private:
  std::vector<std::size_t> offsets_{0};
  std::vector<VertexId> adjacency_;
};

/// Pair (vertex bijection, edge bijection) between two multigraphs.
struct MultiGraphIsomorphism {
  std::vector<VertexId> vertex_map;
  std::vector<EdgeId> edge_map;
};

/// True iff `iso` is a pair of bijections that preserves incidence from `a` to `b`.
bool is_isomorphism(const MultiGraph& a, const MultiGraph& b, const MultiGraphIsomorphism& iso);

struct UnderlyingSimple {
  SimpleGraph graph;
  std::vector<Endpoints> simple_edges;   // == graph.edge_list()
  std::vector<std::size_t> edge_to_simple;  // multigraph EdgeId -> index into simple_edges
};

/// Replaces every parallel class by a single edge.
UnderlyingSimple underlying_simple(const MultiGraph& g);

/// Edges sharing an endpoint pair, classes ordered by their smallest EdgeId.
struct ParallelClass {
  Endpoints ends;
  std::vector<EdgeId> edges;
};
std::vector<ParallelClass> parallel_classes(const MultiGraph& g);

/// Connected components as sorted vertex lists, ordered by smallest member.
std::vector<std::vector<VertexId>> components(const SimpleGraph& g);
std::vector<std::vector<VertexId>> components(const MultiGraph& g);

/// A graph with no vertices is not connected; a single vertex is.
bool is_connected(const SimpleGraph& g);
bool is_connected(const MultiGraph& g);

/// Subgraph induced on `vertices`, relabeled to 0..k-1 in the given order.
SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const VertexId> vertices);

/// Views a simple graph as a multigraph (edges in edge_list() order).
MultiGraph as_multigraph(const SimpleGraph& g);

}  // namespace lineroot
