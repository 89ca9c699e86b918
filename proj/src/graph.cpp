#include "lineroot/graph.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace lineroot {

namespace {

void check_endpoints(std::size_t vertex_count, VertexId a, VertexId b) {
  if (a == b) {
    throw std::invalid_argument("loop edge on vertex " + std::to_string(a));
  }
  if (a >= vertex_count || b >= vertex_count) {
    throw std::invalid_argument("edge endpoint out of range: {" + std::to_string(a) + ", " +
                                std::to_string(b) + "} with " + std::to_string(vertex_count) +
                                " vertices");
  }
}

std::vector<std::vector<VertexId>> collect_components(std::size_t n,
                                                      const std::vector<VertexId>& label,
                                                      std::size_t count) {
  std::vector<std::vector<VertexId>> out(count);
  for (VertexId v = 0; v < n; ++v) out[label[v]].push_back(v);
  return out;
}

}  // namespace

MultiGraph::MultiGraph(std::size_t vertex_count, std::vector<Endpoints> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
  offsets_.assign(vertex_count_ + 1, 0);
  for (auto& e : edges_) {
    check_endpoints(vertex_count_, e.u, e.v);
    e = Endpoints(e.u, e.v);
    ++offsets_[e.u + 1];
    ++offsets_[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count_; ++v) offsets_[v + 1] += offsets_[v];
  incidence_.resize(offsets_.back());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (EdgeId e = 0; e < edges_.size(); ++e) {
    incidence_[cursor[edges_[e].u]++] = e;
    incidence_[cursor[edges_[e].v]++] = e;
  }
}

EdgeId MultiGraphBuilder::add_edge(VertexId u, VertexId v) {
  check_endpoints(vertex_count_, u, v);
  edges_.emplace_back(u, v);
  return static_cast<EdgeId>(edges_.size() - 1);
}

void MultiGraphBuilder::add_edges(VertexId u, VertexId v, std::size_t count) {
  for (std::size_t i = 0; i < count; ++i) add_edge(u, v);
}

MultiGraph MultiGraphBuilder::build() && { return MultiGraph(vertex_count_, std::move(edges_)); }
MultiGraph MultiGraphBuilder::build() const& { return MultiGraph(vertex_count_, edges_); }

SimpleGraph::SimpleGraph(std::size_t vertex_count, std::span<const Endpoints> edges) {
  std::vector<std::size_t> degree(vertex_count + 1, 0);
  for (const auto& e : edges) {
    check_endpoints(vertex_count, e.u, e.v);
    ++degree[e.u + 1];
    ++degree[e.v + 1];
  }
  for (std::size_t v = 0; v < vertex_count; ++v) degree[v + 1] += degree[v];

  // Scatter unsorted, then a transposing pass yields sorted neighbor lists in
  // linear time.
  std::vector<VertexId> unsorted(degree.back());
  std::vector<std::size_t> cursor(degree.begin(), degree.end() - 1);
  for (const auto& e : edges) {
    unsorted[cursor[e.u]++] = e.v;
    unsorted[cursor[e.v]++] = e.u;
  }
  adjacency_.resize(degree.back());
  std::copy(degree.begin(), degree.end() - 1, cursor.begin());
  for (VertexId v = 0; v < vertex_count; ++v) {
    for (std::size_t i = degree[v]; i < degree[v + 1]; ++i) {
      adjacency_[cursor[unsorted[i]]++] = v;
    }
  }
  offsets_ = std::move(degree);

  for (VertexId v = 0; v < vertex_count; ++v) {
    auto nb = neighbors(v);
    auto dup = std::adjacent_find(nb.begin(), nb.end());
    if (dup != nb.end()) {
      throw std::invalid_argument("duplicate edge {" + std::to_string(v) + ", " +
                                  std::to_string(*dup) + "} in simple graph");
    }
  }
}

SimpleGraph::SimpleGraph(std::size_t vertex_count,
                         std::initializer_list<std::pair<VertexId, VertexId>> edges) {
  std::vector<Endpoints> list;
  list.reserve(edges.size());
  for (const auto& [a, b] : edges) {
    check_endpoints(vertex_count, a, b);
    list.emplace_back(a, b);
  }
  *this = SimpleGraph(vertex_count, list);
}

SimpleGraph SimpleGraph::from_sorted_adjacency(std::vector<std::size_t> offsets,
                                               std::vector<VertexId> adjacency) {
  if (offsets.empty() || offsets.front() != 0 || offsets.back() != adjacency.size() ||
      adjacency.size() % 2 != 0) {
    throw std::invalid_argument("malformed adjacency lists");
  }
  SimpleGraph g;
  g.offsets_ = std::move(offsets);
  g.adjacency_ = std::move(adjacency);
  return g;
}

bool SimpleGraph::adjacent(VertexId a, VertexId b) const noexcept {
  if (degree(b) < degree(a)) std::swap(a, b);
  auto nb = neighbors(a);
  return std::binary_search(nb.begin(), nb.end(), b);
}

std::vector<Endpoints> SimpleGraph::edge_list() const {
  std::vector<Endpoints> out;
  out.reserve(edge_count());
  for (VertexId v = 0; v < vertex_count(); ++v) {
    for (VertexId w : neighbors(v)) {
      if (v < w) out.emplace_back(v, w);
    }
  }
  return out;
}

bool is_isomorphism(const MultiGraph& a, const MultiGraph& b, const MultiGraphIsomorphism& iso) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
  if (iso.vertex_map.size() != a.vertex_count() || iso.edge_map.size() != a.edge_count()) {
    return false;
  }
  std::vector<char> hit_v(b.vertex_count(), 0);
  for (VertexId x : iso.vertex_map) {
    if (x >= b.vertex_count() || hit_v[x]) return false;
    hit_v[x] = 1;
  }
  std::vector<char> hit_e(b.edge_count(), 0);
  for (EdgeId f : iso.edge_map) {
    if (f >= b.edge_count() || hit_e[f]) return false;
    hit_e[f] = 1;
  }
  // Both sides have exactly two endpoints per edge, so matching endpoint sets
  // is the same as preserving incidence.
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    const auto& src = a.edge(e);
    Endpoints image(iso.vertex_map[src.u], iso.vertex_map[src.v]);
    if (image != b.edge(iso.edge_map[e])) return false;
  }
  return true;
}

UnderlyingSimple underlying_simple(const MultiGraph& g) {
  UnderlyingSimple out;
  auto classes = parallel_classes(g);
  std::vector<Endpoints> ends;
  ends.reserve(classes.size());
  for (const auto& c : classes) ends.push_back(c.ends);
  out.graph = SimpleGraph(g.vertex_count(), ends);
  out.simple_edges = out.graph.edge_list();

  // Rank of each endpoint pair within the sorted edge list.
  std::vector<std::size_t> first(g.vertex_count() + 1, 0);
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    first[v + 1] = first[v];
    for (VertexId w : out.graph.neighbors(v)) first[v + 1] += (v < w);
  }
  out.edge_to_simple.resize(g.edge_count());
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    const auto& ends_e = g.edge(e);
    auto nb = out.graph.neighbors(ends_e.u);
    auto from = std::upper_bound(nb.begin(), nb.end(), ends_e.u);
    auto at = std::lower_bound(from, nb.end(), ends_e.v);
    out.edge_to_simple[e] = first[ends_e.u] + static_cast<std::size_t>(at - from);
  }
  return out;
}

std::vector<ParallelClass> parallel_classes(const MultiGraph& g) {
  // Bucket by smaller endpoint, then resolve the larger endpoint with a
  // per-bucket lookup table.
  std::vector<ParallelClass> out;
  std::vector<std::size_t> class_at(g.vertex_count(), SIZE_MAX);
  std::vector<std::size_t> class_of(g.edge_count(), SIZE_MAX);
  for (VertexId u = 0; u < g.vertex_count(); ++u) {
    for (EdgeId e : g.incident_edges(u)) {
      const auto& ends = g.edge(e);
      if (ends.u != u) continue;
      if (class_at[ends.v] == SIZE_MAX) {
        class_at[ends.v] = e;  // first edge id stands in until numbering below
      }
      class_of[e] = class_at[ends.v];
    }
    for (EdgeId e : g.incident_edges(u)) {
      if (g.edge(e).u == u) class_at[g.edge(e).v] = SIZE_MAX;
    }
  }
  std::vector<std::size_t> index_of_first(g.edge_count(), SIZE_MAX);
  for (EdgeId e = 0; e < g.edge_count(); ++e) {
    std::size_t first = class_of[e];
    if (index_of_first[first] == SIZE_MAX) {
      index_of_first[first] = out.size();
      out.push_back({g.edge(e), {}});
    }
    out[index_of_first[first]].edges.push_back(e);
  }
  return out;
}

std::vector<std::vector<VertexId>> components(const SimpleGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> label(n, UINT32_MAX);
  std::vector<VertexId> stack;
  std::size_t count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != UINT32_MAX) continue;
    label[s] = static_cast<VertexId>(count);
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (VertexId w : g.neighbors(v)) {
        if (label[w] == UINT32_MAX) {
          label[w] = static_cast<VertexId>(count);
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return collect_components(n, label, count);
}

std::vector<std::vector<VertexId>> components(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<VertexId> label(n, UINT32_MAX);
  std::vector<VertexId> stack;
  std::size_t count = 0;
  for (VertexId s = 0; s < n; ++s) {
    if (label[s] != UINT32_MAX) continue;
    label[s] = static_cast<VertexId>(count);
    stack.push_back(s);
    while (!stack.empty()) {
      VertexId v = stack.back();
      stack.pop_back();
      for (EdgeId e : g.incident_edges(v)) {
        VertexId w = g.edge(e).other(v);
        if (label[w] == UINT32_MAX) {
          label[w] = static_cast<VertexId>(count);
          stack.push_back(w);
        }
      }
    }
    ++count;
  }
  return collect_components(n, label, count);
}

bool is_connected(const SimpleGraph& g) {
  return g.vertex_count() > 0 && components(g).size() == 1;
}

bool is_connected(const MultiGraph& g) {
  return g.vertex_count() > 0 && components(g).size() == 1;
}

SimpleGraph induced_subgraph(const SimpleGraph& g, std::span<const VertexId> vertices) {
  std::vector<VertexId> local(g.vertex_count(), UINT32_MAX);
  for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = static_cast<VertexId>(i);
  std::vector<Endpoints> edges;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    for (VertexId w : g.neighbors(vertices[i])) {
      if (local[w] != UINT32_MAX && local[w] > i) {
        edges.emplace_back(static_cast<VertexId>(i), local[w]);
      }
    }
  }
  return SimpleGraph(vertices.size(), edges);
}

MultiGraph as_multigraph(const SimpleGraph& g) {
  return MultiGraph(g.vertex_count(), g.edge_list());
}

}  // namespace lineroot
