#include "lineroot/reconstruct.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "lineroot/line_graph.hpp"
#include "lineroot/simple_root.hpp"

namespace lineroot {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::not_line_graph:
      return "not a line graph";
    case ErrorKind::invalid_input:
      return "invalid input";
    case ErrorKind::cannot_lift:
      return "cannot lift";
  }
  return "unknown";
}

std::string_view to_string(LineMode mode) noexcept { return mode == LineMode::l1 ? "l1" : "ge1"; }

std::optional<LineMode> parse_line_mode(std::string_view text) noexcept {
  if (text == "l1") return LineMode::l1;
  if (text == "ge1" || text == "geq1") return LineMode::geq1;
  return std::nullopt;
}

TwinKind twin_kind_for(LineMode mode) noexcept {
  return mode == LineMode::l1 ? TwinKind::false_twin : TwinKind::true_twin;
}

SimpleGraph line_graph(const MultiGraph& g, LineMode mode) {
  return mode == LineMode::l1 ? l1_line_graph(g) : geq1_line_graph(g);
}

Expected<RootResult> reconstruct_root(const SimpleGraph& gamma, LineMode mode) {
  if (gamma.vertex_count() == 0) return Failure{ErrorKind::invalid_input, "graph has no vertices"};
  // Isolated vertices are the only twins that can sit in different
  // components; without them Γ is connected iff its quotient is, and the
  // simple root step checks the quotient.
  if (gamma.vertex_count() > 1) {
    for (VertexId v = 0; v < gamma.vertex_count(); ++v) {
      if (gamma.degree(v) == 0) return Failure{ErrorKind::invalid_input, "graph is not connected"};
    }
  }

  auto partition = twin_partition(gamma, twin_kind_for(mode));
  std::optional<QuotientGraph> q;
  if (partition.class_count() < gamma.vertex_count()) q = quotient(gamma, std::move(partition));
  const SimpleGraph& reduced = q ? q->graph : gamma;
  auto simple = simple_line_graph_root(reduced, K3Policy::triangle);
  if (!simple) {
    if (simple.error().kind == ErrorKind::invalid_input) {
      return Failure{ErrorKind::invalid_input, "graph is not connected"};
    }
    return Failure{ErrorKind::not_line_graph,
                   "twin quotient is not a line graph: " + simple.error().message};
  }
  if (q) partition = std::move(q->partition);

  RootResult out;
  out.mode = mode;
  out.class_of.assign(partition.class_of().begin(), partition.class_of().end());
  out.vertex_to_edge.resize(gamma.vertex_count());
  std::vector<Endpoints> edges;
  edges.reserve(gamma.vertex_count());
  for (std::uint32_t c = 0; c < partition.class_count(); ++c) {
    for (VertexId v : partition.members(c)) {
      out.vertex_to_edge[v] = static_cast<EdgeId>(edges.size());
      edges.push_back(simple->vertex_to_edge[c]);
    }
  }
  out.root = MultiGraph(simple->root.vertex_count(), std::move(edges));

  if (mode == LineMode::l1 && out.root.vertex_count() == 4) {
    throw std::logic_error("canonical 1-line root has four vertices");
  }
  if (mode == LineMode::geq1 && !is_delta0_free(out.root)) {
    throw std::logic_error("canonical >=1-line root contains a delta0 subgraph");
  }
  return out;
}

bool verify(const SimpleGraph& gamma, const RootResult& r) {
  const auto& root = r.root;
  if (r.vertex_to_edge.size() != gamma.vertex_count() || root.edge_count() != gamma.vertex_count()) {
    return false;
  }
  std::vector<VertexId> edge_to_vertex(root.edge_count(), UINT32_MAX);
  for (VertexId v = 0; v < gamma.vertex_count(); ++v) {
    EdgeId e = r.vertex_to_edge[v];
    if (e >= root.edge_count() || edge_to_vertex[e] != UINT32_MAX) return false;
    edge_to_vertex[e] = v;
  }

  // Edge count of the line graph from degrees and parallel classes, before
  // building anything quadratic.
  std::size_t pairs = 0;
  for (VertexId x = 0; x < root.vertex_count(); ++x) {
    pairs += root.degree(x) * (root.degree(x) - (root.degree(x) > 0)) / 2;
  }
  std::size_t parallel_pairs = 0;
  for (const auto& pc : parallel_classes(root)) {
    parallel_pairs += pc.edges.size() * (pc.edges.size() - 1) / 2;
  }
  std::size_t expected = r.mode == LineMode::l1 ? pairs - 2 * parallel_pairs : pairs - parallel_pairs;
  if (expected != gamma.edge_count()) return false;

  // Same edge count, so it is enough that every edge of Γ maps to an edge.
  auto lg = line_graph(root, r.mode);
  for (const auto& e : gamma.edge_list()) {
    if (!lg.adjacent(r.vertex_to_edge[e.u], r.vertex_to_edge[e.v])) return false;
  }
  return true;
}

std::optional<Delta0Witness> find_delta0(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  // Up to three distinct neighbours per vertex; three means "too many".
  std::vector<std::array<VertexId, 3>> near(n);
  std::vector<std::uint8_t> count(n, 0);
  for (VertexId v = 0; v < n; ++v) {
    for (EdgeId e : g.incident_edges(v)) {
      VertexId w = g.edge(e).other(v);
      auto& list = near[v];
      if (std::find(list.begin(), list.begin() + count[v], w) == list.begin() + count[v]) {
        list[count[v]++] = w;
        if (count[v] == 3) break;
      }
    }
    if (count[v] == 2 && near[v][0] > near[v][1]) std::swap(near[v][0], near[v][1]);
  }
  auto has_exactly = [&](VertexId v, VertexId a, VertexId b) {
    if (count[v] != 2) return false;
    return (near[v][0] == a && near[v][1] == b) || (near[v][0] == b && near[v][1] == a);
  };

  std::vector<VertexId> pendant_at(n, UINT32_MAX);
  for (VertexId v = 0; v < n; ++v) {
    if (count[v] == 1) {
      VertexId z = near[v][0];
      if (pendant_at[z] != UINT32_MAX) return Delta0Witness{pendant_at[z], v, z};
      pendant_at[z] = v;
    } else if (count[v] == 2) {
      VertexId p = near[v][0], q = near[v][1];
      if (has_exactly(p, v, q)) return Delta0Witness{v, p, q};
      if (has_exactly(q, v, p)) return Delta0Witness{v, q, p};
    }
  }
  return std::nullopt;
}

Expected<MultiGraph> delta0_collapse(const MultiGraph& g) {
  if (g.edge_count() == 0) return Failure{ErrorKind::invalid_input, "multigraph has no edges"};
  if (!is_connected(g)) return Failure{ErrorKind::invalid_input, "multigraph is not connected"};
  auto r = reconstruct_root(geq1_line_graph(g), LineMode::geq1);
  if (!r) {
    throw std::logic_error("line graph of a multigraph was rejected: " + r.error().message);
  }
  return std::move(r->root);
}

bool satisfies_glg_conditions(const MultiGraph& g) {
  for (const auto& pc : parallel_classes(g)) {
    if (pc.edges.size() > 2) return false;
    if (pc.edges.size() == 2 && g.degree(pc.ends.u) != 2 && g.degree(pc.ends.v) != 2) return false;
  }
  return true;
}

namespace {

// All 4-vertex roots sharing the 1-line graph of a 3-vertex root, as
// (multigraph, vertex_to_edge) in a fixed enumeration order. Side {a, b} of
// the triangle is spread over the perfect matching {a b, c d} of K4 with
// d = 3 the new vertex.
std::size_t doubled_edges(const MultiGraph& g) { return g.edge_count() - parallel_classes(g).size(); }

// The 4-vertex split of a triangle root that meets the conditions with the
// fewest parallel edges; the first one found wins ties.
std::optional<RootResult> glg_four_vertex_root(const RootResult& triangle) {
  const auto& root = triangle.root;
  // Γ-vertices grouped by triangle side.
  const std::array<Endpoints, 3> sides{Endpoints(0, 1), Endpoints(0, 2), Endpoints(1, 2)};
  std::array<std::vector<VertexId>, 3> on_side;
  for (VertexId v = 0; v < triangle.vertex_to_edge.size(); ++v) {
    const auto& ends = root.edge(triangle.vertex_to_edge[v]);
    for (std::size_t s = 0; s < 3; ++s) {
      if (ends == sides[s]) on_side[s].push_back(v);
    }
  }
  auto complement = [](Endpoints e) {
    // The other edge of e's perfect matching in K4 on {0, 1, 2, 3}.
    std::array<VertexId, 2> rest{};
    std::size_t k = 0;
    for (VertexId x = 0; x < 4; ++x) {
      if (!e.contains(x)) rest[k++] = x;
    }
    return Endpoints(rest[0], rest[1]);
  };
  for (const auto& side : on_side) {
    if (side.size() > 4) return std::nullopt;  // one half would exceed two
  }

  std::optional<RootResult> best;
  std::array<std::size_t, 3> keep{};
  for (keep[0] = 0; keep[0] <= on_side[0].size(); ++keep[0]) {
    for (keep[1] = 0; keep[1] <= on_side[1].size(); ++keep[1]) {
      for (keep[2] = 0; keep[2] <= on_side[2].size(); ++keep[2]) {
        std::vector<Endpoints> edges(triangle.vertex_to_edge.size());
        bool within_two = true;
        for (std::size_t s = 0; s < 3; ++s) {
          std::size_t moved = on_side[s].size() - keep[s];
          within_two = within_two && keep[s] <= 2 && moved <= 2;
          for (std::size_t i = 0; i < on_side[s].size(); ++i) {
            edges[on_side[s][i]] = i < keep[s] ? sides[s] : complement(sides[s]);
          }
        }
        if (!within_two) continue;
        MultiGraph candidate(4, std::move(edges));
        if (!is_connected(candidate) || !satisfies_glg_conditions(candidate)) continue;
        if (best && doubled_edges(best->root) <= doubled_edges(candidate)) continue;
        RootResult out;
        out.mode = LineMode::l1;
        out.root = std::move(candidate);
        out.vertex_to_edge.resize(triangle.vertex_to_edge.size());
        for (VertexId v = 0; v < out.vertex_to_edge.size(); ++v) out.vertex_to_edge[v] = v;
        out.class_of = triangle.class_of;
        best = std::move(out);
      }
    }
  }
  return best;
}

}  // namespace

Expected<std::optional<RootResult>> is_generalized_line_graph(const SimpleGraph& gamma) {
  auto canonical = reconstruct_root(gamma, LineMode::l1);
  if (!canonical) {
    if (canonical.error().kind == ErrorKind::invalid_input) return canonical.error();
    return std::optional<RootResult>{};
  }
  const bool canonical_ok = satisfies_glg_conditions(canonical->root);
  if (canonical->root.vertex_count() == 3 && (!canonical_ok || doubled_edges(canonical->root) > 0)) {
    auto split = glg_four_vertex_root(*canonical);
    if (split && (!canonical_ok || doubled_edges(split->root) < doubled_edges(canonical->root))) {
      return split;
    }
  }
  if (canonical_ok) return std::optional<RootResult>{std::move(*canonical)};
  return std::optional<RootResult>{};
}

Expected<LiftedIsomorphism> lift_isomorphism(const SimpleGraph& gamma, const SimpleGraph& gamma_prime,
                                             std::span<const VertexId> phi, LineMode mode) {
  const std::size_t n = gamma.vertex_count();
  if (gamma_prime.vertex_count() != n || gamma_prime.edge_count() != gamma.edge_count() ||
      phi.size() != n) {
    return Failure{ErrorKind::invalid_input, "vertex map is not an isomorphism"};
  }
  std::vector<char> hit(n, 0);
  for (VertexId w : phi) {
    if (w >= n || hit[w]) return Failure{ErrorKind::invalid_input, "vertex map is not a bijection"};
    hit[w] = 1;
  }
  for (const auto& e : gamma.edge_list()) {
    if (!gamma_prime.adjacent(phi[e.u], phi[e.v])) {
      return Failure{ErrorKind::invalid_input, "vertex map does not preserve adjacency"};
    }
  }

  auto source = reconstruct_root(gamma, mode);
  auto target = reconstruct_root(gamma_prime, mode);
  for (const auto* side : {&source, &target}) {
    if (!*side) {
      if (side->error().kind == ErrorKind::invalid_input) return side->error();
      return Failure{ErrorKind::cannot_lift, side->error().message};
    }
  }
  const MultiGraph& a = source->root;
  const MultiGraph& b = target->root;

  MultiGraphIsomorphism iso;
  iso.edge_map.resize(a.edge_count());
  for (VertexId v = 0; v < n; ++v) {
    iso.edge_map[source->vertex_to_edge[v]] = target->vertex_to_edge[phi[v]];
  }

  // A root vertex maps to the endpoint shared by the images of all its edges.
  // If all its edges run to a single neighbour, the neighbour's image decides.
  constexpr VertexId kUnset = UINT32_MAX;
  iso.vertex_map.assign(a.vertex_count(), kUnset);
  if (b.vertex_count() != a.vertex_count()) {
    return Failure{ErrorKind::cannot_lift, "roots have different vertex counts"};
  }
  std::vector<VertexId> deferred;
  for (VertexId x = 0; x < a.vertex_count(); ++x) {
    auto incident = a.incident_edges(x);
    if (incident.empty()) return Failure{ErrorKind::cannot_lift, "root has an isolated vertex"};
    Endpoints first = b.edge(iso.edge_map[incident.front()]);
    bool keep_u = true, keep_v = true;
    for (EdgeId e : incident) {
      const auto& image = b.edge(iso.edge_map[e]);
      keep_u = keep_u && image.contains(first.u);
      keep_v = keep_v && image.contains(first.v);
    }
    if (keep_u && keep_v) {
      deferred.push_back(x);
    } else if (keep_u || keep_v) {
      iso.vertex_map[x] = keep_u ? first.u : first.v;
    } else {
      return Failure{ErrorKind::cannot_lift, "edge images share no common endpoint"};
    }
  }
  for (VertexId x : deferred) {
    EdgeId e = a.incident_edges(x).front();
    VertexId y = a.edge(e).other(x);
    Endpoints image = b.edge(iso.edge_map[e]);
    if (iso.vertex_map[y] != kUnset) {
      iso.vertex_map[x] = image.other(iso.vertex_map[y]);
    } else {
      // Two vertices joined only to each other: the whole root is a banana and
      // either orientation induces the same edge map.
      iso.vertex_map[x] = image.u;
      iso.vertex_map[y] = image.v;
    }
  }
  if (!is_isomorphism(a, b, iso)) {
    return Failure{ErrorKind::cannot_lift, "transported edge map is not induced by a vertex map"};
  }
  return LiftedIsomorphism{std::move(*source), std::move(*target), std::move(iso)};
}

}  // namespace lineroot
