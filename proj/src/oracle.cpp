#include "lineroot/oracle.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <functional>
#include <map>

#include "lineroot/isomorphism.hpp"
#include "lineroot/line_graph.hpp"

namespace lineroot::oracle {

namespace {

std::vector<Endpoints> all_pairs(std::size_t n) {
  std::vector<Endpoints> out;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) out.emplace_back(a, b);
  }
  return out;
}

// Keeps the first member of every isomorphism class, in insertion order.
template <typename Graph>
class IsoClasses {
 public:
  bool insert(const Graph& g) {
    auto& bucket = buckets_[isomorphism_signature(g)];
    for (std::size_t index : bucket) {
      if (same(members_[index], g)) return false;
    }
    bucket.push_back(members_.size());
    members_.push_back(g);
    return true;
  }
  std::vector<Graph> take() && { return std::move(members_); }

 private:
  static bool same(const MultiGraph& a, const MultiGraph& b) {
    return multigraph_isomorphic(a, b).has_value();
  }
  static bool same(const SimpleGraph& a, const SimpleGraph& b) {
    return simple_isomorphic(a, b).has_value();
  }

  std::map<std::vector<std::uint64_t>, std::vector<std::size_t>> buckets_;
  std::vector<Graph> members_;
};

}  // namespace

std::vector<MultiGraph> enumerate_multigraphs(std::size_t vertices, std::size_t max_edges,
                                              bool connected_only) {
  if (vertices > 6 || max_edges > 7) {
    throw BudgetExceeded("enumerate_multigraphs supports at most 6 vertices and 7 edges");
  }
  const auto pairs = all_pairs(vertices);
  IsoClasses<MultiGraph> classes;
  std::vector<Endpoints> chosen;
  std::function<void(std::size_t, std::size_t)> extend = [&](std::size_t from, std::size_t target) {
    if (chosen.size() == target) {
      MultiGraph g(vertices, chosen);
      if (!connected_only || is_connected(g)) classes.insert(g);
      return;
    }
    for (std::size_t p = from; p < pairs.size(); ++p) {
      chosen.push_back(pairs[p]);
      extend(p, target);
      chosen.pop_back();
    }
  };
  for (std::size_t m = 0; m <= max_edges; ++m) extend(0, m);
  return std::move(classes).take();
}

std::vector<SimpleGraph> enumerate_simple_graphs(std::size_t vertices, bool connected_only) {
  if (vertices > 6) throw BudgetExceeded("enumerate_simple_graphs supports at most 6 vertices");
  const auto pairs = all_pairs(vertices);
  IsoClasses<SimpleGraph> classes;
  // Fewest edges first so the output is ordered by size.
  std::vector<std::uint32_t> masks(std::size_t{1} << pairs.size());
  for (std::uint32_t i = 0; i < masks.size(); ++i) masks[i] = i;
  std::stable_sort(masks.begin(), masks.end(), [](std::uint32_t a, std::uint32_t b) {
    return std::popcount(a) < std::popcount(b);
  });
  for (auto mask : masks) {
    std::vector<Endpoints> edges;
    for (std::size_t p = 0; p < pairs.size(); ++p) {
      if (mask >> p & 1U) edges.push_back(pairs[p]);
    }
    SimpleGraph g(vertices, edges);
    if (!connected_only || is_connected(g)) classes.insert(g);
  }
  return std::move(classes).take();
}

std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
  if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  for (;;) {
    std::uint64_t x = rng();
    if (x < limit) return x % bound;
  }
}

MultiGraph random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed,
                             RandomConstraints constraints) {
  if (n < 2) throw std::invalid_argument("random_multigraph needs at least two vertices");
  if (constraints.connected && m + 1 < n) {
    throw std::invalid_argument("a connected multigraph on " + std::to_string(n) +
                                " vertices needs at least " + std::to_string(n - 1) + " edges");
  }
  constexpr int kAttempts = 1000;
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    std::vector<Endpoints> edges;
    edges.reserve(m);
    if (constraints.connected) {
      std::vector<VertexId> perm(n);
      for (VertexId v = 0; v < n; ++v) perm[v] = v;
      for (std::size_t i = n - 1; i > 0; --i) std::swap(perm[i], perm[uniform_below(rng, i + 1)]);
      for (std::size_t i = 1; i < n; ++i) edges.emplace_back(perm[i], perm[uniform_below(rng, i)]);
    }
    while (edges.size() < m) {
      auto a = static_cast<VertexId>(uniform_below(rng, n));
      auto b = static_cast<VertexId>(uniform_below(rng, n - 1));
      if (b >= a) ++b;
      edges.emplace_back(a, b);
    }
    MultiGraph g(n, std::move(edges));
    if (constraints.delta0_free && !is_delta0_free(g)) continue;
    return g;
  }
  throw ConstraintUnsatisfiable("no multigraph with " + std::to_string(n) + " vertices and " +
                                std::to_string(m) + " edges met the constraints after " +
                                std::to_string(kAttempts) + " attempts");
}

SimpleGraph random_simple_graph(std::size_t n, double edge_probability, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  const auto threshold = static_cast<std::uint64_t>(edge_probability * 1'000'000.0);
  std::vector<Endpoints> edges;
  for (VertexId a = 0; a < n; ++a) {
    for (VertexId b = a + 1; b < n; ++b) {
      if (uniform_below(rng, 1'000'000) < threshold) edges.emplace_back(a, b);
    }
  }
  return SimpleGraph(n, edges);
}

std::vector<MultiGraph> brute_force_roots(const SimpleGraph& gamma, LineMode mode,
                                          std::size_t max_vertices) {
  const std::size_t n = gamma.vertex_count();
  if (n > 8 || max_vertices > 9) {
    throw BudgetExceeded("brute_force_roots supports at most 8 edges and 9 vertices");
  }
  IsoClasses<MultiGraph> classes;
  if (n == 0) return {};

  // Breadth-first order inside each component: every later vertex of a
  // component is adjacent to an earlier one, so it can add at most one new
  // root vertex.
  std::vector<VertexId> order;
  std::vector<char> queued(n, 0);
  for (VertexId s = 0; s < n; ++s) {
    if (queued[s]) continue;
    queued[s] = 1;
    std::size_t head = order.size();
    order.push_back(s);
    while (head < order.size()) {
      VertexId v = order[head++];
      for (VertexId w : gamma.neighbors(v)) {
        if (!queued[w]) {
          queued[w] = 1;
          order.push_back(w);
        }
      }
    }
  }

  std::vector<Endpoints> assigned(n);
  auto adjacent_in_mode = [mode](const Endpoints& a, const Endpoints& b) {
    int shared = shared_endpoints(a, b);
    return mode == LineMode::l1 ? shared == 1 : shared >= 1;
  };
  std::function<void(std::size_t, std::size_t)> place = [&](std::size_t depth, std::size_t used) {
    if (depth == n) {
      classes.insert(MultiGraph(used, assigned));
      return;
    }
    VertexId v = order[depth];
    // New root vertices are introduced in increasing order.
    const std::size_t limit = std::min(used + 2, max_vertices);
    for (VertexId a = 0; a < limit; ++a) {
      for (VertexId b = a + 1; b < limit; ++b) {
        bool fresh_in_order = b < used || (b == used && a < used) || (a == used && b == used + 1);
        if (!fresh_in_order) continue;
        Endpoints candidate(a, b);
        bool ok = true;
        for (std::size_t k = 0; k < depth && ok; ++k) {
          VertexId w = order[k];
          ok = adjacent_in_mode(candidate, assigned[w]) == gamma.adjacent(v, w);
        }
        if (!ok) continue;
        assigned[v] = candidate;
        place(depth + 1, std::max<std::size_t>(used, b + 1));
      }
    }
  };
  place(0, 0);
  return std::move(classes).take();
}

std::optional<Delta0Witness> brute_force_delta0(const MultiGraph& g) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<std::size_t>> mult(n, std::vector<std::size_t>(n, 0));
  for (const auto& e : g.edges()) {
    ++mult[e.u][e.v];
    ++mult[e.v][e.u];
  }
  for (VertexId z = 0; z < n; ++z) {
    for (VertexId x = 0; x < n; ++x) {
      for (VertexId y = x + 1; y < n; ++y) {
        if (x == z || y == z || mult[x][z] == 0 || mult[y][z] == 0) continue;
        bool closed = true;
        for (VertexId w = 0; w < n && closed; ++w) {
          if (w == x || w == y || w == z) continue;
          closed = mult[x][w] == 0 && mult[y][w] == 0;
        }
        if (closed) return Delta0Witness{x, y, z};
      }
    }
  }
  return std::nullopt;
}

RewriteTrace rewrite_delta0(const MultiGraph& g) {
  RewriteTrace trace{g, {}};
  while (auto w = find_delta0(trace.result)) {
    const auto& current = trace.result;
    bool adjacent = false;
    for (EdgeId e : current.incident_edges(w->x)) adjacent = adjacent || current.edge(e).contains(w->y);
    std::vector<Endpoints> edges(current.edges().begin(), current.edges().end());
    std::size_t vertices = current.vertex_count();
    if (!adjacent) {
      // Identify y with x and drop y, shifting later labels down.
      auto relabel = [&](VertexId v) -> VertexId {
        if (v == w->y) v = w->x;
        return v > w->y ? v - 1 : v;
      };
      for (auto& e : edges) e = Endpoints(relabel(e.u), relabel(e.v));
      --vertices;
    } else {
      for (auto& e : edges) {
        if (e == Endpoints(w->y, w->z)) e = Endpoints(w->x, w->z);
      }
    }
    trace.steps.push_back({*w, adjacent});
    trace.result = MultiGraph(vertices, std::move(edges));
  }
  return trace;
}

MultiGraph four_vertex_collapse(const MultiGraph& g) {
  if (g.vertex_count() != 4) throw std::invalid_argument("four_vertex_collapse needs four vertices");
  std::array<std::size_t, 3> side{};
  for (const auto& e : g.edges()) {
    // Matchings are named by the partner of vertex 0.
    VertexId partner = e.v;
    if (e.u != 0) {
      for (VertexId x = 1; x < 4; ++x) {
        if (!e.contains(x)) partner = x;
      }
    }
    ++side[partner - 1];
  }
  // Triangle on {0, 1, 2}; side opposite vertex k carries matching k.
  MultiGraphBuilder b(3);
  b.add_edges(1, 2, side[0]);
  b.add_edges(0, 2, side[1]);
  b.add_edges(0, 1, side[2]);
  return std::move(b).build();
}

}  // namespace lineroot::oracle
