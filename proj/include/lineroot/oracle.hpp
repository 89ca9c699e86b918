#pragma once

// Brute-force oracles and seeded generators backing the test and acceptance
// suites. Everything here is exponential or sampling-based and independent of
// the reconstruction pipeline, except where noted.

#include <cstdint>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "lineroot/graph.hpp"
#include "lineroot/reconstruct.hpp"

namespace lineroot::oracle {

class BudgetExceeded : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class ConstraintUnsatisfiable : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// One representative per isomorphism class of multigraphs on exactly
/// `vertices` vertices with at most `max_edges` edges. Budget: vertices <= 6,
/// max_edges <= 7.
std::vector<MultiGraph> enumerate_multigraphs(std::size_t vertices, std::size_t max_edges,
                                              bool connected_only);

/// One representative per isomorphism class of simple graphs on exactly
/// `vertices` vertices. Budget: vertices <= 6.
std::vector<SimpleGraph> enumerate_simple_graphs(std::size_t vertices, bool connected_only);

/// Portable uniform draw in [0, bound) on top of mt19937_64.
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound);

struct RandomConstraints {
  bool connected = false;
  bool delta0_free = false;
};

/// Deterministic for a given (n, m, seed, constraints). Connected graphs start
/// from a random spanning tree; the remaining edges (parallel ones included)
/// are uniform over vertex pairs. Constraints are met by rejection sampling.
/// Throws std::invalid_argument when n < 2 or a connected graph needs more
/// than m edges, ConstraintUnsatisfiable when the retry budget runs out.
MultiGraph random_multigraph(std::size_t n, std::size_t m, std::uint64_t seed,
                             RandomConstraints constraints = {});

/// G(n, p) with the same portable RNG.
SimpleGraph random_simple_graph(std::size_t n, double edge_probability, std::uint64_t seed);

/// Every multigraph (up to isomorphism, no isolated vertices, at most
/// `max_vertices` vertices) whose mode line graph is isomorphic to Γ, found by
/// backtracking over endpoint assignments. Budget: |V(Γ)| <= 8,
/// max_vertices <= 9.
std::vector<MultiGraph> brute_force_roots(const SimpleGraph& gamma, LineMode mode,
                                          std::size_t max_vertices);

/// Exhaustive triple search for a Δ0 subgraph; O(n^3), oracle use only.
std::optional<Delta0Witness> brute_force_delta0(const MultiGraph& g);

struct RewriteStep {
  Delta0Witness witness;
  bool adjacent;  // x and y joined: y's edges to z move to x, y becomes a pendant of x
};

struct RewriteTrace {
  MultiGraph result;
  std::vector<RewriteStep> steps;
};

/// Δ0 removal by local moves until none remains: non-adjacent x, y are
/// merged; adjacent x, y are merged with the x-y edges re-hung on a fresh
/// pendant vertex. Each move keeps the >=1-line graph and removes either a
/// vertex or a triangle of the underlying simple graph, so it terminates.
RewriteTrace rewrite_delta0(const MultiGraph& g);

/// The triangle whose sides carry the edge totals of the three perfect
/// matchings of a 4-vertex multigraph: the canonical 1-line root of any
/// connected 4-vertex multigraph.
MultiGraph four_vertex_collapse(const MultiGraph& g);

}  // namespace lineroot::oracle
