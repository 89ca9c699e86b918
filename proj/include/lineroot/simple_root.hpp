#pragma once

// Root reconstruction for ordinary line graphs (Whitney's setting): find a
// simple graph H with L(H) = Γ together with the vertex-to-edge map.

#include <array>
#include <cstdint>
#include <vector>

#include "lineroot/expected.hpp"
#include "lineroot/graph.hpp"

namespace lineroot {

/// Which root to return for Γ = K3, the one connected graph with two
/// non-isomorphic roots.
enum class K3Policy { triangle, star };

/// Edge-disjoint cliques covering every edge of Γ, each vertex in exactly two
/// cells (a vertex with no neighbours on one side gets a private singleton).
struct KrauszCover {
  std::vector<std::vector<VertexId>> cells;
  std::vector<std::array<std::uint32_t, 2>> cell_pair_of;  // sorted pair per Γ-vertex
};

struct SimpleRootResult {
  SimpleGraph root;                    // vertices are cells
  std::vector<Endpoints> vertex_to_edge;  // Γ-vertex -> root edge
  KrauszCover cover;
};

/// Reconstructs the root of a connected simple graph.
///
/// The edge from vertex 0 to its smallest neighbour lies in exactly one cell,
/// and that cell is pinned down by the common neighbourhood of the two
/// endpoints up to at most two candidates. From a correct seed cell every
/// other cell is forced: a vertex u already in cell C has second cell
/// {u} ∪ (N(u) \ C). Each candidate is propagated and the resulting cover is
/// checked in full (cliques, two cells per vertex, distinct cell pairs, edge
/// count), so the whole procedure is O(|V| + |E|).
///
/// Cells are numbered in discovery order; root vertex labels equal cell
/// indices. Fails with ErrorKind::not_line_graph when no cover exists and
/// ErrorKind::invalid_input when Γ is empty or disconnected.
Expected<SimpleRootResult> simple_line_graph_root(const SimpleGraph& gamma,
                                                  K3Policy k3_policy = K3Policy::triangle);

/// Independent check of the four cover invariants against Γ.
bool is_valid_krausz_cover(const SimpleGraph& gamma, const KrauszCover& cover);

}  // namespace lineroot
