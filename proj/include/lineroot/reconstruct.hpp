#pragma once

// Recognition of 1-line and >=1-line graphs of multigraphs and reconstruction
// of their canonical roots.
//
// Pipeline for a connected Γ:
//   1. twin partition (false twins for L1, true twins for L>=1),
//   2. quotient on the classes,
//   3. simple root of the quotient (triangle chosen for K3),
//   4. one root edge per Γ-vertex, parallel to the simple-root edge of its class.
//
// The lifted root never has exactly four vertices (L1) and is always
// Δ0-free (L>=1); both facts are asserted after every reconstruction.

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "lineroot/expected.hpp"
#include "lineroot/graph.hpp"
#include "lineroot/twins.hpp"

namespace lineroot {

enum class LineMode { l1, geq1 };

std::string_view to_string(LineMode mode) noexcept;  // "l1" / "ge1"
std::optional<LineMode> parse_line_mode(std::string_view text) noexcept;

TwinKind twin_kind_for(LineMode mode) noexcept;

/// The mode's line graph of g.
SimpleGraph line_graph(const MultiGraph& g, LineMode mode);

struct RootResult {
  LineMode mode = LineMode::l1;
  MultiGraph root;
  std::vector<EdgeId> vertex_to_edge;  // Γ-vertex -> root edge, a bijection
  std::vector<std::uint32_t> class_of;  // Γ-vertex -> twin class (provenance)
};

/// Full pipeline. Errors: invalid_input (empty or disconnected Γ),
/// not_line_graph (the quotient has no simple root).
Expected<RootResult> reconstruct_root(const SimpleGraph& gamma, LineMode mode);

/// True iff the mode's line graph of r.root, transported along
/// r.vertex_to_edge, is exactly Γ.
bool verify(const SimpleGraph& gamma, const RootResult& r);

/// x - z - y with at least one edge on {x,z} and on {y,z}, and no edge from x
/// or y leaving {x, y, z}. Edges on {x, y} are allowed.
struct Delta0Witness {
  VertexId x;
  VertexId y;
  VertexId z;
};

/// Linear scan: only vertices with at most two distinct neighbours can play x or y.
std::optional<Delta0Witness> find_delta0(const MultiGraph& g);
inline bool is_delta0_free(const MultiGraph& g) { return !find_delta0(g).has_value(); }

/// A Δ0-free multigraph with the same >=1-line graph as g, computed through
/// the reconstruction pipeline. It is unique up to isomorphism except when
/// the result has four vertices and its underlying simple graph is K4 or K4
/// minus an edge. There, swapping the multiplicities of the two edges of one
/// perfect matching keeps the >=1-line graph (disjoint edges are exactly the
/// non-adjacent pairs) but can change the isomorphism type, and both
/// versions are Δ0-free.
///
/// Error: invalid_input when g is disconnected or has no edges.
Expected<MultiGraph> delta0_collapse(const MultiGraph& g);

/// Conditions on a 1-line-graph root that make its line graph a generalized
/// line graph: no parallel class larger than two, and every doubled pair has
/// an endpoint lying on no other edge.
bool satisfies_glg_conditions(const MultiGraph& g);

/// A root Δ with L1(Δ) ≅ Γ meeting the generalized-line-graph conditions,
/// or nullopt when no root does. Among qualifying roots the one with the
/// fewest parallel edges is returned, so a simple line graph gets its simple
/// root.
///
/// The canonical L1 root is tried first. When it has three vertices, Γ also
/// has 4-vertex roots: every way of spreading each triangle side over the two
/// edges of a perfect matching of K4 gives the same 1-line graph. Those are
/// tried in a fixed order, because one of them can satisfy the conditions
/// when the triangle does not (the diamond: the triangle with a doubled side
/// fails, the paw succeeds). Checking twin class sizes alone is not enough
/// for the same reason: the claw has a false-twin class of size three, yet
/// the 4-vertex root "doubled edge, then a path of length two" qualifies.
///
/// Error: invalid_input when Γ is empty or disconnected.
Expected<std::optional<RootResult>> is_generalized_line_graph(const SimpleGraph& gamma);

struct LiftedIsomorphism {
  RootResult source;
  RootResult target;
  MultiGraphIsomorphism iso;  // source.root -> target.root
};

/// Lifts a graph isomorphism phi: Γ -> Γ' to the canonical roots. The edge
/// map transports phi along both vertex_to_edge maps; the vertex map is read
/// off shared endpoints. Errors: invalid_input (phi is not an isomorphism,
/// or either graph is empty/disconnected), cannot_lift (either side is not a
/// line graph, or no root isomorphism induces phi). The last case occurs in
/// L>=1 mode when the root has four vertices and its underlying simple graph
/// is K4, K4 minus an edge, or a triangle with a pendant edge: their simple
/// line graphs have automorphisms that no vertex map induces.
Expected<LiftedIsomorphism> lift_isomorphism(const SimpleGraph& gamma, const SimpleGraph& gamma_prime,
                                             std::span<const VertexId> phi, LineMode mode);

}  // namespace lineroot
