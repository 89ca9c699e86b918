#pragma once

// Desk-scale isomorphism tests: colour refinement followed by backtracking.
// Exponential in the worst case; intended for oracles and tests.

#include <cstdint>
#include <optional>
#include <vector>

#include "lineroot/graph.hpp"

namespace lineroot {

/// A witness isomorphism from `a` to `b`, or nullopt when none exists.
std::optional<MultiGraphIsomorphism> multigraph_isomorphic(const MultiGraph& a, const MultiGraph& b);

/// Vertex bijection a -> b preserving adjacency, or nullopt.
std::optional<std::vector<VertexId>> simple_isomorphic(const SimpleGraph& a, const SimpleGraph& b);

/// Label-independent fingerprint: isomorphic graphs always get equal
/// signatures. Used to bucket candidates before pairwise tests.
std::vector<std::uint64_t> isomorphism_signature(const MultiGraph& g);
std::vector<std::uint64_t> isomorphism_signature(const SimpleGraph& g);

}  // namespace lineroot
