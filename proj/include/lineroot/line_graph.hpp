#pragma once

// Forward construction of the two line-graph flavours of a multigraph. The
// vertices of the result are the EdgeIds of the input.
//
// Both routines bucket edges by endpoint and emit the pairs inside each
// bucket, so they cost O(sum of squared degrees). They sit on the oracle side
// of the library; recognition never calls them on its hot path.

#include "lineroot/graph.hpp"

namespace lineroot {

/// Edges adjacent iff they share exactly one endpoint (parallel edges are not
/// adjacent).
SimpleGraph l1_line_graph(const MultiGraph& g);

/// Edges adjacent iff they share at least one endpoint.
SimpleGraph geq1_line_graph(const MultiGraph& g);

}  // namespace lineroot
