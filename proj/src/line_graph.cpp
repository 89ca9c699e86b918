#include "lineroot/line_graph.hpp"

namespace lineroot {

namespace {

enum class Flavour { exactly_one, at_least_one };

SimpleGraph build(const MultiGraph& g, Flavour flavour) {
  std::vector<Endpoints> pairs;
  for (VertexId v = 0; v < g.vertex_count(); ++v) {
    auto bucket = g.incident_edges(v);
    for (std::size_t i = 0; i < bucket.size(); ++i) {
      const auto& ei = g.edge(bucket[i]);
      for (std::size_t j = i + 1; j < bucket.size(); ++j) {
        const auto& ej = g.edge(bucket[j]);
        if (ei == ej) {
          // Parallel pair: seen at both endpoints. L1 drops it, L>=1 keeps
          // the copy found at the smaller endpoint.
          if (flavour == Flavour::exactly_one || v != ei.u) continue;
        }
        pairs.emplace_back(bucket[i], bucket[j]);
      }
    }
  }
  return SimpleGraph(g.edge_count(), pairs);
}

}  // namespace

SimpleGraph l1_line_graph(const MultiGraph& g) { return build(g, Flavour::exactly_one); }

SimpleGraph geq1_line_graph(const MultiGraph& g) { return build(g, Flavour::at_least_one); }

}  // namespace lineroot
