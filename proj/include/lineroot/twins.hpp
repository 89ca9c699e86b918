#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lineroot/graph.hpp"

namespace lineroot {

enum class TwinKind {
  false_twin,  // same open neighbourhood, hence non-adjacent
  true_twin,   // same closed neighbourhood, hence adjacent
};

/// Maximal twin classes of a simple graph. Class indices follow first
/// appearance in vertex order, so the representative (the smallest member)
/// of class c is smaller than that of class c + 1.
class TwinPartition {
 public:
  TwinPartition(TwinKind kind, std::vector<std::uint32_t> class_of);

  TwinKind kind() const noexcept { return kind_; }
  std::size_t class_count() const noexcept { return representative_.size(); }
  std::size_t vertex_count() const noexcept { return class_of_.size(); }

  std::uint32_t class_of(VertexId v) const { return class_of_[v]; }
  std::span<const std::uint32_t> class_of() const noexcept { return class_of_; }
  VertexId representative(std::uint32_t c) const { return representative_[c]; }
  std::size_t size(std::uint32_t c) const { return offsets_[c + 1] - offsets_[c]; }
  /// Members of class c in increasing order.
  std::span<const VertexId> members(std::uint32_t c) const {
    return {members_.data() + offsets_[c], members_.data() + offsets_[c + 1]};
  }

 private:
  TwinKind kind_;
  std::vector<std::uint32_t> class_of_;
  std::vector<VertexId> representative_;
  std::vector<std::size_t> offsets_;
  std::vector<VertexId> members_;
};

/// v ~ w iff N(v) == N(w). Linear-time partition refinement.
TwinPartition false_twin_partition(const SimpleGraph& g);

/// v ~ w iff N[v] == N[w]. Linear-time partition refinement.
TwinPartition true_twin_partition(const SimpleGraph& g);

TwinPartition twin_partition(const SimpleGraph& g, TwinKind kind);

struct QuotientGraph {
  SimpleGraph graph;  // on class indices
  TwinPartition partition;
};

/// Induced subgraph on the class representatives, relabeled to class indices.
QuotientGraph quotient(const SimpleGraph& g, TwinPartition p);

}  // namespace lineroot
