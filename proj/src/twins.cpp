#include "lineroot/twins.hpp"

#include <stdexcept>

namespace lineroot {

TwinPartition::TwinPartition(TwinKind kind, std::vector<std::uint32_t> class_of)
    : kind_(kind), class_of_(std::move(class_of)) {
  std::size_t classes = 0;
  for (auto c : class_of_) classes = std::max<std::size_t>(classes, c + 1);
  representative_.assign(classes, UINT32_MAX);
  offsets_.assign(classes + 1, 0);
  for (VertexId v = 0; v < class_of_.size(); ++v) {
    auto c = class_of_[v];
    if (representative_[c] == UINT32_MAX) representative_[c] = v;
    ++offsets_[c + 1];
  }
  for (std::size_t c = 0; c < classes; ++c) {
    if (representative_[c] == UINT32_MAX) throw std::invalid_argument("empty twin class");
    offsets_[c + 1] += offsets_[c];
  }
  members_.resize(class_of_.size());
  std::vector<std::size_t> cursor(offsets_.begin(), offsets_.end() - 1);
  for (VertexId v = 0; v < class_of_.size(); ++v) members_[cursor[class_of_[v]]++] = v;
}

namespace {

// Partition refinement over an array of vertices in which every class is a
// contiguous block. Refining by a pivot set S moves the members of S to the
// front of their blocks and splits off the moved prefix. Each pivot costs
// O(|S|), and the pivots are the (open or closed) neighbourhoods of all
// vertices, so the whole pass is O(|V| + |E|).
class Refiner {
 public:
  explicit Refiner(std::size_t n) : order_(n), slot_(n) {
    for (VertexId v = 0; v < n; ++v) {
      order_[v] = v;
      slot_[v] = {v, 0};
    }
    if (n > 0) blocks_.push_back({0, static_cast<std::uint32_t>(n), 0});
    if (n == 1) slot_[0].position = kSettled;
  }

  template <typename Range>
  void refine(const Range& pivot) {
    touched_.clear();
    for (VertexId v : pivot) {
      auto& slot = slot_[v];
      // A vertex alone in its block never moves again.
      if (slot.position == kSettled) continue;
      auto& block = blocks_[slot.block];
      if (block.marked == 0) touched_.push_back(slot.block);
      // Swap v to the end of the marked prefix of its block.
      std::uint32_t target = block.begin + block.marked;
      VertexId displaced = order_[target];
      slot_[displaced].position = slot.position;
      order_[slot.position] = displaced;
      order_[target] = v;
      slot.position = target;
      ++block.marked;
    }
    for (auto b : touched_) {
      auto& block = blocks_[b];
      if (block.marked < block.end - block.begin) {
        Block split{block.begin, block.begin + block.marked, 0};
        block.begin += block.marked;
        auto id = static_cast<std::uint32_t>(blocks_.size());
        for (std::uint32_t i = split.begin; i < split.end; ++i) slot_[order_[i]].block = id;
        if (split.end - split.begin == 1) slot_[order_[split.begin]].position = kSettled;
        if (block.end - block.begin == 1) slot_[order_[block.begin]].position = kSettled;
        blocks_.push_back(split);
      }
      blocks_[b].marked = 0;
    }
  }

  /// Classes renumbered by first appearance in vertex order.
  std::vector<std::uint32_t> labels() const {
    std::vector<std::uint32_t> renumber(blocks_.size(), UINT32_MAX);
    std::vector<std::uint32_t> out(slot_.size());
    std::uint32_t next = 0;
    for (VertexId v = 0; v < slot_.size(); ++v) {
      auto& r = renumber[slot_[v].block];
      if (r == UINT32_MAX) r = next++;
      out[v] = r;
    }
    return out;
  }

 private:
  static constexpr std::uint32_t kSettled = UINT32_MAX;

  struct Block {
    std::uint32_t begin;
    std::uint32_t end;
    std::uint32_t marked;
  };
  struct Slot {
    std::uint32_t position;
    std::uint32_t block;
  };

  std::vector<VertexId> order_;
  std::vector<Slot> slot_;
  std::vector<Block> blocks_;
  std::vector<std::uint32_t> touched_;
};

// A neighbour list followed by the vertex itself.
struct ClosedNeighborhood {
  std::span<const VertexId> open;
  VertexId self;

  struct iterator {
    const ClosedNeighborhood* owner;
    std::size_t i;
    VertexId operator*() const { return i < owner->open.size() ? owner->open[i] : owner->self; }
    iterator& operator++() {
      ++i;
      return *this;
    }
    bool operator!=(const iterator& o) const { return i != o.i; }
  };
  iterator begin() const { return {this, 0}; }
  iterator end() const { return {this, open.size() + 1}; }
};

}  // namespace

TwinPartition false_twin_partition(const SimpleGraph& g) {
  Refiner refiner(g.vertex_count());
  for (VertexId x = 0; x < g.vertex_count(); ++x) refiner.refine(g.neighbors(x));
  return TwinPartition(TwinKind::false_twin, refiner.labels());
}

TwinPartition true_twin_partition(const SimpleGraph& g) {
  Refiner refiner(g.vertex_count());
  for (VertexId x = 0; x < g.vertex_count(); ++x) {
    refiner.refine(ClosedNeighborhood{g.neighbors(x), x});
  }
  return TwinPartition(TwinKind::true_twin, refiner.labels());
}

TwinPartition twin_partition(const SimpleGraph& g, TwinKind kind) {
  return kind == TwinKind::false_twin ? false_twin_partition(g) : true_twin_partition(g);
}

QuotientGraph quotient(const SimpleGraph& g, TwinPartition p) {
  if (p.vertex_count() != g.vertex_count()) {
    throw std::invalid_argument("twin partition does not match the graph");
  }
  // Twin classes have uniform adjacency, so representative-to-representative
  // edges carry the whole quotient. Representatives increase with the class
  // index, so each list comes out sorted.
  std::vector<std::uint32_t> class_if_rep(g.vertex_count(), UINT32_MAX);
  for (std::uint32_t c = 0; c < p.class_count(); ++c) class_if_rep[p.representative(c)] = c;
  std::vector<std::size_t> offsets(p.class_count() + 1, 0);
  std::vector<VertexId> adjacency;
  adjacency.reserve(2 * g.edge_count());
  for (std::uint32_t c = 0; c < p.class_count(); ++c) {
    for (VertexId w : g.neighbors(p.representative(c))) {
      if (auto d = class_if_rep[w]; d != UINT32_MAX) adjacency.push_back(d);
    }
    offsets[c + 1] = adjacency.size();
  }
  auto graph = SimpleGraph::from_sorted_adjacency(std::move(offsets), std::move(adjacency));
  return {std::move(graph), std::move(p)};
}

}  // namespace lineroot
