#include "lineroot/simple_root.hpp"

#include <algorithm>

namespace lineroot {

namespace {

constexpr std::uint32_t kNone = UINT32_MAX;

class CoverBuilder {
 public:
  explicit CoverBuilder(const SimpleGraph& g)
      : g_(g), state_(g.vertex_count()) {}

  /// Propagates from the seed cell; true iff a complete, valid cover results.
  bool run(std::vector<VertexId> seed) {
    if (!add_cell(std::move(seed))) return false;
    std::vector<VertexId> next;
    for (std::size_t ci = 0; ci < cells_.size(); ++ci) {
      for (std::size_t k = 0; k < cells_[ci].size(); ++k) {
        VertexId u = cells_[ci][k];
        if (state_[u].slot[1] != kNone) continue;
        // u's other cell: u together with its neighbours outside this cell,
        // kept in increasing order.
        next.clear();
        bool placed = false;
        for (VertexId w : g_.neighbors(u)) {
          const auto& slot = state_[w].slot;
          if (slot[0] == ci || slot[1] == ci) continue;
          if (!placed && u < w) {
            next.push_back(u);
            placed = true;
          }
          next.push_back(w);
        }
        if (!placed) next.push_back(u);
        if (!add_cell(next)) return false;
      }
    }
    return finish();
  }

  KrauszCover take() && {
    KrauszCover cover;
    cover.cells = std::move(cells_);
    cover.cell_pair_of.resize(state_.size());
    for (std::size_t v = 0; v < state_.size(); ++v) {
      auto [a, b] = state_[v].slot;
      cover.cell_pair_of[v] = {std::min(a, b), std::max(a, b)};
    }
    return cover;
  }

 private:
  bool add_cell(const std::vector<VertexId>& members) {
    auto id = static_cast<std::uint32_t>(cells_.size());
    for (VertexId w : members) {
      auto& st = state_[w];
      if (st.slot[1] != kNone) return false;
      (st.slot[0] == kNone ? st.slot[0] : st.slot[1]) = id;
    }
    cells_.push_back(members);
    return true;
  }

  // Cells are not checked for cliques while they are built. Once every vertex
  // has two distinct cells and no two vertices share both, cells meet in at
  // most one vertex, so the within-cell pairs are distinct. If every edge lies
  // inside a cell and the pair count equals the edge count, each cell is a
  // clique and the cover is exact.
  bool finish() {
    std::size_t covered_edges = 0;
    for (const auto& cell : cells_) covered_edges += cell.size() * (cell.size() - 1) / 2;
    if (covered_edges != g_.edge_count()) return false;

    // No two vertices may sit in the same pair of cells.
    std::vector<std::vector<std::uint32_t>> partner(cells_.size());
    for (const auto& st : state_) {
      const auto& slot = st.slot;
      if (slot[0] == kNone || slot[1] == kNone) return false;
      partner[std::min(slot[0], slot[1])].push_back(std::max(slot[0], slot[1]));
    }
    std::vector<std::uint32_t> seen(cells_.size(), kNone);
    for (std::uint32_t c = 0; c < partner.size(); ++c) {
      for (auto d : partner[c]) {
        if (seen[d] == c) return false;
        seen[d] = c;
      }
    }

    for (VertexId u = 0; u < state_.size(); ++u) {
      auto [a, b] = state_[u].slot;
      for (VertexId w : g_.neighbors(u)) {
        if (w < u) continue;
        auto [c, d] = state_[w].slot;
        if (a != c && a != d && b != c && b != d) return false;
      }
    }
    return true;
  }

  struct VertexState {
    std::array<std::uint32_t, 2> slot{kNone, kNone};
  };

  const SimpleGraph& g_;
  std::vector<VertexState> state_;
  std::vector<std::vector<VertexId>> cells_;
};

// Candidate cells for the seed edge {s, t}. The common neighbours of s and t
// are the other members of the cell plus at most one vertex that closes a
// triangle in the root; that vertex is adjacent to no other cell member.
std::vector<std::vector<VertexId>> seed_candidates(const SimpleGraph& g, VertexId s, VertexId t,
                                                   K3Policy policy) {
  std::vector<char> near_s(g.vertex_count(), 0);
  for (VertexId w : g.neighbors(s)) near_s[w] = 1;
  std::vector<VertexId> common;
  for (VertexId w : g.neighbors(t)) {
    if (near_s[w]) common.push_back(w);
  }

  auto with = [&](std::vector<VertexId> extra) {
    extra.push_back(s);
    extra.push_back(t);
    std::sort(extra.begin(), extra.end());
    return extra;
  };

  switch (common.size()) {
    case 0:
      return {with({})};
    case 1: {
      std::vector<std::vector<VertexId>> out{with({}), with({common[0]})};
      if (policy == K3Policy::star) std::swap(out[0], out[1]);
      return out;
    }
    case 2:
      if (g.adjacent(common[0], common[1])) return {with(common)};
      return {with({common[0]}), with({common[1]})};
    default:
      break;
  }

  std::vector<char> in_common(g.vertex_count(), 0);
  for (VertexId w : common) in_common[w] = 1;
  std::vector<VertexId> isolated;
  for (VertexId w : common) {
    bool any = false;
    for (VertexId x : g.neighbors(w)) {
      if (in_common[x]) {
        any = true;
        break;
      }
    }
    if (!any) isolated.push_back(w);
  }
  if (isolated.empty()) return {with(common)};
  if (isolated.size() > 1) return {};
  std::erase(common, isolated.front());
  return {with(std::move(common))};
}

SimpleRootResult assemble(KrauszCover cover) {
  std::vector<Endpoints> edges;
  edges.reserve(cover.cell_pair_of.size());
  for (const auto& pair : cover.cell_pair_of) edges.emplace_back(pair[0], pair[1]);
  SimpleRootResult out{SimpleGraph(cover.cells.size(), edges), edges, std::move(cover)};
  return out;
}

}  // namespace

Expected<SimpleRootResult> simple_line_graph_root(const SimpleGraph& gamma, K3Policy k3_policy) {
  if (gamma.vertex_count() == 0) return Failure{ErrorKind::invalid_input, "graph has no vertices"};
  if (gamma.vertex_count() == 1) {
    return assemble(KrauszCover{{{0}, {0}}, {{0, 1}}});
  }

  // A complete cover reaches every vertex from the seed, so success implies
  // connectivity; the traversal is only needed to classify a failure.
  if (gamma.degree(0) == 0) return Failure{ErrorKind::invalid_input, "graph is not connected"};
  const VertexId s = 0;
  const VertexId t = gamma.neighbors(s).front();
  for (auto& seed : seed_candidates(gamma, s, t, k3_policy)) {
    CoverBuilder builder(gamma);
    if (builder.run(std::move(seed))) return assemble(std::move(builder).take());
  }
  if (!is_connected(gamma)) return Failure{ErrorKind::invalid_input, "graph is not connected"};
  return Failure{ErrorKind::not_line_graph, "no clique partition with two cells per vertex exists"};
}

bool is_valid_krausz_cover(const SimpleGraph& gamma, const KrauszCover& cover) {
  const std::size_t n = gamma.vertex_count();
  if (cover.cell_pair_of.size() != n) return false;
  std::vector<std::vector<std::uint32_t>> cells_of(n);
  for (std::uint32_t c = 0; c < cover.cells.size(); ++c) {
    const auto& cell = cover.cells[c];
    if (cell.empty()) return false;
    for (std::size_t i = 0; i < cell.size(); ++i) {
      if (cell[i] >= n) return false;
      cells_of[cell[i]].push_back(c);
      for (std::size_t j = i + 1; j < cell.size(); ++j) {
        if (!gamma.adjacent(cell[i], cell[j])) return false;
      }
    }
  }
  std::vector<std::array<std::uint32_t, 2>> pairs;
  for (VertexId v = 0; v < n; ++v) {
    if (cells_of[v].size() != 2 || cells_of[v][0] == cells_of[v][1]) return false;
    std::array<std::uint32_t, 2> pair{std::min(cells_of[v][0], cells_of[v][1]),
                                      std::max(cells_of[v][0], cells_of[v][1])};
    if (pair != cover.cell_pair_of[v]) return false;
    pairs.push_back(pair);
  }
  std::sort(pairs.begin(), pairs.end());
  if (std::adjacent_find(pairs.begin(), pairs.end()) != pairs.end()) return false;
  for (const auto& e : gamma.edge_list()) {
    int shared = 0;
    for (auto a : cells_of[e.u]) {
      for (auto b : cells_of[e.v]) shared += (a == b);
    }
    if (shared != 1) return false;
  }
  return true;
}

}  // namespace lineroot
