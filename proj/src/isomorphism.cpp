#include "lineroot/isomorphism.hpp"

#include <algorithm>
#include <map>

namespace lineroot {

namespace {

struct Neighbor {
  VertexId vertex;
  std::uint32_t multiplicity;
  friend auto operator<=>(const Neighbor&, const Neighbor&) = default;
};

using NeighborLists = std::vector<std::vector<Neighbor>>;

NeighborLists neighbor_lists(const MultiGraph& g) {
  NeighborLists out(g.vertex_count());
  for (const auto& pc : parallel_classes(g)) {
    auto mult = static_cast<std::uint32_t>(pc.edges.size());
    out[pc.ends.u].push_back({pc.ends.v, mult});
    out[pc.ends.v].push_back({pc.ends.u, mult});
  }
  for (auto& list : out) std::sort(list.begin(), list.end());
  return out;
}

std::uint32_t multiplicity(const std::vector<Neighbor>& list, VertexId w) {
  auto it = std::lower_bound(list.begin(), list.end(), Neighbor{w, 0});
  return (it != list.end() && it->vertex == w) ? it->multiplicity : 0;
}

// Joint colour refinement: colours are comparable across the two graphs
// because they share one signature dictionary.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> refine_jointly(
    const NeighborLists& a, const NeighborLists& b) {
  const std::size_t n = a.size();
  std::vector<std::uint32_t> ca(n), cb(n);
  auto initial = [](const std::vector<Neighbor>& list) {
    std::vector<std::uint64_t> key;
    std::uint64_t degree = 0;
    for (const auto& nb : list) {
      degree += nb.multiplicity;
      key.push_back(nb.multiplicity);
    }
    std::sort(key.begin(), key.end());
    key.insert(key.begin(), degree);
    return key;
  };
  auto assign = [&](auto&& key_of) {
    std::map<std::vector<std::uint64_t>, std::uint32_t> dict;
    std::vector<std::vector<std::uint64_t>> ka(n), kb(n);
    for (std::size_t v = 0; v < n; ++v) {
      ka[v] = key_of(a, ca, v);
      kb[v] = key_of(b, cb, v);
      dict.emplace(ka[v], 0);
      dict.emplace(kb[v], 0);
    }
    std::uint32_t next = 0;
    for (auto& [key, id] : dict) id = next++;
    for (std::size_t v = 0; v < n; ++v) {
      ca[v] = dict[ka[v]];
      cb[v] = dict[kb[v]];
    }
    return dict.size();
  };
  std::size_t colours = assign([&](const NeighborLists& g, const std::vector<std::uint32_t>&,
                                   std::size_t v) { return initial(g[v]); });
  for (;;) {
    std::size_t refined =
        assign([](const NeighborLists& g, const std::vector<std::uint32_t>& colour, std::size_t v) {
          std::vector<std::uint64_t> key;
          key.reserve(g[v].size() + 1);
          for (const auto& nb : g[v]) {
            key.push_back((std::uint64_t{colour[nb.vertex]} << 32) | nb.multiplicity);
          }
          std::sort(key.begin(), key.end());
          key.insert(key.begin(), colour[v]);
          return key;
        });
    if (refined == colours) break;
    colours = refined;
  }
  return {std::move(ca), std::move(cb)};
}

class Matcher {
 public:
  Matcher(const NeighborLists& a, const NeighborLists& b, std::vector<std::uint32_t> ca,
          std::vector<std::uint32_t> cb)
      : a_(a), b_(b), ca_(std::move(ca)), cb_(std::move(cb)),
        map_(a.size(), UINT32_MAX), inverse_(a.size(), UINT32_MAX) {
    build_order();
  }

  std::optional<std::vector<VertexId>> run() {
    if (search(0)) return map_;
    return std::nullopt;
  }

 private:
  void build_order() {
    const std::size_t n = a_.size();
    std::vector<std::size_t> class_size(n + 1, 0);
    for (auto c : ca_) ++class_size[c];
    std::vector<char> placed(n, 0);
    std::vector<std::size_t> mapped_neighbors(n, 0);
    for (std::size_t step = 0; step < n; ++step) {
      std::size_t best = n;
      for (std::size_t v = 0; v < n; ++v) {
        if (placed[v]) continue;
        if (best == n || mapped_neighbors[v] > mapped_neighbors[best] ||
            (mapped_neighbors[v] == mapped_neighbors[best] &&
             class_size[ca_[v]] < class_size[ca_[best]])) {
          best = v;
        }
      }
      placed[best] = 1;
      order_.push_back(static_cast<VertexId>(best));
      for (const auto& nb : a_[best]) ++mapped_neighbors[nb.vertex];
    }
  }

  bool consistent(VertexId v, VertexId w) const {
    std::size_t mapped_a = 0;
    for (const auto& nb : a_[v]) {
      if (map_[nb.vertex] == UINT32_MAX) continue;
      ++mapped_a;
      if (multiplicity(b_[w], map_[nb.vertex]) != nb.multiplicity) return false;
    }
    std::size_t mapped_b = 0;
    for (const auto& nb : b_[w]) mapped_b += (inverse_[nb.vertex] != UINT32_MAX);
    return mapped_a == mapped_b;
  }

  bool search(std::size_t depth) {
    if (depth == order_.size()) return true;
    VertexId v = order_[depth];
    for (VertexId w = 0; w < b_.size(); ++w) {
      if (inverse_[w] != UINT32_MAX || cb_[w] != ca_[v] || !consistent(v, w)) continue;
      map_[v] = w;
      inverse_[w] = v;
      if (search(depth + 1)) return true;
      map_[v] = UINT32_MAX;
      inverse_[w] = UINT32_MAX;
    }
    return false;
  }

  const NeighborLists& a_;
  const NeighborLists& b_;
  std::vector<std::uint32_t> ca_, cb_;
  std::vector<VertexId> order_;
  std::vector<VertexId> map_, inverse_;
};

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::uint64_t hash_sequence(std::uint64_t seed, const std::vector<std::uint64_t>& values) {
  std::uint64_t h = mix(seed);
  for (auto v : values) h = mix(h ^ v);
  return h;
}

}  // namespace

std::optional<MultiGraphIsomorphism> multigraph_isomorphic(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) {
    return std::nullopt;
  }
  auto la = neighbor_lists(a);
  auto lb = neighbor_lists(b);
  auto [ca, cb] = refine_jointly(la, lb);
  {
    auto sa = ca, sb = cb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  auto vertex_map = Matcher(la, lb, std::move(ca), std::move(cb)).run();
  if (!vertex_map) return std::nullopt;

  MultiGraphIsomorphism iso;
  iso.vertex_map = std::move(*vertex_map);
  std::map<Endpoints, std::vector<EdgeId>> pool;
  for (EdgeId f = 0; f < b.edge_count(); ++f) pool[b.edge(f)].push_back(f);
  std::map<Endpoints, std::size_t> used;
  iso.edge_map.resize(a.edge_count());
  for (EdgeId e = 0; e < a.edge_count(); ++e) {
    Endpoints image(iso.vertex_map[a.edge(e).u], iso.vertex_map[a.edge(e).v]);
    iso.edge_map[e] = pool[image][used[image]++];
  }
  return iso;
}

std::optional<std::vector<VertexId>> simple_isomorphic(const SimpleGraph& a, const SimpleGraph& b) {
  auto iso = multigraph_isomorphic(as_multigraph(a), as_multigraph(b));
  if (!iso) return std::nullopt;
  return std::move(iso->vertex_map);
}

std::vector<std::uint64_t> isomorphism_signature(const MultiGraph& g) {
  auto lists = neighbor_lists(g);
  const std::size_t n = g.vertex_count();
  std::vector<std::uint64_t> colour(n);
  for (std::size_t v = 0; v < n; ++v) {
    std::vector<std::uint64_t> key;
    for (const auto& nb : lists[v]) key.push_back(nb.multiplicity);
    std::sort(key.begin(), key.end());
    colour[v] = hash_sequence(g.degree(static_cast<VertexId>(v)), key);
  }
  for (int round = 0; round < 2; ++round) {
    std::vector<std::uint64_t> next(n);
    for (std::size_t v = 0; v < n; ++v) {
      std::vector<std::uint64_t> key;
      for (const auto& nb : lists[v]) key.push_back(mix(colour[nb.vertex] + nb.multiplicity));
      std::sort(key.begin(), key.end());
      next[v] = hash_sequence(colour[v], key);
    }
    colour = std::move(next);
  }
  std::sort(colour.begin(), colour.end());
  colour.insert(colour.begin(), {n, g.edge_count()});
  return colour;
}

std::vector<std::uint64_t> isomorphism_signature(const SimpleGraph& g) {
  return isomorphism_signature(as_multigraph(g));
}

}  // namespace lineroot
