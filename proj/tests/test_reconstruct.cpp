#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>

#include "lineroot/isomorphism.hpp"
#include "lineroot/line_graph.hpp"
#include "lineroot/oracle.hpp"
#include "lineroot/reconstruct.hpp"

using namespace lineroot;

namespace {

bool iso(const MultiGraph& a, const MultiGraph& b) { return multigraph_isomorphic(a, b).has_value(); }

const SimpleGraph p3(3, {{0, 1}, {1, 2}});
const SimpleGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
const SimpleGraph claw(4, {{0, 1}, {0, 2}, {0, 3}});
const SimpleGraph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
const MultiGraph t211(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}});
const MultiGraph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});

// Exhaustive: does any bijection of root vertices carry the edge of every
// Γ-vertex v onto the edge of phi(v)?
bool induced_by_some_vertex_map(const RootResult& a, const RootResult& b, std::span<const VertexId> phi) {
  std::vector<VertexId> sigma(a.root.vertex_count());
  std::iota(sigma.begin(), sigma.end(), 0);
  do {
    bool ok = true;
    for (VertexId v = 0; ok && v < phi.size(); ++v) {
      auto e = a.root.edge(a.vertex_to_edge[v]);
      ok = Endpoints(sigma[e.u], sigma[e.v]) == b.root.edge(b.vertex_to_edge[phi[v]]);
    }
    if (ok) return true;
  } while (std::next_permutation(sigma.begin(), sigma.end()));
  return false;
}

}  // namespace

TEST_CASE("mode names") {
  CHECK(to_string(LineMode::l1) == "l1");
  CHECK(to_string(LineMode::geq1) == "ge1");
  CHECK(parse_line_mode("ge1") == LineMode::geq1);
  CHECK(parse_line_mode("geq1") == LineMode::geq1);
  CHECK_FALSE(parse_line_mode("l2").has_value());
  CHECK(twin_kind_for(LineMode::l1) == TwinKind::false_twin);
}

TEST_CASE("path on three vertices in L1 gives the collapsed 4-vertex path") {
  auto r = reconstruct_root(p3, LineMode::l1);
  REQUIRE(r);
  CHECK(verify(p3, *r));
  CHECK(iso(r->root, MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}})));
  MultiGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(iso(r->root, oracle::four_vertex_collapse(p4)));
}

TEST_CASE("diamond in L1 gives triangle(2,1,1)") {
  auto r = reconstruct_root(diamond, LineMode::l1);
  REQUIRE(r);
  CHECK(verify(diamond, *r));
  CHECK(iso(r->root, t211));
}

TEST_CASE("K3 in L>=1 gives the 3-banana") {
  auto r = reconstruct_root(k3, LineMode::geq1);
  REQUIRE(r);
  CHECK(iso(r->root, MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})));
  CHECK(r->class_of == std::vector<std::uint32_t>{0, 0, 0});
}

TEST_CASE("claw: accepted in L1, rejected in L>=1") {
  auto l1 = reconstruct_root(claw, LineMode::l1);
  REQUIRE(l1);
  CHECK(iso(l1->root, MultiGraph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}})));
  auto ge = reconstruct_root(claw, LineMode::geq1);
  REQUIRE_FALSE(ge);
  CHECK(ge.error().kind == ErrorKind::not_line_graph);
}

TEST_CASE("single vertex and invalid inputs") {
  SimpleGraph one(1, std::initializer_list<std::pair<VertexId, VertexId>>{});
  for (auto mode : {LineMode::l1, LineMode::geq1}) {
    auto r = reconstruct_root(one, mode);
    REQUIRE(r);
    CHECK(r->root == MultiGraph(2, {{0, 1}}));
    CHECK(r->vertex_to_edge == std::vector<EdgeId>{0});
    auto empty = reconstruct_root(SimpleGraph(0, std::initializer_list<std::pair<VertexId, VertexId>>{}), mode);
    REQUIRE_FALSE(empty);
    CHECK(empty.error().kind == ErrorKind::invalid_input);
    auto split = reconstruct_root(SimpleGraph(2, std::initializer_list<std::pair<VertexId, VertexId>>{}), mode);
    REQUIRE_FALSE(split);
    CHECK(split.error().kind == ErrorKind::invalid_input);
  }
}

TEST_CASE("verify rejects corrupted results") {
  auto r = reconstruct_root(diamond, LineMode::l1);
  REQUIRE(r);

  RootResult swapped = *r;
  std::swap(swapped.vertex_to_edge[0], swapped.vertex_to_edge[1]);
  bool any_difference = false;
  for (VertexId a = 0; a < 4; ++a) {
    for (VertexId b = a + 1; b < 4; ++b) {
      auto ea = r->root.edge(swapped.vertex_to_edge[a]);
      auto eb = r->root.edge(swapped.vertex_to_edge[b]);
      any_difference = any_difference || ((shared_endpoints(ea, eb) == 1) != diamond.adjacent(a, b));
    }
  }
  CHECK(verify(diamond, swapped) == !any_difference);

  // Re-hang each root edge on every other vertex pair; compare with the
  // forward line graph transported along vertex_to_edge.
  std::size_t rejected = 0;
  for (EdgeId e = 0; e < r->root.edge_count(); ++e) {
    for (VertexId a = 0; a < 3; ++a) {
      for (VertexId b = a + 1; b < 3; ++b) {
        if (r->root.edge(e) == Endpoints(a, b)) continue;
        std::vector<Endpoints> edges(r->root.edges().begin(), r->root.edges().end());
        edges[e] = Endpoints(a, b);
        RootResult moved = *r;
        moved.root = MultiGraph(3, edges);
        auto forward = l1_line_graph(moved.root);
        bool exact = true;
        for (VertexId x = 0; x < 4; ++x) {
          for (VertexId y = x + 1; y < 4; ++y) {
            exact = exact && forward.adjacent(moved.vertex_to_edge[x], moved.vertex_to_edge[y]) ==
                                 diamond.adjacent(x, y);
          }
        }
        CHECK(verify(diamond, moved) == exact);
        rejected += exact ? 0 : 1;
      }
    }
  }
  CHECK(rejected > 0);

  RootResult wrong_mode = *r;
  wrong_mode.mode = LineMode::geq1;
  CHECK_FALSE(verify(diamond, wrong_mode));

  RootResult not_bijective = *r;
  not_bijective.vertex_to_edge[1] = not_bijective.vertex_to_edge[0];
  CHECK_FALSE(verify(diamond, not_bijective));
}

TEST_CASE("delta0 detection") {
  CHECK(is_delta0_free(MultiGraph(2, {{0, 1}, {0, 1}})));
  auto tri = find_delta0(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(tri.has_value());
  CHECK(std::set<VertexId>{tri->x, tri->y, tri->z} == std::set<VertexId>{0, 1, 2});
  CHECK(is_delta0_free(MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}})));
  auto star = find_delta0(MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}}));
  REQUIRE(star.has_value());
  CHECK(star->z == 0);
}

TEST_CASE("linear delta0 scan agrees with exhaustive search") {
  for (std::uint64_t seed = 0; seed < 2000; ++seed) {
    auto g = oracle::random_multigraph(3 + seed % 6, 2 + seed % 10, seed);
    auto w = find_delta0(g);
    CHECK(w.has_value() == oracle::brute_force_delta0(g).has_value());
    if (w) {
      CHECK(w->x != w->y);
      CHECK(w->x != w->z);
      CHECK(w->y != w->z);
      for (VertexId side : {w->x, w->y}) {
        bool touches_z = false;
        for (auto e : g.incident_edges(side)) {
          VertexId o = g.edge(e).other(side);
          CHECK((o == w->x || o == w->y || o == w->z));
          touches_z = touches_z || o == w->z;
        }
        CHECK(touches_z);
      }
    }
  }
}

TEST_CASE("delta0 collapse") {
  auto tri = delta0_collapse(MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}}));
  REQUIRE(tri);
  CHECK(iso(*tri, MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})));

  MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto s = delta0_collapse(star);
  REQUIRE(s);
  CHECK(is_delta0_free(*s));
  CHECK(simple_isomorphic(geq1_line_graph(*s), geq1_line_graph(star)).has_value());
  CHECK(iso(*s, oracle::rewrite_delta0(star).result));

  MultiGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  auto p = delta0_collapse(p4);
  REQUIRE(p);
  CHECK(iso(*p, p4));

  CHECK(delta0_collapse(MultiGraph(3, {{0, 1}})).error().kind == ErrorKind::invalid_input);
  CHECK(delta0_collapse(MultiGraph(1, {})).error().kind == ErrorKind::invalid_input);
}

TEST_CASE("delta0-free roots on four vertices need not be unique") {
  // K4 with a heavy triangle, and with the 0-1 / 2-3 matching flipped.
  MultiGraph heavy_triangle(4, {{0, 1}, {2, 3}, {2, 3}, {0, 2}, {1, 3}, {1, 3}, {0, 3}, {1, 2}, {1, 2}});
  MultiGraph heavy_star(4, {{0, 1}, {0, 1}, {2, 3}, {0, 2}, {1, 3}, {1, 3}, {0, 3}, {1, 2}, {1, 2}});
  CHECK(is_delta0_free(heavy_triangle));
  CHECK(is_delta0_free(heavy_star));
  CHECK_FALSE(iso(heavy_triangle, heavy_star));
  CHECK(simple_isomorphic(geq1_line_graph(heavy_triangle), geq1_line_graph(heavy_star)).has_value());

  // K4 minus the edge 2-3; exhaustive search sees both roots.
  MultiGraph c(4, {{0, 1}, {0, 2}, {1, 3}, {1, 3}, {0, 3}, {1, 2}, {1, 2}, {1, 2}});
  MultiGraph d(4, {{0, 1}, {0, 2}, {0, 2}, {1, 3}, {0, 3}, {1, 2}, {1, 2}, {1, 2}});
  CHECK_FALSE(iso(c, d));
  auto gamma = geq1_line_graph(c);
  CHECK(simple_isomorphic(gamma, geq1_line_graph(d)).has_value());
  auto roots = oracle::brute_force_roots(gamma, LineMode::geq1, 5);
  std::vector<MultiGraph> free;
  for (const auto& r : roots) {
    if (!oracle::brute_force_delta0(r)) free.push_back(r);
  }
  REQUIRE(free.size() == 2);
  CHECK(((iso(free[0], c) && iso(free[1], d)) || (iso(free[0], d) && iso(free[1], c))));
}

TEST_CASE("uniqueness by grouping enumerated multigraphs on their line graphs") {
  std::vector<MultiGraph> all;
  for (std::size_t n = 1; n <= 5; ++n) {
    for (auto& g : oracle::enumerate_multigraphs(n, 6, true)) all.push_back(std::move(g));
  }
  for (auto mode : {LineMode::l1, LineMode::geq1}) {
    struct Group {
      SimpleGraph gamma;
      std::size_t canonical = 0;
    };
    std::map<std::vector<std::uint64_t>, std::vector<Group>> groups;
    for (const auto& delta : all) {
      auto gamma = line_graph(delta, mode);
      if (!is_connected(gamma)) continue;
      bool canonical = mode == LineMode::l1 ? delta.vertex_count() != 4
                                            : !oracle::brute_force_delta0(delta).has_value();
      auto& bucket = groups[isomorphism_signature(gamma)];
      auto it = std::find_if(bucket.begin(), bucket.end(), [&](const Group& grp) {
        return simple_isomorphic(grp.gamma, gamma).has_value();
      });
      if (it == bucket.end()) {
        bucket.push_back({gamma, 0});
        it = bucket.end() - 1;
      }
      it->canonical += canonical ? 1 : 0;
    }
    std::size_t count = 0;
    for (const auto& [sig, bucket] : groups) {
      for (const auto& grp : bucket) {
        ++count;
        CHECK(grp.canonical == 1);
      }
    }
    CHECK(count > 50);
  }
}

TEST_CASE("generalized line graphs") {
  auto d = is_generalized_line_graph(diamond);
  REQUIRE(d);
  REQUIRE(d->has_value());
  CHECK(iso((*d)->root, paw));
  CHECK(verify(diamond, **d));
  CHECK_FALSE(satisfies_glg_conditions(t211));
  CHECK(satisfies_glg_conditions(paw));

  auto p = is_generalized_line_graph(p3);
  REQUIRE(p);
  REQUIRE(p->has_value());
  CHECK(iso((*p)->root, MultiGraph(4, {{0, 1}, {1, 2}, {2, 3}})));

  CHECK(satisfies_glg_conditions(MultiGraph(4, {{0, 1}, {0, 1}, {1, 2}, {2, 3}})));
  CHECK_FALSE(satisfies_glg_conditions(MultiGraph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}})));
  CHECK_FALSE(satisfies_glg_conditions(MultiGraph(4, {{0, 1}, {0, 1}, {0, 2}, {1, 3}})));

  auto bad = is_generalized_line_graph(SimpleGraph(2, std::initializer_list<std::pair<VertexId, VertexId>>{}));
  REQUIRE_FALSE(bad);
  CHECK(bad.error().kind == ErrorKind::invalid_input);
}

TEST_CASE("generalized line graph test agrees with exhaustive root search") {
  std::size_t glg = 0, total = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& gamma : oracle::enumerate_simple_graphs(n, true)) {
      ++total;
      auto roots = oracle::brute_force_roots(gamma, LineMode::l1, n + 1);
      bool expected = std::any_of(roots.begin(), roots.end(), satisfies_glg_conditions);
      auto r = is_generalized_line_graph(gamma);
      REQUIRE(r);
      CHECK(r->has_value() == expected);
      if (r->has_value()) {
        ++glg;
        CHECK(satisfies_glg_conditions((*r)->root));
        CHECK(verify(gamma, **r));
      }
    }
  }
  CHECK(total == 143);
  CHECK(glg > 0);
}

TEST_CASE("lifting isomorphisms of the diamond") {
  std::vector<VertexId> identity{0, 1, 2, 3};
  auto id = lift_isomorphism(diamond, diamond, identity, LineMode::l1);
  REQUIRE(id);
  CHECK(is_isomorphism(id->source.root, id->target.root, id->iso));
  std::vector<VertexId> all_v(3), all_e(4);
  std::iota(all_v.begin(), all_v.end(), 0);
  std::iota(all_e.begin(), all_e.end(), 0);
  CHECK(id->iso.vertex_map == all_v);
  CHECK(id->iso.edge_map == all_e);

  // 0 and 3 are false twins: their edges are the doubled side.
  std::vector<VertexId> swap_twins{3, 1, 2, 0};
  auto tw = lift_isomorphism(diamond, diamond, swap_twins, LineMode::l1);
  REQUIRE(tw);
  CHECK(is_isomorphism(tw->source.root, tw->target.root, tw->iso));
  CHECK(tw->iso.vertex_map == all_v);
  CHECK(tw->iso.edge_map != all_e);

  // 1 and 2 carry the two simple sides.
  std::vector<VertexId> swap_sides{0, 2, 1, 3};
  auto sw = lift_isomorphism(diamond, diamond, swap_sides, LineMode::l1);
  REQUIRE(sw);
  CHECK(is_isomorphism(sw->source.root, sw->target.root, sw->iso));
  for (VertexId v = 0; v < 4; ++v) {
    CHECK(sw->iso.edge_map[sw->source.vertex_to_edge[v]] == sw->target.vertex_to_edge[swap_sides[v]]);
  }
  CHECK(sw->iso.vertex_map != all_v);

  std::vector<VertexId> broken{1, 0, 2, 3};
  auto bad = lift_isomorphism(diamond, diamond, broken, LineMode::l1);
  REQUIRE_FALSE(bad);
  CHECK(bad.error().kind == ErrorKind::invalid_input);

  std::vector<VertexId> claw_id{0, 1, 2, 3};
  auto c = lift_isomorphism(claw, claw, claw_id, LineMode::geq1);
  REQUIRE_FALSE(c);
  CHECK(c.error().kind == ErrorKind::cannot_lift);
}

TEST_CASE("lifting planted isomorphisms between random line graphs") {
  std::mt19937_64 rng(11);
  std::size_t refused = 0, lifted_count = 0;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto delta = oracle::random_multigraph(3 + seed % 10, 12 + seed % 20, seed, {.connected = true});
    for (auto mode : {LineMode::l1, LineMode::geq1}) {
      auto gamma = line_graph(delta, mode);
      if (!is_connected(gamma)) continue;
      std::vector<VertexId> phi(gamma.vertex_count());
      std::iota(phi.begin(), phi.end(), 0);
      std::shuffle(phi.begin(), phi.end(), rng);
      std::vector<Endpoints> moved;
      for (const auto& e : gamma.edge_list()) moved.emplace_back(phi[e.u], phi[e.v]);
      SimpleGraph gamma_prime(gamma.vertex_count(), moved);
      auto lifted = lift_isomorphism(gamma, gamma_prime, phi, mode);
      INFO("seed ", seed, " mode ", to_string(mode));
      if (!lifted) {
        REQUIRE(lifted.error().kind == ErrorKind::cannot_lift);
        REQUIRE(mode == LineMode::geq1);
        auto a = reconstruct_root(gamma, mode);
        auto b = reconstruct_root(gamma_prime, mode);
        REQUIRE(a);
        REQUIRE(b);
        REQUIRE(a->root.vertex_count() == 4);
        CHECK_FALSE(induced_by_some_vertex_map(*a, *b, phi));
        ++refused;
        continue;
      }
      ++lifted_count;
      CHECK(is_isomorphism(lifted->source.root, lifted->target.root, lifted->iso));
      for (VertexId v = 0; v < phi.size(); ++v) {
        CHECK(lifted->iso.edge_map[lifted->source.vertex_to_edge[v]] == lifted->target.vertex_to_edge[phi[v]]);
      }
    }
  }
  CHECK(lifted_count > 300);
  MESSAGE("lifted ", lifted_count, ", refused ", refused);
}

TEST_CASE("canonical forms on large random inputs") {
  for (std::uint64_t seed = 0; seed < 50; ++seed) {
    auto delta = oracle::random_multigraph(30 + seed % 40, 100 + seed * 3, seed, {.connected = true});
    for (auto mode : {LineMode::l1, LineMode::geq1}) {
      auto gamma = line_graph(delta, mode);
      if (!is_connected(gamma)) continue;
      auto r = reconstruct_root(gamma, mode);
      REQUIRE(r);
      CHECK(verify(gamma, *r));
      if (mode == LineMode::l1) {
        CHECK(r->root.vertex_count() != 4);
      } else {
        CHECK(is_delta0_free(r->root));
      }
    }
  }
}
