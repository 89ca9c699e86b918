#include <doctest.h>

#include <algorithm>

#include "lineroot/isomorphism.hpp"
#include "lineroot/line_graph.hpp"
#include "lineroot/oracle.hpp"

using namespace lineroot;
using namespace lineroot::oracle;

namespace {

bool iso(const MultiGraph& a, const MultiGraph& b) { return multigraph_isomorphic(a, b).has_value(); }

bool contains(const std::vector<MultiGraph>& list, const MultiGraph& g) {
  return std::any_of(list.begin(), list.end(), [&](const MultiGraph& h) { return iso(g, h); });
}

const SimpleGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});

}  // namespace

TEST_CASE("enumeration counts") {
  CHECK(enumerate_multigraphs(2, 3, true).size() == 3);
  CHECK(enumerate_multigraphs(1, 0, false).size() == 1);
  CHECK(enumerate_multigraphs(1, 0, true).size() == 1);
  CHECK(enumerate_multigraphs(3, 2, true).size() == 1);
  // 0, 1 or 2 edges on 3 vertices: empty, one edge, a double edge, a path.
  CHECK(enumerate_multigraphs(3, 2, false).size() == 4);
  CHECK(enumerate_simple_graphs(4, false).size() == 11);
  CHECK(enumerate_simple_graphs(6, true).size() == 112);
  CHECK_THROWS_AS(enumerate_multigraphs(7, 3, true), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_multigraphs(3, 8, true), BudgetExceeded);
  CHECK_THROWS_AS(enumerate_simple_graphs(7, true), BudgetExceeded);
}

TEST_CASE("enumerated multigraphs are distinct and complete") {
  auto list = enumerate_multigraphs(4, 5, true);
  for (std::size_t i = 0; i < list.size(); ++i) {
    CHECK(is_connected(list[i]));
    CHECK(list[i].edge_count() <= 5);
    for (std::size_t j = i + 1; j < list.size(); ++j) CHECK_FALSE(iso(list[i], list[j]));
  }
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    auto g = random_multigraph(4, 3 + seed % 3, seed, {.connected = true});
    CHECK(contains(list, g));
  }
}

TEST_CASE("generator") {
  auto a = random_multigraph(4, 6, 1, {.connected = true});
  auto b = random_multigraph(4, 6, 1, {.connected = true});
  CHECK(a == b);
  CHECK(is_connected(a));
  CHECK(random_multigraph(2, 5, 99) == MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}, {0, 1}, {0, 1}}));
  auto d = random_multigraph(3, 3, 4, {.delta0_free = true});
  CHECK(d.edge_count() == 3);
  CHECK_FALSE(brute_force_delta0(d).has_value());
  CHECK_THROWS_AS(random_multigraph(3, 3, 4, {.connected = true, .delta0_free = true}), ConstraintUnsatisfiable);
  CHECK_THROWS_AS(random_multigraph(1, 0, 0), std::invalid_argument);
  CHECK_THROWS_AS(random_multigraph(5, 3, 0, {.connected = true}), std::invalid_argument);
}

TEST_CASE("uniform_below stays in range and is reproducible") {
  std::mt19937_64 r1(5), r2(5);
  for (int i = 0; i < 1000; ++i) {
    auto x = uniform_below(r1, 7);
    CHECK(x < 7);
    CHECK(x == uniform_below(r2, 7));
  }
}

TEST_CASE("root search for K3") {
  auto l1 = brute_force_roots(k3, LineMode::l1, 4);
  CHECK(l1.size() == 2);
  CHECK(contains(l1, MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(contains(l1, MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}})));

  auto ge = brute_force_roots(k3, LineMode::geq1, 4);
  MultiGraph banana(2, {{0, 1}, {0, 1}, {0, 1}});
  CHECK(contains(ge, banana));
  CHECK(contains(ge, MultiGraph(3, {{0, 1}, {1, 2}, {0, 2}})));
  CHECK(contains(ge, MultiGraph(4, {{0, 1}, {0, 2}, {0, 3}})));
  CHECK(std::count_if(ge.begin(), ge.end(), [](const MultiGraph& g) { return !brute_force_delta0(g); }) == 1);
}

TEST_CASE("root search for the diamond") {
  SimpleGraph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  auto roots = brute_force_roots(diamond, LineMode::l1, 5);
  CHECK(contains(roots, MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {0, 2}})));
  CHECK(contains(roots, MultiGraph(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}})));
  CHECK(std::count_if(roots.begin(), roots.end(), [](const MultiGraph& g) { return g.vertex_count() != 4; }) == 1);
  for (const auto& r : roots) CHECK(simple_isomorphic(l1_line_graph(r), diamond).has_value());
}

TEST_CASE("root search budget") {
  SimpleGraph nine(9, {{0, 1}});
  CHECK_THROWS_AS(brute_force_roots(nine, LineMode::l1, 5), BudgetExceeded);
  CHECK_THROWS_AS(brute_force_roots(k3, LineMode::l1, 10), BudgetExceeded);
}

TEST_CASE("rewriting oracle") {
  MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto t = rewrite_delta0(star);
  CHECK_FALSE(t.steps.empty());
  CHECK_FALSE(brute_force_delta0(t.result).has_value());
  CHECK(simple_isomorphic(geq1_line_graph(t.result), geq1_line_graph(star)).has_value());

  MultiGraph tri(3, {{0, 1}, {1, 2}, {0, 2}});
  auto tt = rewrite_delta0(tri);
  CHECK(iso(tt.result, MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})));

  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    auto g = random_multigraph(3 + seed % 8, 2 + seed % 8 + seed % 12, seed, {.connected = true});
    auto r = rewrite_delta0(g);
    CHECK_FALSE(brute_force_delta0(r.result).has_value());
    CHECK(simple_isomorphic(geq1_line_graph(r.result), geq1_line_graph(g)).has_value());
  }
}

TEST_CASE("four-vertex collapse") {
  MultiGraph p4(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(iso(four_vertex_collapse(p4), MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}})));
  MultiGraph k4(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
  CHECK(iso(four_vertex_collapse(k4), MultiGraph(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}})));
  for (const auto& g : enumerate_multigraphs(4, 6, true)) {
    auto t = four_vertex_collapse(g);
    CHECK(t.vertex_count() == 3);
    CHECK(simple_isomorphic(l1_line_graph(t), l1_line_graph(g)).has_value());
  }
}
