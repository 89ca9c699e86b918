#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "lineroot/isomorphism.hpp"
#include "lineroot/text_format.hpp"

using namespace lineroot;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  int code = cli::run_cli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string claw = "graph 4 3\ne 0 1\ne 0 2\ne 0 3\n";
const std::string diamond = "graph 4 5\ne 0 1\ne 0 2\ne 1 2\ne 1 3\ne 2 3\n";

}  // namespace

TEST_CASE("root of the claw") {
  auto l1 = run({"root", "--mode", "l1", "--verify", "-"}, claw);
  CHECK(l1.code == 0);
  auto r = parse_root(l1.out);
  CHECK(multigraph_isomorphic(r.root, MultiGraph(3, {{0, 1}, {0, 1}, {0, 1}, {1, 2}})).has_value());

  auto ge = run({"root", "--mode", "ge1", "-"}, claw);
  CHECK(ge.code == 1);
  CHECK(ge.out.empty());
  CHECK_FALSE(ge.err.empty());
}

TEST_CASE("root exit codes") {
  CHECK(run({"root", "--mode", "l1", "-"}, "graph 2 1\ne 0 0\n").code == 2);
  CHECK(run({"root", "--mode", "l1", "-"}, "graph 0 0\n").code == 2);
  CHECK(run({"root", "--mode", "l1", "/nonexistent/file"}).code == 2);
  CHECK(run({"root", "--mode", "l3", "-"}, claw).code == 2);
  CHECK(run({"root", "-"}, claw).code == 2);
  auto split = run({"root", "--mode", "l1", "-"}, "graph 4 2\ne 0 1\ne 2 3\n");
  CHECK(split.code == 3);
  CHECK(split.out.empty());
}

TEST_CASE("components are emitted in order of their smallest vertex") {
  auto r = run({"root", "--mode", "l1", "--components", "-"}, "graph 5 2\ne 1 3\ne 0 4\n");
  CHECK(r.code == 0);
  auto first = r.out.find("root ");
  auto second = r.out.find("root ", first + 1);
  auto third = r.out.find("root ", second + 1);
  REQUIRE(second != std::string::npos);
  REQUIRE(third != std::string::npos);
  CHECK(r.out.find("map 0 ") < second);
  CHECK(r.out.find("map 4 ") < second);
  CHECK(r.out.find("map 1 ") > second);
  CHECK(r.out.find("map 2 ") > third);

  auto bad = run({"root", "--mode", "ge1", "--components", "-"}, claw + "");
  CHECK(bad.code == 1);
  auto mixed = run({"root", "--mode", "ge1", "--components", "-"},
                   "graph 6 4\ne 0 1\ne 0 2\ne 0 3\ne 4 5\n");
  CHECK(mixed.code == 1);
  CHECK(mixed.out.empty());
}

TEST_CASE("output is deterministic") {
  auto a = run({"root", "--mode", "l1", "-"}, diamond);
  auto b = run({"root", "--mode", "l1", "-"}, diamond);
  CHECK(a.out == b.out);
  CHECK(a.code == 0);
}

TEST_CASE("linegraph") {
  auto r = run({"linegraph", "--mode", "l1", "-"}, "mgraph 3 4\ne 0 1\ne 0 1\ne 1 2\ne 0 2\n");
  CHECK(r.code == 0);
  auto g = parse_simple_graph(r.out);
  CHECK(simple_isomorphic(g, parse_simple_graph(diamond)).has_value());
  CHECK(run({"linegraph", "--mode", "ge1", "-"}, "mgraph 2 1\ne 0 0\n").code == 2);
}

TEST_CASE("check-glg") {
  auto d = run({"check-glg", "-"}, diamond);
  CHECK(d.code == 0);
  CHECK(parse_root(d.out).root.vertex_count() == 4);
  auto k5e = run({"check-glg", "-"}, "graph 5 9\ne 0 1\ne 0 2\ne 0 3\ne 0 4\ne 1 2\ne 1 3\ne 1 4\ne 2 3\ne 2 4\n");
  CHECK(k5e.code == 0);
  // Wheel on 6 vertices: a forbidden configuration for generalized line graphs.
  auto w = run({"check-glg", "-"},
               "graph 6 10\ne 0 1\ne 0 2\ne 0 3\ne 0 4\ne 0 5\ne 1 2\ne 2 3\ne 3 4\ne 4 5\ne 1 5\n");
  CHECK(w.code == 1);
  CHECK(w.out == "not-glg\n");
  CHECK(run({"check-glg", "-"}, "graph 4 2\ne 0 1\ne 2 3\n").code == 3);
}

TEST_CASE("delta0") {
  auto r = run({"delta0", "-"}, "mgraph 3 3\ne 0 1\ne 1 2\ne 0 2\n");
  CHECK(r.code == 0);
  CHECK(r.out.find("# step 1") != std::string::npos);
  auto g = parse_multigraph(r.out);
  CHECK(multigraph_isomorphic(g, MultiGraph(2, {{0, 1}, {0, 1}, {0, 1}})).has_value());
  CHECK(run({"delta0", "-"}, "mgraph 4 2\ne 0 1\ne 2 3\n").code == 3);
  CHECK(run({"delta0", "-"}, "mgraph 1 0\n").code == 2);
}

TEST_CASE("gen") {
  auto a = run({"gen", "--vertices", "6", "--edges", "9", "--seed", "4", "--connected"});
  auto b = run({"gen", "--vertices", "6", "--edges", "9", "--seed", "4", "--connected"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  auto g = parse_multigraph(a.out);
  CHECK(g.edge_count() == 9);
  CHECK(is_connected(g));
  CHECK(run({"gen", "--vertices", "1", "--edges", "0", "--seed", "1"}).code == 2);
  CHECK(run({"gen", "--vertices", "3", "--edges", "3", "--seed", "1", "--connected", "--delta0-free"}).code == 1);
  CHECK(run({"gen", "--vertices", "x", "--edges", "3", "--seed", "1"}).code == 2);
}

TEST_CASE("usage errors") {
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"--help"}).code == 0);
}
