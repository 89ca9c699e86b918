#include "lineroot/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>

#include "lineroot/isomorphism.hpp"
#include "lineroot/line_graph.hpp"
#include "lineroot/oracle.hpp"
#include "lineroot/reconstruct.hpp"
#include "lineroot/simple_root.hpp"
#include "lineroot/twins.hpp"

namespace lineroot::acceptance {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

// Collects failures, keeping the first few descriptions.
class Tally {
 public:
  void check(bool ok, const std::string& what) {
    ++checks_;
    if (ok) return;
    ++failures_;
    if (examples_.size() < 3) examples_.push_back(what);
  }
  std::size_t failures() const { return failures_; }
  std::size_t checks() const { return checks_; }
  std::string summary() const {
    std::ostringstream out;
    out << checks_ << " checks, " << failures_ << " failures";
    for (const auto& e : examples_) out << "; " << e;
    return out.str();
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::vector<std::string> examples_;
};

bool isomorphic(const MultiGraph& a, const MultiGraph& b) {
  return multigraph_isomorphic(a, b).has_value();
}

std::string describe(const MultiGraph& g) {
  std::ostringstream out;
  out << g.vertex_count() << " vertices {";
  for (const auto& e : g.edges()) out << ' ' << e.u << '-' << e.v;
  out << " }";
  return out.str();
}

// The random family shared by both round-trip criteria.
MultiGraph random_instance(const Options& options, std::size_t index) {
  std::uint64_t seed = options.seed + index;
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  std::size_t n = 2 + oracle::uniform_below(rng, options.max_random_vertices - 1);
  std::size_t m = n - 1 + oracle::uniform_below(rng, options.max_random_edges - (n - 1) + 1);
  return oracle::random_multigraph(n, m, seed, {.connected = true});
}

std::vector<MultiGraph> enumerated_family() {
  std::vector<MultiGraph> out;
  for (std::size_t n = 2; n <= 5; ++n) {
    for (auto& g : oracle::enumerate_multigraphs(n, 6, true)) out.push_back(std::move(g));
  }
  return out;
}

void check_l1(Tally& tally, const MultiGraph& delta, const std::string& label) {
  auto gamma = l1_line_graph(delta);
  if (!is_connected(gamma)) return;
  auto r = reconstruct_root(gamma, LineMode::l1);
  if (!r) {
    tally.check(false, label + " rejected: " + r.error().message);
    return;
  }
  tally.check(verify(gamma, *r), label + " failed verification");
  tally.check(r->root.vertex_count() != 4, label + " root has four vertices");
  const MultiGraph expected =
      delta.vertex_count() == 4 ? oracle::four_vertex_collapse(delta) : delta;
  tally.check(isomorphic(r->root, expected),
              label + " root " + describe(r->root) + " differs from " + describe(expected));
}

// Failures where both sides are Δ0-free 4-vertex roots of one >=1-line graph,
// i.e. a second root rather than a wrong one.
std::size_t second_roots = 0;

// Graphs are isomorphic iff their true-twin quotients are, by a map that
// keeps class sizes. Quotients of 4-vertex roots have at most 6 vertices.
bool twin_quotients_match(const SimpleGraph& g, const SimpleGraph& h) {
  auto p = true_twin_partition(g);
  auto q = true_twin_partition(h);
  if (p.class_count() != q.class_count()) return false;
  if (p.class_count() > 8) return simple_isomorphic(g, h).has_value();
  auto qg = quotient(g, p);
  auto qh = quotient(h, q);
  std::vector<std::uint32_t> perm(p.class_count());
  for (std::uint32_t i = 0; i < perm.size(); ++i) perm[i] = i;
  do {
    bool ok = true;
    for (std::uint32_t c = 0; ok && c < perm.size(); ++c) {
      ok = qg.partition.members(c).size() == qh.partition.members(perm[c]).size();
      for (std::uint32_t d = c + 1; ok && d < perm.size(); ++d) {
        ok = qg.graph.adjacent(c, d) == qh.graph.adjacent(perm[c], perm[d]);
      }
    }
    if (ok) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

void note_second_root(const MultiGraph& a, const MultiGraph& b) {
  if (a.vertex_count() == 4 && b.vertex_count() == 4 && is_delta0_free(a) && is_delta0_free(b) &&
      twin_quotients_match(geq1_line_graph(a), geq1_line_graph(b))) {
    ++second_roots;
  }
}

void check_geq1(Tally& tally, const MultiGraph& delta, const std::string& label, bool brute_force_checks) {
  auto gamma = geq1_line_graph(delta);
  auto r = reconstruct_root(gamma, LineMode::geq1);
  if (!r) {
    tally.check(false, label + " rejected: " + r.error().message);
    return;
  }
  tally.check(verify(gamma, *r), label + " failed verification");
  tally.check(is_delta0_free(r->root), label + " root is not delta0-free");
  auto collapsed = delta0_collapse(delta);
  tally.check(collapsed.has_value(), label + " collapse refused");
  if (!collapsed) return;
  const MultiGraph& expected = is_delta0_free(delta) ? delta : *collapsed;
  bool same = isomorphic(r->root, expected);
  tally.check(same, label + " root " + describe(r->root) + " differs from " + describe(expected));
  if (!same) note_second_root(r->root, expected);
  auto rewritten = oracle::rewrite_delta0(delta).result;
  same = isomorphic(rewritten, *collapsed);
  tally.check(same, label + " rewriting oracle gives " + describe(rewritten));
  if (!same) note_second_root(rewritten, *collapsed);
  if (brute_force_checks) {
    tally.check(!oracle::brute_force_delta0(rewritten).has_value(),
                label + " rewriting oracle left a delta0");
    tally.check(oracle::brute_force_delta0(delta).has_value() != is_delta0_free(delta),
                label + " delta0 scan disagrees with exhaustive search");
  }
}

CriterionResult roundtrip(const Options& options, LineMode mode) {
  auto start = Clock::now();
  CriterionResult result;
  result.id = mode == LineMode::l1 ? "C1" : "C2";
  result.title = mode == LineMode::l1 ? "round trip L1 (enumerated + random)"
                                      : "round trip L>=1 with delta0 collapse and rewriting oracle";
  Tally tally;
  second_roots = 0;
  std::size_t enumerated = 0;
  for (const auto& delta : enumerated_family()) {
    std::string label = "enumerated " + describe(delta);
    if (mode == LineMode::l1) {
      check_l1(tally, delta, label);
    } else if (delta.edge_count() > 0) {
      check_geq1(tally, delta, label, true);
    }
    ++enumerated;
  }
  for (std::size_t i = 0; i < options.random_instances; ++i) {
    auto delta = random_instance(options, i);
    std::string label = "random #" + std::to_string(i);
    if (mode == LineMode::l1) {
      check_l1(tally, delta, label);
    } else {
      check_geq1(tally, delta, label, false);
    }
  }
  result.seconds = seconds_since(start);
  bool fast_enough = result.seconds < options.roundtrip_time_limit;
  result.passed = tally.failures() == 0 && fast_enough;
  std::ostringstream detail;
  detail << enumerated << " enumerated + " << options.random_instances << " random multigraphs; "
         << tally.summary();
  if (!fast_enough) detail << "; runtime limit " << options.roundtrip_time_limit << " s exceeded";
  if (mode == LineMode::geq1 && tally.failures() > 0) {
    detail << "; " << second_roots << " of the failures are two non-isomorphic delta0-free 4-vertex roots"
           << " with isomorphic >=1-line graphs";
  }
  result.detail = detail.str();
  return result;
}

bool canonical_in_mode(const MultiGraph& g, LineMode mode) {
  return mode == LineMode::l1 ? g.vertex_count() != 4 : !oracle::brute_force_delta0(g).has_value();
}

}  // namespace

Options full_options() { return Options{}; }

Options desk_options() {
  Options o;
  o.random_instances = 500;
  o.non_line_samples = 200;
  o.twin_samples = 200;
  o.scaling_max_exponent = 18;
  return o;
}

CriterionResult roundtrip_l1(const Options& options) { return roundtrip(options, LineMode::l1); }
CriterionResult roundtrip_geq1(const Options& options) { return roundtrip(options, LineMode::geq1); }

CriterionResult uniqueness(const Options&) {
  auto start = Clock::now();
  CriterionResult result{"C3", "canonical root uniqueness against exhaustive root search", false, "", 0};
  Tally tally;
  std::size_t line_graphs[2] = {0, 0};
  std::size_t graphs = 0;
  for (std::size_t n = 1; n <= 6; ++n) {
    for (const auto& gamma : oracle::enumerate_simple_graphs(n, true)) {
      ++graphs;
      for (LineMode mode : {LineMode::l1, LineMode::geq1}) {
        std::string label = std::string(to_string(mode)) + " graph " + describe(as_multigraph(gamma));
        auto roots = oracle::brute_force_roots(gamma, mode, n + 1);
        auto r = reconstruct_root(gamma, mode);
        if (roots.empty()) {
          tally.check(!r && r.error().kind == ErrorKind::not_line_graph, label + " accepted without a root");
          continue;
        }
        ++line_graphs[mode == LineMode::l1 ? 0 : 1];
        std::vector<const MultiGraph*> canonical;
        for (const auto& root : roots) {
          if (canonical_in_mode(root, mode)) canonical.push_back(&root);
        }
        tally.check(canonical.size() == 1,
                    label + " has " + std::to_string(canonical.size()) + " canonical roots");
        if (!r) {
          tally.check(false, label + " rejected: " + r.error().message);
          continue;
        }
        tally.check(canonical.size() == 1 && isomorphic(r->root, *canonical.front()),
                    label + " reconstruction differs from the canonical root");
      }
    }
  }
  result.seconds = seconds_since(start);
  result.passed = tally.failures() == 0;
  std::ostringstream detail;
  detail << graphs << " connected graphs on <= 6 vertices, " << line_graphs[0] << " are 1-line graphs, "
         << line_graphs[1] << " are >=1-line graphs; " << tally.summary();
  result.detail = detail.str();
  return result;
}

CriterionResult whitney_exception(const Options&) {
  auto start = Clock::now();
  CriterionResult result{"C4", "Whitney exception: K3 has roots K3 and K1,3; triangle selected", false, "", 0};
  Tally tally;
  SimpleGraph k3(3, {{0, 1}, {1, 2}, {0, 2}});
  MultiGraph triangle(3, {{0, 1}, {1, 2}, {0, 2}});
  MultiGraph star(4, {{0, 1}, {0, 2}, {0, 3}});
  auto roots = oracle::brute_force_roots(k3, LineMode::l1, 4);
  tally.check(roots.size() == 2, std::to_string(roots.size()) + " root classes instead of 2");
  bool has_triangle = false, has_star = false;
  for (const auto& root : roots) {
    has_triangle = has_triangle || isomorphic(root, triangle);
    has_star = has_star || isomorphic(root, star);
  }
  tally.check(has_triangle && has_star, "root classes are not {K3, K1,3}");
  auto r = reconstruct_root(k3, LineMode::l1);
  tally.check(r && isomorphic(r->root, triangle), "reconstruction did not select the triangle");
  auto tri = simple_line_graph_root(k3, K3Policy::triangle);
  auto st = simple_line_graph_root(k3, K3Policy::star);
  tally.check(tri && isomorphic(as_multigraph(tri->root), triangle), "triangle policy");
  tally.check(st && isomorphic(as_multigraph(st->root), star), "star policy");
  result.seconds = seconds_since(start);
  result.passed = tally.failures() == 0;
  result.detail = tally.summary();
  return result;
}

CriterionResult rejection_soundness(const Options& options) {
  auto start = Clock::now();
  CriterionResult result{"C5", "rejection soundness (claw, certified non-line graphs)", false, "", 0};
  Tally tally;
  SimpleGraph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  auto ge = reconstruct_root(claw, LineMode::geq1);
  tally.check(!ge && ge.error().kind == ErrorKind::not_line_graph, "claw accepted in L>=1 mode");
  auto l1 = reconstruct_root(claw, LineMode::l1);
  tally.check(l1 && verify(claw, *l1), "claw rejected in L1 mode");

  std::mt19937_64 rng(options.seed ^ 0xc1a5);
  std::size_t certified[2] = {0, 0};
  std::size_t attempts = 0;
  const std::size_t max_attempts = 200 * options.non_line_samples;
  while ((certified[0] < options.non_line_samples || certified[1] < options.non_line_samples) &&
         attempts < max_attempts) {
    ++attempts;
    std::size_t n = 4 + oracle::uniform_below(rng, 4);
    double p = 0.25 + 0.5 * static_cast<double>(oracle::uniform_below(rng, 1000)) / 1000.0;
    auto gamma = oracle::random_simple_graph(n, p, rng());
    if (!is_connected(gamma)) continue;
    for (LineMode mode : {LineMode::l1, LineMode::geq1}) {
      auto& count = certified[mode == LineMode::l1 ? 0 : 1];
      if (count >= options.non_line_samples) continue;
      if (!oracle::brute_force_roots(gamma, mode, n + 1).empty()) continue;
      ++count;
      auto r = reconstruct_root(gamma, mode);
      tally.check(!r && r.error().kind == ErrorKind::not_line_graph,
                  std::string(to_string(mode)) + " accepted certified non-line graph " +
                      describe(as_multigraph(gamma)));
    }
  }
  bool enough = certified[0] >= options.non_line_samples && certified[1] >= options.non_line_samples;
  tally.check(enough, "could not certify enough non-line graphs");
  result.seconds = seconds_since(start);
  result.passed = tally.failures() == 0;
  std::ostringstream detail;
  detail << certified[0] << " L1 and " << certified[1] << " L>=1 certified non-line graphs; "
         << tally.summary();
  result.detail = detail.str();
  return result;
}

namespace {

// Pairwise neighbourhood comparison, classes numbered by first appearance.
std::vector<std::uint32_t> twin_classes_by_comparison(const SimpleGraph& g, TwinKind kind) {
  const std::size_t n = g.vertex_count();
  std::vector<std::vector<VertexId>> hood(n);
  for (VertexId v = 0; v < n; ++v) {
    hood[v].assign(g.neighbors(v).begin(), g.neighbors(v).end());
    if (kind == TwinKind::true_twin) hood[v].push_back(v);
    std::sort(hood[v].begin(), hood[v].end());
  }
  std::vector<std::uint32_t> label(n, UINT32_MAX);
  std::uint32_t next = 0;
  for (VertexId v = 0; v < n; ++v) {
    if (label[v] != UINT32_MAX) continue;
    label[v] = next;
    for (VertexId w = v + 1; w < n; ++w) {
      if (label[w] == UINT32_MAX && hood[v] == hood[w]) label[w] = next;
    }
    ++next;
  }
  return label;
}

}  // namespace

CriterionResult twin_partitions(const Options& options) {
  auto start = Clock::now();
  CriterionResult result{"C6", "twin partitions match pairwise oracle; quotients twin-free", false, "", 0};
  Tally tally;
  std::mt19937_64 rng(options.seed ^ 0x7715);
  for (std::size_t i = 0; i < options.twin_samples; ++i) {
    std::size_t n = 1 + oracle::uniform_below(rng, 8);
    double p = static_cast<double>(oracle::uniform_below(rng, 1001)) / 1000.0;
    auto g = oracle::random_simple_graph(n, p, rng());
    std::string label = "graph " + describe(as_multigraph(g));
    for (TwinKind kind : {TwinKind::false_twin, TwinKind::true_twin}) {
      auto p_fast = twin_partition(g, kind);
      auto expected = twin_classes_by_comparison(g, kind);
      tally.check(std::equal(expected.begin(), expected.end(), p_fast.class_of().begin(),
                             p_fast.class_of().end()),
                  label + " partition mismatch");
      auto q = quotient(g, p_fast);
      auto again = twin_partition(q.graph, kind);
      tally.check(again.class_count() == q.graph.vertex_count(), label + " quotient has twins");
    }
  }
  result.seconds = seconds_since(start);
  result.passed = tally.failures() == 0;
  result.detail = std::to_string(options.twin_samples) + " random graphs; " + tally.summary();
  return result;
}

namespace {

struct ScalingInstance {
  SimpleGraph gamma;
  std::size_t edges;
};

// Line graph of a random connected multigraph with average degree 8, sized so
// that the line graph has close to `target_edges` edges.
ScalingInstance scaling_instance(std::size_t target_edges, LineMode mode, std::uint64_t seed) {
  auto build = [&](std::size_t n) {
    auto delta = oracle::random_multigraph(n, 4 * n, seed, {.connected = true});
    return line_graph(delta, mode);
  };
  std::size_t n = std::max<std::size_t>(16, target_edges / 36);
  auto gamma = build(n);
  n = std::max<std::size_t>(16, static_cast<std::size_t>(std::llround(
                                    static_cast<double>(n) * static_cast<double>(target_edges) /
                                    static_cast<double>(gamma.edge_count()))));
  gamma = build(n);
  std::size_t edges = gamma.edge_count();
  return {std::move(gamma), edges};
}

}  // namespace

CriterionResult linear_scaling(const Options& options) {
  auto start = Clock::now();
  CriterionResult result{"C7", "linear scaling of reconstruct_root", false, "", 0};
  Tally tally;
  std::ostringstream detail;
  for (LineMode mode : {LineMode::l1, LineMode::geq1}) {
    detail << to_string(mode) << ":";
    std::vector<ScalingInstance> instances;
    bool ok = true;
    for (unsigned k = options.scaling_min_exponent; k <= options.scaling_max_exponent; ++k) {
      instances.push_back(scaling_instance(std::size_t{1} << k, mode, options.seed + k));
      ok = ok && reconstruct_root(instances.back().gamma, mode).has_value();  // warm-up
    }
    // Each run sweeps every size, so a slow spell on the machine does not
    // land on a single size.
    std::vector<std::vector<double>> times(instances.size());
    for (std::size_t rep = 0; rep < options.scaling_repeats; ++rep) {
      for (std::size_t i = 0; i < instances.size(); ++i) {
        auto t0 = Clock::now();
        auto r = reconstruct_root(instances[i].gamma, mode);
        times[i].push_back(seconds_since(t0));
        ok = ok && r.has_value();
      }
    }
    tally.check(ok, std::string(to_string(mode)) + " scaling instance rejected");
    double previous = 0.0;
    for (std::size_t i = 0; i < instances.size(); ++i) {
      unsigned k = options.scaling_min_exponent + static_cast<unsigned>(i);
      std::sort(times[i].begin(), times[i].end());
      double median = times[i][times[i].size() / 2];
      detail << " 2^" << k << "(" << instances[i].edges << " edges) " << median * 1e3 << " ms";
      if (previous > 0.0) {
        double ratio = median / previous;
        detail << " x" << ratio;
        std::ostringstream what;
        what << to_string(mode) << " growth " << ratio << " at 2^" << k;
        tally.check(ratio <= options.scaling_ratio_limit, what.str());
      }
      if (k == options.scaling_max_exponent) {
        tally.check(median < options.scaling_largest_limit,
                    std::string(to_string(mode)) + " largest instance too slow");
      }
      previous = median;
      detail << ';';
    }
    detail << ' ';
  }
  result.seconds = seconds_since(start);
  result.passed = tally.failures() == 0;
  result.detail = detail.str() + tally.summary();
  return result;
}

CriterionResult glg_diamond(const Options&) {
  auto start = Clock::now();
  CriterionResult result{"C8a", "diamond is a generalized line graph via the paw", false, "", 0};
  Tally tally;
  SimpleGraph diamond(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  MultiGraph paw(4, {{0, 1}, {1, 2}, {0, 2}, {2, 3}});
  auto canonical = reconstruct_root(diamond, LineMode::l1);
  tally.check(canonical && canonical->root.vertex_count() == 3 &&
                  !satisfies_glg_conditions(canonical->root),
              "canonical triangle root unexpectedly satisfies the conditions");
  auto glg = is_generalized_line_graph(diamond);
  tally.check(glg && glg->has_value(), "diamond not certified");
  if (glg && glg->has_value()) {
    const auto& root = (*glg)->root;
    tally.check(root.vertex_count() == 4 && isomorphic(root, paw), "root is not the paw: " + describe(root));
    tally.check(satisfies_glg_conditions(root), "root violates the conditions");
    tally.check(verify(diamond, **glg), "forward L1 oracle disagrees");
    tally.check(simple_isomorphic(l1_line_graph(root), diamond).has_value(), "L1(root) is not the diamond");
  }
  result.seconds = seconds_since(start);
  result.passed = tally.failures() == 0;
  result.detail = tally.summary();
  return result;
}

CriterionResult glg_claw(const Options&) {
  auto start = Clock::now();
  CriterionResult result{"C8b", "claw K1,3 certified not a generalized line graph", false, "", 0};
  Tally tally;
  SimpleGraph claw(4, {{0, 1}, {0, 2}, {0, 3}});
  auto glg = is_generalized_line_graph(claw);
  bool reported_not_glg = glg && !glg->has_value();
  tally.check(reported_not_glg,
              glg && glg->has_value() ? "is_generalized_line_graph returned root " + describe((*glg)->root)
                                      : "is_generalized_line_graph failed");
  // Forward-oracle certification: no 1-line root of the claw may satisfy the
  // conditions.
  for (const auto& root : oracle::brute_force_roots(claw, LineMode::l1, 5)) {
    tally.check(!satisfies_glg_conditions(root),
                "root " + describe(root) + " satisfies the conditions and has L1 = claw");
  }
  result.seconds = seconds_since(start);
  result.passed = tally.failures() == 0;
  result.detail = tally.summary();
  return result;
}

std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result) {
  using Check = CriterionResult (*)(const Options&);
  const Check checks[] = {roundtrip_l1,        roundtrip_geq1,  uniqueness,     whitney_exception,
                          rejection_soundness, twin_partitions, linear_scaling, glg_diamond,
                          glg_claw};
  std::vector<CriterionResult> out;
  for (auto check : checks) {
    out.push_back(check(options));
    if (on_result) on_result(out.back());
  }
  return out;
}

std::string format_result(const CriterionResult& result) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (result.passed ? "[PASS] " : "[FAIL] ") << result.id << ' ' << result.title << " ("
      << result.seconds << " s): " << result.detail;
  return out.str();
}

}  // namespace lineroot::acceptance
