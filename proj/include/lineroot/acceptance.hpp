#pragma once

// Acceptance criteria as runnable checks. The acceptance test binary runs them
// at full size; `lineroot selftest` runs a reduced configuration.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace lineroot::acceptance {

struct CriterionResult {
  std::string id;
  std::string title;
  bool passed = false;
  std::string detail;
  double seconds = 0.0;
};

struct Options {
  std::size_t random_instances = 10'000;
  std::size_t max_random_vertices = 50;
  std::size_t max_random_edges = 200;
  double roundtrip_time_limit = 60.0;  // seconds, per mode

  std::size_t non_line_samples = 1'000;  // per mode
  std::size_t twin_samples = 1'000;

  unsigned scaling_min_exponent = 15;
  unsigned scaling_max_exponent = 20;
  std::size_t scaling_repeats = 5;
  double scaling_ratio_limit = 2.5;
  double scaling_largest_limit = 10.0;  // seconds

  std::uint64_t seed = 0x5eed'1ab5;
};

Options full_options();
/// Small enough for an interactive run.
Options desk_options();

CriterionResult roundtrip_l1(const Options& options);
CriterionResult roundtrip_geq1(const Options& options);
CriterionResult uniqueness(const Options& options);
CriterionResult whitney_exception(const Options& options);
CriterionResult rejection_soundness(const Options& options);
CriterionResult twin_partitions(const Options& options);
CriterionResult linear_scaling(const Options& options);
CriterionResult glg_diamond(const Options& options);
CriterionResult glg_claw(const Options& options);

/// Runs every criterion in order, reporting each result as it completes.
std::vector<CriterionResult> run_all(const Options& options,
                                     const std::function<void(const CriterionResult&)>& on_result = {});

std::string format_result(const CriterionResult& result);

}  // namespace lineroot::acceptance
