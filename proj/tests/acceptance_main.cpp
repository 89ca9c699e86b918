// Runs every acceptance criterion at full size and prints one line each.

#include <iostream>

#include "lineroot/acceptance.hpp"

int main() {
  using namespace lineroot::acceptance;
  int failed = 0;
  run_all(full_options(), [&](const CriterionResult& r) {
    std::cout << format_result(r) << std::endl;
    failed += r.passed ? 0 : 1;
  });
  std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criterion(s) failed")
            << std::endl;
  return failed == 0 ? 0 : 1;
}
