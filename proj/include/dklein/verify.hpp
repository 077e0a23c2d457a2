#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace dklein {

/* One acceptance check.  `detail` explains a failure (empty on success). */
struct CheckResult {
  int index = 0;  // 1-based
  std::string name;
  bool passed = false;
  std::string detail;
};

int check_count();
const std::vector<std::string>& check_names();

/* Runs one check (index 1..check_count()).  Deterministic for a fixed seed;
 * library errors are captured as failures rather than propagated.
 * max_degree caps the randomly drawn polynomial degrees (it never lowers a
 * check's required minimum). */
CheckResult run_check(int index, std::uint64_t seed, int max_degree = 6);

std::vector<CheckResult> run_all_checks(std::uint64_t seed,
                                        int max_degree = 6);

}  // namespace dklein
