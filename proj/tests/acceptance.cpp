/* Acceptance gate: runs every suite check once and prints one line per
 * criterion.  Optional argv: seed, max degree. */

#include <cstdint>
#include <cstdio>
#include <cstdlib>

#include "dklein/verify.hpp"

int main(int argc, char** argv) {
  std::uint64_t seed = 20260814;
  int max_degree = 6;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  if (argc > 2) max_degree = std::atoi(argv[2]);

  const int total = dklein::check_count();
  int failed = 0;
  std::printf("running %d checks (seed %llu, max degree %d)\n", total,
              static_cast<unsigned long long>(seed), max_degree);
  for (int i = 1; i <= total; ++i) {
    dklein::CheckResult r = dklein::run_check(i, seed, max_degree);
    std::printf("[%2d/%d] %-26s %s\n", i, total, r.name.c_str(),
                r.passed ? "PASS" : "FAIL");
    if (!r.passed) {
      std::printf("        %s\n", r.detail.c_str());
      ++failed;
    }
    std::fflush(stdout);
  }
  if (failed) {
    std::printf("%d of %d checks failed\n", failed, total);
    return 1;
  }
  std::printf("all %d checks passed\n", total);
  return 0;
}
