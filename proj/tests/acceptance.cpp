// Runs every acceptance criterion with the default seed and prints one line each.
#include <cstdio>

#include "lieyb/verify.hpp"

int main() {
  const lieyb::VerifyReport rep = lieyb::verify_paper(lieyb::VerifyOptions{});
  for (const auto& c : rep.criteria) {
    std::printf("%s criterion %2d: %s (%zu checks)\n", c.passed ? "PASS" : "FAIL", c.id, c.name.c_str(), c.checks);
    for (const auto& f : c.failures) std::printf("    %s\n", f.c_str());
  }
  std::printf("%zu of %zu criteria passed\n", rep.criteria.size() - rep.failed(), rep.criteria.size());
  return rep.failed() == 0 ? 0 : 1;
}
