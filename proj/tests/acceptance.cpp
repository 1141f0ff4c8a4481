// Acceptance suite: runs every acceptance criterion and prints one
// pass/fail line per criterion.  Exit code 0 iff all pass.

#include <iostream>

#include "ncpart/checks.hpp"

int main() {
  auto results = ncpart::checks::run_acceptance();
  bool ok = true;
  for (const auto& r : results) {
    bool pass = r.passed();
    ok = ok && pass;
    std::cout << (pass ? "[PASS] " : "[FAIL] ") << r.name << "\n";
    for (const auto& d : r.details) std::cout << "       " << d << "\n";
  }
  std::cout << (ok ? "acceptance: all criteria passed\n" : "acceptance: FAILURES above\n");
  return ok ? 0 : 1;
}
