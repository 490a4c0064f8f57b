#include <iostream>
#include <map>

#include "donsum/conformance.hpp"

// One line per acceptance criterion; exit status is nonzero if any fails.
int main() {
  const auto results = donsum::run_conformance({});
  std::map<int, std::pair<int, int>> tally;  // criterion -> (passed, total)
  for (const auto& r : results) {
    auto& t = tally[r.criterion];
    t.first += r.passed ? 1 : 0;
    t.second += 1;
    if (!r.passed) std::cerr << "  failed " << r.section << "/" << r.id << ": " << r.detail << "\n";
  }
  bool ok = true;
  for (int c = 1; c <= 10; ++c) {
    const auto it = tally.find(c);
    const bool pass = it != tally.end() && it->second.first == it->second.second;
    ok = ok && pass;
    std::cout << "criterion " << c << ": " << (pass ? "PASS" : "FAIL");
    if (it != tally.end()) std::cout << " (" << it->second.first << "/" << it->second.second << " checks)";
    std::cout << "\n";
  }
  return ok ? 0 : 1;
}
