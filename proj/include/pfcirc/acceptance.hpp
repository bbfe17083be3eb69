#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pfcirc {

struct CriterionResult {
  int index = 0;
  std::string name;
  bool pass = false;
  std::string detail;
};

// Runs the full acceptance suite (one entry per criterion) with the given
// seed; progress lines go to `out` when provided.
std::vector<CriterionResult> run_acceptance(uint64_t seed, std::ostream* out = nullptr);

// Convenience: prints one PASS/FAIL line per criterion, returns the number
// of failures.
int run_acceptance_and_report(uint64_t seed, std::ostream& out);

}  // namespace pfcirc
