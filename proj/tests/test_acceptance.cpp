#include "pfcirc/acceptance.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  uint64_t seed = 20260811;
  if (argc > 1) seed = std::strtoull(argv[1], nullptr, 10);
  int failures = pfcirc::run_acceptance_and_report(seed, std::cout);
  if (failures) std::cout << failures << " criteria failed\n";
  return failures == 0 ? 0 : 1;
}
