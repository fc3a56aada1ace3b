#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace finsemi {

// One verification criterion of the built-in suite. `detail` is the one-line
// verdict; `notes` carry the evidence (witness listings, counts, counter-
// examples) so a failure is self-explaining.
struct CriterionResult {
  int id = 0;
  std::string title;
  bool pass = false;
  double seconds = 0;
  double budget = 0;  // soft time budget; exceeding it fails the criterion
  std::string detail;
  std::vector<std::string> notes;
};

struct AcceptanceConfig {
  bool quick = false;       // reduced sizes, completes well under 30 s
  std::uint64_t seed = 1;   // base seed for the randomized pipeline criterion
};

// Runs all ten criteria in order. Deterministic for a fixed config.
std::vector<CriterionResult> run_acceptance(const AcceptanceConfig& cfg);

}  // namespace finsemi
