#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace ttmax {

struct SuiteCheck {
  std::string name;
  bool pass = false;
  double worst = 0.0;  // worst deviation (identities) or worst margin (inequalities)
};

struct SuiteResult {
  std::string suite;
  std::vector<SuiteCheck> checks;
  bool pass = false;
};

/// Deterministic property suites over the core identities and inequalities:
/// index-calculus compositions, pairing bounds, quadratic-form and trace
/// identities, decomposition and coherence invariants, sketch behaviour, and
/// the projection heuristics.  Runs at desk scale in seconds.
std::vector<SuiteResult> run_verification_suites(std::uint64_t seed);

bool all_passed(const std::vector<SuiteResult>& results);

}  // namespace ttmax
