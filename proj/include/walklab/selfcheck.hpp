#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace walklab {

struct SelfcheckOptions {
  /// Replaces Phi_6 in the cyclotomic table by Phi_3 (fault-injection fixture).
  bool corrupt_cyclotomic = false;
  /// Seeds the randomized algebraic-integer property; results never depend on it.
  std::uint64_t seed = 0;
};

struct InvariantResult {
  std::string name;
  bool passed = false;
  std::string detail;  ///< first counterexample when failed
};

std::vector<InvariantResult> run_selfcheck(const SelfcheckOptions& options = {});

}  // namespace walklab
