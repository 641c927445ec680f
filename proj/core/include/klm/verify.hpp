#pragma once

#include <klm/bigint.hpp>

#include <string>
#include <vector>

namespace klm {

struct VerifyOptions {
  /// Upper bound for every (n, m) sweep. Partition-indexed sweeps are
  /// additionally capped internally where the cost grows factorially.
  int max_n = 8;
  /// Numeric q values (each >= 2) for the evaluation cross-checks.
  std::vector<BigInt> q_values;
};

struct CheckResult {
  std::string name;
  bool pass = false;
  long failures = 0;      // number of failing witnesses
  std::string witness;    // first failing witness, "(n,m,i,q)" style
};

/// Runs the library's invariant suite at the requested scale and reports one
/// result per named check, in a fixed deterministic order. Never throws:
/// an exception inside a check marks that check failed with the message as
/// witness.
std::vector<CheckResult> run_verification(const VerifyOptions& options);

}  // namespace klm
