#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "leibext/extension.hpp"

namespace leibext {

struct CheckResult {
  std::string id;
  int n = 0;
  int trials = 0;
  double max_residual = 0.0;
  bool pass = false;
  std::string notes;
};

struct VerificationReport {
  std::uint64_t seed = 0;
  int trials = 0;
  std::vector<CheckResult> checks;  ///< sorted by id
  int passed() const;
  int total() const { return static_cast<int>(checks.size()); }
};

struct VerifyHooks {
  /// Replaces the solver's sign table in the Leibniz check for dimension n.
  std::function<std::optional<SignTable>(int n)> sign_override;
  /// Worker threads; 0 picks hardware concurrency.
  unsigned threads = 0;
};

/// Ids of every check, sorted; independent of trials.
std::vector<std::string> check_registry();

/// The fixed list of results the suite must cover, sorted.
const std::vector<std::string>& check_manifest();

VerificationReport verify_all(std::uint64_t seed, int trials, const VerifyHooks& hooks = {});

std::string report_json(const VerificationReport& report);
std::string report_table(const VerificationReport& report);

}  // namespace leibext
