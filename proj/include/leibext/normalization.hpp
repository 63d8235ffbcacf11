#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "leibext/adapted.hpp"

namespace leibext {

/// Target of one normalization condition: flat parameter slot `slot` of the
/// transformed parameters should equal `value`.
struct SlotTarget {
  int slot;
  Complex value;
};

struct NormalizationResult {
  bool converged = false;
  AdaptedTransform transform;
  double residual = 0.0;
  int starts_used = 0;
};

struct NormalizationOptions {
  int starts = 20;
  int max_iterations = 200;
  double accept_residual = 1e-10;
};

/// Damped Gauss-Newton on the unknowns (A0, A1, B1..B_{n-2}) for the system
/// act_on_params(t, p)[slot] = value. Starts are drawn from a generator seeded
/// with `seed`; the first start is `initial` when given.
NormalizationResult solve_normalization(const ExtensionParams& p,
                                        const std::vector<SlotTarget>& targets,
                                        std::uint64_t seed,
                                        const std::optional<AdaptedTransform>& initial = std::nullopt,
                                        const NormalizationOptions& options = {});

}  // namespace leibext
