#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "leibext/adapted.hpp"
#include "leibext/subsets.hpp"

namespace leibext {

struct InvariantReport {
  Complex delta{};
  std::map<std::string, bool> is_zero;
  std::optional<Complex> orbit_value;
  std::optional<Complex> canonical_lambda;
  double flag_margin = 1.0;
};

struct OrbitLabel {
  int n = 4;
  SubsetId subset;
  ExtensionParams representative;
  std::optional<Complex> lambda;
  AdaptedTransform witness;
  /// Orbit inside a listed subset that its listed normal form does not reach.
  bool exceptional = false;
  InvariantReport invariants;
};

/// b01^2 - 4 b00 b11.
Complex delta(const ExtensionParams& p);

bool is_zero_quantity(const ExtensionParams& p, Quantity q, const Tolerance& tol = {});

SubsetId subset_of(const ExtensionParams& p, const Tolerance& tol = {});

/// Orbit function of the parametric subset containing p, nullopt on single
/// orbits. Throws DomainError where the function's denominator vanishes.
std::optional<Complex> orbit_invariant(const ExtensionParams& p, const Tolerance& tol = {});

OrbitLabel canonicalize(const ExtensionParams& p, const Tolerance& tol = {},
                        std::uint64_t seed = 0);

/// canonicalize plus the InvariantReport.
OrbitLabel classify(const ExtensionParams& p, const Tolerance& tol = {},
                    std::uint64_t seed = 0);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<AdaptedTransform> witness;  ///< maps p to q when isomorphic
};

IsomorphismResult isomorphic(const ExtensionParams& p, const ExtensionParams& q,
                             const Tolerance& tol = {});

struct RepresentativeEntry {
  SubsetId subset;
  ExtensionParams params;  ///< lambda slot is 0 for parametric subsets
  bool parametric;
};

std::vector<RepresentativeEntry> representatives(int n);

/// Normal form of a parametric subset at a given lambda.
ExtensionParams representative_at(const SubsetId& id, Complex lambda);

struct ExceptionalEntry {
  SubsetId subset;
  ExtensionParams params;
  std::string locus;
};

/// Orbits missed by the listed normal forms (odd n only).
std::vector<ExceptionalEntry> exceptional_representatives(int n);

}  // namespace leibext
