#include <gtest/gtest.h>

#include "leibext/adapted.hpp"
#include "leibext/classification.hpp"
#include "leibext/normalization.hpp"
#include "leibext/subsets.hpp"

using namespace leibext;

TEST(Normalization, ReachesListedNormalForm) {
  // n = 4, U_2: b00 -> 1, b01 -> 0, b11 -> 1, b12 stays 0.
  const ExtensionParams p = random_params(4, SubsetId{4, 2}, 3);
  const NormalizationResult r =
      solve_normalization(p, {{0, 1.0}, {1, 0.0}, {2, 1.0}}, 7);
  ASSERT_TRUE(r.converged);
  EXPECT_LE(r.residual, 1e-10);
  const auto q = to_vector(act_on_params(r.transform, p));
  EXPECT_LT(std::abs(q[0] - 1.0), 1e-9);
  EXPECT_LT(std::abs(q[1]), 1e-9);
  EXPECT_LT(std::abs(q[2] - 1.0), 1e-9);
  EXPECT_LT(std::abs(q[3]), 1e-12);
}

TEST(Normalization, AgreesWithClosedFormCanonicalization) {
  for (int n = 4; n <= 8; ++n)
    for (const SubsetSpec& spec : subset_table(n)) {
      const ExtensionParams p = random_params(n, SubsetId{n, spec.index}, 50);
      const OrbitLabel label = canonicalize(p);
      const auto want = to_vector(label.representative);
      std::vector<SlotTarget> targets;
      for (std::size_t i = 0; i < want.size(); ++i) targets.push_back({static_cast<int>(i), want[i]});
      const NormalizationResult r = solve_normalization(p, targets, 11, label.witness);
      EXPECT_TRUE(r.converged) << n << " U_" << spec.index;
      EXPECT_LE(r.residual, 1e-10);
    }
}

TEST(Normalization, DeterministicForSeed) {
  const ExtensionParams p = random_params(6, SubsetId{6, 3}, 1);
  const std::vector<SlotTarget> targets{{0, 0.0}, {2, 1.0}};
  const NormalizationResult a = solve_normalization(p, targets, 5);
  const NormalizationResult b = solve_normalization(p, targets, 5);
  EXPECT_EQ(a.converged, b.converged);
  EXPECT_EQ(a.transform.A0, b.transform.A0);
  EXPECT_EQ(a.transform.B, b.transform.B);
}
