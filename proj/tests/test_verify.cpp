#include <gtest/gtest.h>

#include <algorithm>

#include "leibext/constraints.hpp"
#include "leibext/verify.hpp"

using namespace leibext;

TEST(Verify, ManifestMatchesRegistry) {
  EXPECT_EQ(check_registry(), check_manifest());
  EXPECT_TRUE(std::is_sorted(check_manifest().begin(), check_manifest().end()));
}

TEST(Verify, ManifestCoversEveryDimensionAndSubset) {
  const auto& m = check_manifest();
  const auto has = [&](const std::string& id) { return std::find(m.begin(), m.end(), id) != m.end(); };
  for (int n = 4; n <= 8; ++n) {
    const std::string p = "n" + std::to_string(n) + ".";
    for (const char* base :
         {"leibniz_validity", "filiform_series", "constraint_reduction", "adapted_form",
          "isomorphism_criterion", "general_action_formula", "group_law",
          "elementary_decomposition", "tail_triviality", "separation"})
      EXPECT_TRUE(has(p + base)) << p + base;
  }
  EXPECT_TRUE(has("n5.exceptional_strata"));
  EXPECT_TRUE(has("n7.exceptional_strata"));
  EXPECT_TRUE(has("n4.U1.orbit_function"));
  EXPECT_TRUE(has("n8.U17.canonical_form"));
}

TEST(Verify, SmallRunPasses) {
  const VerificationReport r = verify_all(1, 3);
  EXPECT_EQ(r.passed(), r.total());
  for (const auto& c : r.checks) EXPECT_TRUE(c.pass) << c.id << ": " << c.notes;
}

TEST(Verify, CoverageIndependentOfTrials) {
  const VerificationReport a = verify_all(2, 1);
  const VerificationReport b = verify_all(2, 4);
  ASSERT_EQ(a.total(), b.total());
  EXPECT_EQ(a.total(), static_cast<int>(check_manifest().size()));
  for (int i = 0; i < a.total(); ++i) EXPECT_EQ(a.checks[i].id, b.checks[i].id);
}

TEST(Verify, SameSeedSameBytes) {
  VerifyHooks one;
  one.threads = 1;
  VerifyHooks many;
  many.threads = 4;
  const std::string a = report_json(verify_all(7, 2, one));
  const std::string b = report_json(verify_all(7, 2, many));
  EXPECT_EQ(a, b);
  EXPECT_EQ(report_table(verify_all(7, 2, one)), report_table(verify_all(7, 2, many)));
}

TEST(Verify, CorruptedSignsAreReported) {
  VerifyHooks hooks;
  hooks.sign_override = [](int n) -> std::optional<SignTable> {
    if (n != 6) return std::nullopt;
    SignTable s = leibniz_signs(6);
    s.sign[2] = -s.sign[2];
    return s;
  };
  const VerificationReport r = verify_all(1, 2, hooks);
  for (const auto& c : r.checks) {
    if (c.id == "n6.constraint_reduction") {
      EXPECT_FALSE(c.pass);
      EXPECT_NE(c.notes.find("triple ("), std::string::npos) << c.notes;
      EXPECT_GT(c.max_residual, 0.1);
    } else {
      EXPECT_TRUE(c.pass) << c.id;
    }
  }
  EXPECT_EQ(r.passed(), r.total() - 1);
}
