#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "leibext/algebra.hpp"
#include "leibext/classification.hpp"
#include "leibext/constraints.hpp"
#include "leibext/errors.hpp"
#include "leibext/extension.hpp"
#include "leibext/subsets.hpp"
#include "oracle.hpp"

using namespace leibext;

TEST(BuildMu, N4Entries) {
  const StructureTensor mu = build_mu(4);
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j)
      for (int k = 0; k < 5; ++k) {
        const bool graded = j == 0 && i >= 1 && i <= 3 && k == i + 1;
        EXPECT_EQ(mu(i, j, k), Complex(graded ? 1.0 : 0.0)) << i << j << k;
      }
}

TEST(BuildMu, LeibnizAndSeries) {
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(leibniz_residual(build_mu(n)), 0.0);
  EXPECT_EQ(lower_central_series(build_mu(6)).dims, (std::vector<int>{7, 5, 4, 3, 2, 1, 0}));
  EXPECT_THROW(build_mu(1), ArgumentError);
}

TEST(BuildTable, TrivialExtension) {
  const StructureTensor t = build_table(from_vector(4, std::vector<Complex>(4)));
  for (int i = 1; i <= 3; ++i) {
    EXPECT_EQ(t(i, 0, i + 1), Complex(1.0));
    EXPECT_EQ(t(0, i, i + 1), Complex(-1.0));
  }
  double off = 0.0;
  for (int i = 0; i < 5; ++i)
    for (int j = 0; j < 5; ++j) off = std::max(off, std::abs(t(i, j, 4)) * (i > 0 && j > 0));
  EXPECT_EQ(off, 0.0);
}

TEST(BuildTable, N4Products) {
  const StructureTensor t = build_table(from_vector(4, std::vector<Complex>{0, 0, 1, 1}));
  EXPECT_EQ(t(1, 1, 4), Complex(1.0));
  EXPECT_EQ(t(1, 2, 4), Complex(1.0));
  EXPECT_EQ(t(2, 1, 4), Complex(-1.0));
  EXPECT_EQ(t(2, 3, 4), Complex(0.0));
}

TEST(BuildTable, N5TopCoefficient) {
  const StructureTensor t = build_table(from_vector(5, std::vector<Complex>{0, 0, 0, 0, 1}));
  EXPECT_EQ(t(1, 4, 5), Complex(-1.0));
  EXPECT_EQ(t(2, 3, 5), Complex(1.0));
  EXPECT_EQ(t(3, 2, 5), Complex(-1.0));
  EXPECT_EQ(t(4, 1, 5), Complex(1.0));
}

TEST(BuildTable, AgreesWithWrittenOutTable) {
  for (int n = 4; n <= 8; ++n)
    for (std::uint64_t s = 0; s < 10; ++s) {
      const ExtensionParams p = random_params(n, std::nullopt, s);
      const auto flat = to_vector(p);
      const oracle::Table ref = oracle::ce_table(n, std::vector<oracle::C>(flat.begin(), flat.end()));
      EXPECT_EQ(oracle::max_diff(ref, build_table(p)), 0.0) << n << " " << s;
      EXPECT_LE(oracle::residual(ref), 1e-12 * std::max(1.0, param_scale(p)));
    }
}

TEST(BuildTable, RejectsBadParams) {
  ExtensionParams p;
  p.n = 6;
  p.b_even = {1.0, 2.0};
  p.b = 1.0;
  EXPECT_THROW(build_table(p), ArgumentError);
  p.b = 0.0;
  p.b_even = {1.0};
  EXPECT_THROW(build_table(p), ArgumentError);
  p.n = 9;
  EXPECT_THROW(validate(p), ArgumentError);
}

TEST(Params, FlatRoundTrip) {
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, 77);
    const auto v = to_vector(p);
    EXPECT_EQ(static_cast<int>(v.size()), arity(n));
    EXPECT_EQ(static_cast<int>(parameter_names(n).size()), arity(n));
    EXPECT_EQ(to_vector(from_vector(n, v)), v);
  }
  EXPECT_EQ(parameter_names(7), (std::vector<std::string>{"b00", "b01", "b11", "b12", "b14", "b"}));
}

TEST(RandomParams, MagnitudesAndDeterminism) {
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, 5);
    for (Complex z : to_vector(p)) {
      EXPECT_GE(std::abs(z), 0.5 - 1e-12);
      EXPECT_LE(std::abs(z), 2.0 + 1e-12);
    }
    EXPECT_EQ(to_vector(p), to_vector(random_params(n, std::nullopt, 5)));
  }
}

TEST(RandomParams, U9OfN4IsZero) {
  EXPECT_EQ(to_vector(random_params(4, SubsetId{4, 9}, 1)), std::vector<Complex>(4));
}

TEST(RandomParams, U3OfN4HasVanishingDiscriminant) {
  for (std::uint64_t s = 0; s < 20; ++s) {
    const ExtensionParams p = random_params(4, SubsetId{4, 3}, s);
    EXPECT_NE(p.b11, Complex{});
    EXPECT_EQ(p.b_even[0], Complex{});
    EXPECT_LT(std::abs(oracle::delta(p.b00, p.b01, p.b11)), 1e-14 * std::norm(p.b01) + 1e-15);
  }
}

TEST(RandomParams, EverySubsetSamplesItself) {
  for (int n = 4; n <= 8; ++n)
    for (const SubsetSpec& spec : subset_table(n))
      for (std::uint64_t s = 0; s < 10; ++s) {
        const SubsetId id{n, spec.index};
        EXPECT_EQ(subset_of(random_params(n, id, s)), id) << n << " U_" << spec.index;
      }
}

TEST(Subsets, TableSizes) {
  const std::vector<std::pair<int, int>> expect{{9, 1}, {13, 2}, {13, 2}, {17, 3}, {17, 3}};
  for (int n = 4; n <= 8; ++n) {
    const auto& table = subset_table(n);
    const int parametric = static_cast<int>(
        std::count_if(table.begin(), table.end(), [](const SubsetSpec& s) { return s.parametric; }));
    EXPECT_EQ(static_cast<int>(table.size()), expect[n - 4].first) << n;
    EXPECT_EQ(parametric, expect[n - 4].second) << n;
  }
}

TEST(Constraints, FreeCounts) {
  const std::vector<int> expect{4, 5, 5, 6, 6};
  for (int n = 4; n <= 8; ++n) {
    const ConstraintReport r = solve_leibniz_constraints(n);
    EXPECT_EQ(r.free_count, expect[n - 4]) << n;
    EXPECT_EQ(r.free_count, arity(n));
    EXPECT_TRUE(r.arity_matches);
    EXPECT_TRUE(r.signs_consistent);
    EXPECT_EQ(r.total_unknowns, r.rank + r.free_count);
  }
}

TEST(Constraints, N4FreeUnknowns) {
  const ConstraintReport r = solve_leibniz_constraints(4);
  const std::set<std::string> got(r.free_unknowns.begin(), r.free_unknowns.end());
  EXPECT_EQ(got, (std::set<std::string>{"b00", "b01", "b11", "b12"}));
}

TEST(Constraints, N5TopRelation) {
  const ConstraintReport r = solve_leibniz_constraints(5);
  for (const auto& d : r.free_basis) {
    const double b14 = ansatz_entry(r, d, 1, 4);
    EXPECT_NEAR(std::abs(ansatz_entry(r, d, 2, 3)), std::abs(b14), 1e-12);
    EXPECT_NEAR(ansatz_entry(r, d, 2, 3), -b14, 1e-12);
  }
}

TEST(Constraints, N7TopRelation) {
  const ConstraintReport r = solve_leibniz_constraints(7);
  for (const auto& d : r.free_basis) {
    const double b = -ansatz_entry(r, d, 1, 6);
    EXPECT_NEAR(ansatz_entry(r, d, 2, 5), b, 1e-12);
    EXPECT_NEAR(-ansatz_entry(r, d, 3, 4), b, 1e-12);
  }
}

TEST(Constraints, NullSpaceSatisfiesLeibniz) {
  for (int n = 4; n <= 8; ++n) {
    const ConstraintReport r = solve_leibniz_constraints(n);
    for (const auto& d : r.free_basis) {
      oracle::Table t(n + 1);
      for (int i = 1; i <= n - 1; ++i) {
        t.at(i, 0, i + 1) = 1.0;
        t.at(0, i, i + 1) = -1.0;
      }
      const auto at = [&](const std::string& name) {
        const auto it = std::find(r.unknowns.begin(), r.unknowns.end(), name);
        return d[it - r.unknowns.begin()];
      };
      t.at(0, 0, n) = at("b00");
      t.at(0, 1, n) = at("b01");
      for (int i = 1; i <= n - 1; ++i)
        for (int j = 1; j <= n - 1; ++j) t.at(i, j, n) = ansatz_entry(r, d, i, j);
      EXPECT_LT(oracle::residual(t), 1e-10) << n;
    }
  }
}

TEST(Constraints, SignsAlternate) {
  for (int n = 4; n <= 8; ++n) {
    const SignTable& s = leibniz_signs(n);
    for (int i = 1; i < n; ++i) {
      if (!s.determined[i]) continue;
      EXPECT_EQ(s.sign[i], i % 2 == 1 ? 1 : -1) << n << " row " << i;
    }
    EXPECT_TRUE(s.determined[2]);
  }
}

TEST(Constraints, FlippingAUsedSignBreaksLeibniz) {
  for (int n = 4; n <= 8; ++n) {
    for (int i = 2; i < n; ++i) {
      bool used = false;
      for (int j = i + 1; j <= n - 1; ++j)
        if (i + j - 1 <= n - 1 && (i + j - 1) % 2 == 0) used = true;
      if (!used) continue;
      SignTable s = leibniz_signs(n);
      s.sign[i] = -s.sign[i];
      ExtensionParams p = random_params(n, std::nullopt, 21);
      EXPECT_GT(leibniz_residual(build_table(p, s)), 0.1) << n << " row " << i;
    }
  }
}
