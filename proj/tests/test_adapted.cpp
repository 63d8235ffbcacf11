#include <gtest/gtest.h>

#include <random>

#include "leibext/adapted.hpp"
#include "leibext/algebra.hpp"
#include "leibext/errors.hpp"
#include "leibext/extension.hpp"
#include "oracle.hpp"

using namespace leibext;

namespace {

AdaptedTransform random_transform(int n, std::mt19937_64& rng, Complex b = {}) {
  for (;;) {
    AdaptedTransform t;
    t.n = n;
    t.A0 = oracle::draw(rng);
    t.A1 = oracle::draw(rng);
    t.B.resize(n - 2);
    for (auto& z : t.B) z = oracle::draw(rng);
    if (std::abs(t.A0 + t.A1 * b) >= 0.1) return t;
  }
}

std::vector<oracle::C> flat(const ExtensionParams& p) {
  const auto v = to_vector(p);
  return {v.begin(), v.end()};
}

oracle::Transform plain(const AdaptedTransform& t) { return {t.A0, t.A1, t.B}; }

double params_distance(const ExtensionParams& a, const ExtensionParams& b) {
  return oracle::rel_diff(flat(a), flat(b));
}

}  // namespace

TEST(AdaptedMatrix, IdentityTransform) {
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, 3);
    const Matrix g = adapted_matrix(identity_transform(n), p);
    EXPECT_LT((g - Matrix::Identity(n + 1, n + 1)).norm(), 1e-15) << n;
  }
}

TEST(AdaptedMatrix, SecondColumnByHand) {
  const ExtensionParams p = from_vector(4, std::vector<Complex>{0, 0, 1, 1});
  AdaptedTransform t = identity_transform(4);
  t.A1 = 1.0;
  const Matrix g = adapted_matrix(t, p);
  Vector expect = basis_vector(5, 2) + basis_vector(5, 4);
  EXPECT_LT((g.col(2) - expect).norm(), 1e-15);
}

TEST(AdaptedMatrix, TopEntryIsNormalizer) {
  std::mt19937_64 rng(4);
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const AdaptedTransform t = random_transform(n, rng, p.b);
    const Complex expect = std::pow(t.A0, n - 2) * t.B[0] * (t.A0 + t.A1 * p.b);
    EXPECT_LT(std::abs(adapted_matrix(t, p)(n, n) - expect), 1e-12 * std::abs(expect)) << n;
    EXPECT_LT(std::abs(normalizer(t, p.b) - expect), 1e-12 * std::abs(expect));
  }
}

TEST(ActOnParams, UpsilonOnB11) {
  const Complex a{1.2, -0.3}, b{0.6, 0.9};
  const ExtensionParams q =
      act_on_params(elementary_to_adapted(ElementaryTransform::upsilon(a, b), 4),
                    from_vector(4, std::vector<Complex>{0, 0, 1, 0}));
  EXPECT_LT(std::abs(q.b11 - b / (a * a * a)), 1e-14);
  EXPECT_EQ(q.b00, Complex{});
  EXPECT_EQ(q.b01, Complex{});
  EXPECT_EQ(q.b_even[0], Complex{});
}

TEST(ActOnParams, Identity) {
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, 8);
    EXPECT_LT(params_distance(act_on_params(identity_transform(n), p), p), 1e-15);
  }
}

TEST(ActOnParams, N5TopCoefficient) {
  std::mt19937_64 rng(6);
  for (int s = 0; s < 20; ++s) {
    const ExtensionParams p = random_params(5, std::nullopt, rng());
    const AdaptedTransform t = random_transform(5, rng, p.b);
    const Complex expect = t.B[0] * p.b / (t.A0 + t.A1 * p.b);
    EXPECT_LT(std::abs(act_on_params(t, p).b - expect), 1e-12 * std::abs(expect));
  }
}

TEST(ActOnParams, AgreesWithBruteForceBasisChange) {
  std::mt19937_64 rng(7);
  for (int n = 4; n <= 8; ++n)
    for (int s = 0; s < 30; ++s) {
      const ExtensionParams p = random_params(n, std::nullopt, rng());
      const AdaptedTransform t = random_transform(n, rng, p.b);
      const auto expect = oracle::act(n, flat(p), plain(t));
      EXPECT_LT(oracle::rel_diff(flat(act_on_params(t, p)), expect), 1e-8) << n;
      EXPECT_LT(oracle::rel_diff(flat(act_on_params_general(t, p)), expect), 1e-8) << n;
      EXPECT_LT(oracle::rel_diff(flat(act_on_params_tensor(t, p)), expect), 1e-8) << n;
    }
}

TEST(ActOnParams, ProperSubsetMembers) {
  // Zero patterns exercise the branches the generic draw never hits.
  std::mt19937_64 rng(17);
  for (int n = 4; n <= 8; ++n)
    for (int index = 1; index <= 17; ++index) {
      ExtensionParams p;
      try {
        p = random_params(n, SubsetId{n, index}, rng());
      } catch (const ArgumentError&) {
        continue;
      }
      const AdaptedTransform t = random_transform(n, rng, p.b);
      const auto expect = oracle::act(n, flat(p), plain(t));
      EXPECT_LT(oracle::rel_diff(flat(act_on_params(t, p)), expect), 1e-8) << n << " U_" << index;
    }
}

TEST(Require, DegenerateTransforms) {
  AdaptedTransform t = identity_transform(5);
  t.A1 = -1.0;
  EXPECT_THROW(require_nondegenerate(t, 1.0), ValidityError);
  EXPECT_NO_THROW(require_nondegenerate(t, 0.5));
  t.B[0] = 0.0;
  EXPECT_THROW(require_nondegenerate(t, 0.5), ValidityError);
  t.B.pop_back();
  EXPECT_THROW(require_nondegenerate(t, 0.5), ArgumentError);
}

TEST(Elementary, Translations) {
  const AdaptedTransform u = elementary_to_adapted(ElementaryTransform::upsilon(2.0, 3.0), 4);
  EXPECT_EQ(u.A0, Complex(2.0));
  EXPECT_EQ(u.A1, Complex(0.0));
  EXPECT_EQ(u.B, (std::vector<Complex>{3.0, 0.0}));

  const Complex c{0.4, 0.7};
  const AdaptedTransform s = elementary_to_adapted(ElementaryTransform::sigma(c, 2), 5);
  EXPECT_EQ(s.A0, Complex(1.0));
  EXPECT_EQ(s.A1, Complex(0.0));
  EXPECT_EQ(s.B, (std::vector<Complex>{1.0, c, 0.0}));

  const AdaptedTransform t = elementary_to_adapted(ElementaryTransform::tau(1.5, 2), 4);
  EXPECT_EQ(t.A0, Complex(1.0));
  EXPECT_EQ(t.A1, Complex(0.0));
  EXPECT_EQ(t.B, (std::vector<Complex>{1.0, 0.0}));
}

TEST(Elementary, PreservesParams) {
  EXPECT_TRUE(preserves_params(ElementaryTransform::tau(1.0, 2),
                               from_vector(4, std::vector<Complex>{1, 0, 1, 1})));
  EXPECT_TRUE(preserves_params(ElementaryTransform::sigma(3.0, 5), random_params(6, std::nullopt, 2)));
  ExtensionParams p = random_params(5, std::nullopt, 3);
  p.b11 = 1.0;
  EXPECT_FALSE(preserves_params(ElementaryTransform::tau(1.0, 1), p));
}

TEST(Elementary, TailTriviality) {
  for (int n = 4; n <= 8; ++n)
    for (std::uint64_t s = 0; s < 5; ++s) EXPECT_TRUE(verify_tail_triviality(n, s)) << n;
}

TEST(Elementary, MatrixMatchesReducedForm) {
  std::mt19937_64 rng(9);
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    for (const ElementaryTransform& e :
         {ElementaryTransform::upsilon(oracle::draw(rng), oracle::draw(rng)),
          ElementaryTransform::sigma(oracle::draw(rng), 2), ElementaryTransform::tau(0.3, 1)}) {
      const ExtensionParams full = read_params(change_basis(build_table(p), elementary_matrix(e, p)));
      EXPECT_LT(params_distance(full, act_on_params(elementary_to_adapted(e, n), p)), 1e-9) << n;
    }
  }
}

TEST(Decompose, RebuildsTransform) {
  std::mt19937_64 rng(10);
  for (int n = 4; n <= 8; ++n)
    for (int s = 0; s < 20; ++s) {
      const ExtensionParams p = random_params(n, std::nullopt, rng());
      const AdaptedTransform t = random_transform(n, rng, p.b);
      const auto factors = decompose(t);
      ASSERT_EQ(static_cast<int>(factors.size()), n - 1);
      EXPECT_EQ(factors.back().kind, ElementaryKind::upsilon);
      EXPECT_EQ(factors[factors.size() - 2].kind, ElementaryKind::tau);
      EXPECT_LT(params_distance(act_on_params(compose_maps(factors, n), p), act_on_params(t, p)),
                1e-9);
    }
}

TEST(GroupLaw, ComposeMatchesMatrixProduct) {
  std::mt19937_64 rng(12);
  for (int n = 4; n <= 8; ++n)
    for (int s = 0; s < 20; ++s) {
      const ExtensionParams p = random_params(n, std::nullopt, rng());
      const AdaptedTransform f = random_transform(n, rng, p.b);
      const ExtensionParams q = act_on_params(f, p);
      const AdaptedTransform h = random_transform(n, rng, q.b);
      const AdaptedTransform fh = compose(f, h);
      EXPECT_LT(params_distance(act_on_params(fh, p), act_on_params(h, q)), 1e-9) << n;
      // The product keeps tail components the reduced form drops; the
      // reduced coordinates and the induced parameters agree.
      const Matrix prod = adapted_matrix(f, p) * adapted_matrix(h, q);
      const double scale = prod.cwiseAbs().maxCoeff();
      EXPECT_LT(std::abs(prod(0, 0) - fh.A0) + std::abs(prod(1, 0) - fh.A1), 1e-9 * scale);
      EXPECT_LT(std::abs(prod(0, 1)), 1e-9 * scale);
      for (int k = 1; k <= n - 2; ++k) EXPECT_LT(std::abs(prod(k, 1) - fh.B[k - 1]), 1e-9 * scale);
      const ExtensionParams via = read_params(change_basis(build_table(p), prod));
      EXPECT_LT(params_distance(via, act_on_params(fh, p)), 1e-8) << n;
    }
}

TEST(GroupLaw, InverseAndIdentity) {
  std::mt19937_64 rng(13);
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const AdaptedTransform t = random_transform(n, rng, p.b);
    const ExtensionParams q = act_on_params(t, p);
    EXPECT_LT(params_distance(act_on_params(inverse(t), q), p), 1e-9) << n;
    const AdaptedTransform e = compose(t, inverse(t));
    EXPECT_LT(std::abs(e.A0 - 1.0) + std::abs(e.A1), 1e-12);
    EXPECT_LT(std::abs(e.B[0] - 1.0), 1e-12);
    for (std::size_t k = 1; k < e.B.size(); ++k) EXPECT_LT(std::abs(e.B[k]), 1e-9);
  }
}

TEST(ReadParams, RoundTrip) {
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, 14);
    EXPECT_EQ(to_vector(read_params(build_table(p))), to_vector(p));
  }
  EXPECT_EQ(to_vector(read_params(build_table(from_vector(4, std::vector<Complex>(4))))),
            std::vector<Complex>(4));
}

TEST(ReadParams, ShapeErrorNamesEntry) {
  StructureTensor t = build_table(random_params(4, std::nullopt, 15));
  t.set(1, 0, 3, 0.1);
  try {
    read_params(t);
    FAIL() << "expected ShapeError";
  } catch (const ShapeError& e) {
    ASSERT_EQ(e.entries().size(), 1u);
    EXPECT_EQ(e.entries()[0], (std::array<int, 3>{1, 0, 3}));
  }
}

TEST(InducedMatrix, MatchesAdaptedMatrix) {
  std::mt19937_64 rng(16);
  const ExtensionParams p = random_params(6, std::nullopt, 1);
  const AdaptedTransform t = random_transform(6, rng);
  const Matrix g = adapted_matrix(t, p);
  EXPECT_LT((induced_matrix(build_table(p), g.col(0), g.col(1)) - g).norm(), 1e-12 * g.norm());
}
