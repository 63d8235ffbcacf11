#include <gtest/gtest.h>

#include <sstream>

#include "leibext/algebra.hpp"
#include "leibext/classification.hpp"
#include "leibext/cli.hpp"
#include "leibext/extension.hpp"
#include "leibext/json_io.hpp"

using namespace leibext;

namespace {

struct CliResult {
  int code;
  std::string out, err;
};

CliResult run(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST(Json, ComplexPairs) {
  EXPECT_EQ(to_json(Complex{1.5, -2.0}), Json::array({1.5, -2.0}));
  EXPECT_EQ(complex_from_json(Json::array({0.25, 3.0})), Complex(0.25, 3.0));
  EXPECT_EQ(complex_from_json(Json(2.0)), Complex(2.0, 0.0));
  EXPECT_THROW(complex_from_json(Json::array({1.0})), FormatError);
  EXPECT_THROW(complex_from_json(Json("x")), FormatError);
}

TEST(Json, RoundTrips) {
  for (int n = 4; n <= 8; ++n) {
    const ExtensionParams p = random_params(n, std::nullopt, 31);
    EXPECT_EQ(to_vector(params_from_json(to_json(p))), to_vector(p));
    const StructureTensor t = build_table(p);
    EXPECT_EQ(max_abs_difference(tensor_from_json(to_json(t)), t), 0.0);
    AdaptedTransform a = identity_transform(n);
    a.A1 = Complex{0.5, 0.25};
    const AdaptedTransform b = transform_from_json(to_json(a));
    EXPECT_EQ(b.A1, a.A1);
    EXPECT_EQ(b.B, a.B);
  }
}

TEST(Json, MissingFieldIsFormatError) {
  Json j = to_json(random_params(4, std::nullopt, 1));
  j.erase("b11");
  EXPECT_THROW(params_from_json(j), FormatError);
}

TEST(Cli, ClassifyListedNormalForm) {
  const Json p = to_json(from_vector(4, std::vector<Complex>{0, 0, 0, 1}));
  const CliResult r = run({"classify"}, p.dump());
  ASSERT_EQ(r.code, cli::kExitOk) << r.err;
  const Json out = Json::parse(r.out);
  EXPECT_EQ(out["subset"], "U_8");
  EXPECT_EQ(to_vector(params_from_json(out["representative"])), (std::vector<Complex>{0, 0, 0, 1}));
}

TEST(Cli, BuildCheckClassifyRoundTrip) {
  const ExtensionParams p = random_params(7, std::nullopt, 5);
  const CliResult built = run({"build"}, to_json(p).dump());
  ASSERT_EQ(built.code, 0) << built.err;
  EXPECT_EQ(Json::parse(built.out), to_json(build_table(p)));

  const CliResult checked = run({"check"}, built.out);
  ASSERT_EQ(checked.code, 0) << checked.err;
  const Json c = Json::parse(checked.out);
  EXPECT_LE(c["leibniz_residual"].get<double>(), 1e-9);
  EXPECT_TRUE(c["filiform"].get<bool>());

  const CliResult classified = run({"classify"}, built.out);
  ASSERT_EQ(classified.code, 0) << classified.err;
  EXPECT_EQ(Json::parse(classified.out), to_json(classify(p)));
}

TEST(Cli, IsomorphicWithItself) {
  const ExtensionParams p = from_vector(4, std::vector<Complex>{1, 0, 1, 1});
  const Json both = {{"p", to_json(p)}, {"q", to_json(p)}};
  const CliResult r = run({"isomorphic"}, both.dump());
  ASSERT_EQ(r.code, 0) << r.err;
  const Json out = Json::parse(r.out);
  EXPECT_TRUE(out["isomorphic"].get<bool>());
  EXPECT_EQ(out["witness"], to_json(identity_transform(4)));
}

TEST(Cli, ActMatchesLibrary) {
  const ExtensionParams p = random_params(6, std::nullopt, 2);
  AdaptedTransform t = identity_transform(6);
  t.A0 = 2.0;
  t.A1 = Complex{0.0, 1.0};
  const Json both = {{"params", to_json(p)}, {"transform", to_json(t)}};
  const CliResult r = run({"act"}, both.dump());
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(Json::parse(r.out), to_json(act_on_params(t, p)));
}

TEST(Cli, RepresentativesAndConstraints) {
  const CliResult r = run({"representatives", "--n", "7"});
  ASSERT_EQ(r.code, 0);
  EXPECT_EQ(Json::parse(r.out)["subsets"].size(), 17u);
  const CliResult d = run({"derive-constraints", "--n", "5"});
  ASSERT_EQ(d.code, 0);
  EXPECT_EQ(Json::parse(d.out)["free_count"], 5);
  const CliResult t = run({"representatives", "--n", "4", "--format", "table"});
  EXPECT_NE(t.out.find("U_9"), std::string::npos);
}

TEST(Cli, ExitCodes) {
  EXPECT_EQ(run({"classify"}, "{not json").code, cli::kExitMalformedInput);
  EXPECT_EQ(run({"classify"}, R"({"n": 4})").code, cli::kExitMalformedInput);
  EXPECT_EQ(run({"frobnicate"}).code, cli::kExitMalformedInput);
  EXPECT_EQ(run({"representatives", "--n", "12"}).code, cli::kExitDomainError);
  const Json bad = {{"n", 6}, {"b00", 0}, {"b01", 0}, {"b11", 0}, {"b_even", {1, 1}}, {"b", 1}};
  EXPECT_EQ(run({"build"}, bad.dump()).code, cli::kExitDomainError);
  AdaptedTransform t = identity_transform(5);
  t.A0 = 0.0;
  const Json act = {{"params", to_json(random_params(5, std::nullopt, 1))}, {"transform", to_json(t)}};
  EXPECT_EQ(run({"act"}, act.dump()).code, cli::kExitDomainError);
}

TEST(Cli, VerifySuiteIsDeterministic) {
  const CliResult a = run({"verify-paper", "--seed", "3", "--trials", "1"});
  const CliResult b = run({"verify-paper", "--seed", "3", "--trials", "1"});
  EXPECT_EQ(a.code, cli::kExitOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(Json::parse(a.out)["checks"].size(), 132u);
}
