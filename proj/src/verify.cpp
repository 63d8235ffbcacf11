#include "leibext/verify.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <cmath>
#include <iomanip>
#include <map>
#include <random>
#include <sstream>
#include <thread>

#include "leibext/adapted.hpp"
#include "leibext/algebra.hpp"
#include "leibext/classification.hpp"
#include "leibext/constraints.hpp"
#include "leibext/errors.hpp"
#include "leibext/json_io.hpp"

namespace leibext {

int VerificationReport::passed() const {
  return static_cast<int>(std::count_if(checks.begin(), checks.end(),
                                        [](const CheckResult& c) { return c.pass; }));
}

namespace {

using Rng = std::mt19937_64;

std::uint64_t fnv1a(std::uint64_t seed, const std::string& id) {
  std::uint64_t h = 1469598103934665603ULL;
  const auto mix = [&h](unsigned char c) {
    h ^= c;
    h *= 1099511628211ULL;
  };
  for (int i = 0; i < 8; ++i) mix(static_cast<unsigned char>(seed >> (8 * i)));
  for (char c : id) mix(static_cast<unsigned char>(c));
  return h;
}

Complex draw(Rng& rng) {
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  const double r = mag(rng);
  return std::polar(r, ang(rng));
}

AdaptedTransform random_transform(int n, Rng& rng) {
  AdaptedTransform t;
  t.n = n;
  t.A0 = draw(rng);
  t.A1 = draw(rng);
  t.B.resize(n - 2);
  for (auto& z : t.B) z = draw(rng);
  return t;
}

// Transform that stays away from the degenerate locus A0 + A1 b = 0.
AdaptedTransform random_valid_transform(const ExtensionParams& p, Rng& rng) {
  for (;;) {
    AdaptedTransform t = random_transform(p.n, rng);
    if (std::abs(t.A0 + t.A1 * p.b) >= 0.1) return t;
  }
}

std::string dump(const ExtensionParams& p) { return to_json(p).dump(); }
std::string dump(const AdaptedTransform& t) { return to_json(t).dump(); }

// Tracks the worst value and the first failure's witness.
struct Tally {
  double worst = 0.0;
  bool pass = true;
  std::string witness;

  void record(double value, double limit, const std::function<std::string()>& describe) {
    if (!(value <= limit)) {
      if (pass) witness = describe();
      pass = false;
    }
    if (std::isnan(value)) worst = value;
    else if (!std::isnan(worst)) worst = std::max(worst, value);
  }
  void fail(const std::string& why) {
    if (pass) witness = why;
    pass = false;
  }
};

using CheckFn = std::function<CheckResult(Rng&, int trials, const VerifyHooks&)>;

struct RegisteredCheck {
  std::string id;
  int n;
  CheckFn fn;
};

CheckResult finish(const Tally& t, int trials, const std::string& ok_note) {
  CheckResult r;
  r.trials = trials;
  r.max_residual = t.worst;
  r.pass = t.pass;
  r.notes = t.pass ? ok_note : t.witness;
  return r;
}

CheckResult leibniz_validity(int n, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const StructureTensor table = build_table(p);
    const double r = leibniz_residual(table) / std::max(1.0, table.max_abs());
    t.record(r, 1e-9, [&] { return "params " + dump(p); });
  }
  return finish(t, trials, "residual <= 1e-9 * scale");
}

CheckResult filiform_series(int n, Rng& rng, int trials) {
  Tally t;
  std::vector<int> expected{n + 1};
  for (int k = n - 1; k >= 0; --k) expected.push_back(k);
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const StructureTensor table = build_table(p);
    const SeriesProfile prof = lower_central_series(table);
    if (prof.dims != expected || !is_filiform(table)) t.fail("series mismatch for " + dump(p));
  }
  const SeriesProfile mu = lower_central_series(build_mu(n));
  std::vector<int> mu_expected{n + 1};
  for (int k = n - 1; k >= 0; --k) mu_expected.push_back(k);
  if (mu.dims != mu_expected) t.fail("mu_n series mismatch");
  t.record(leibniz_residual(build_mu(n)), 0.0, [] { return std::string("mu_n not Leibniz"); });
  return finish(t, trials, "dims L^i = n+1-i for i >= 2");
}

CheckResult constraint_reduction(int n, Rng& rng, int trials, const VerifyHooks& hooks) {
  Tally t;
  const ConstraintReport rep = solve_leibniz_constraints(n);
  if (rep.free_count != arity(n)) {
    t.fail("free_count " + std::to_string(rep.free_count) + " != " + std::to_string(arity(n)));
  }
  if (!rep.signs_consistent) t.fail("inconsistent sign relations");
  std::vector<std::string> want{"b00", "b01", "b11"};
  for (int j = 1; j <= even_slot_count(n); ++j) want.push_back("b1" + std::to_string(2 * j));
  if (n % 2 == 1) want.push_back("b1" + std::to_string(n - 1));
  std::vector<std::string> got = rep.free_unknowns;
  std::sort(got.begin(), got.end());
  std::sort(want.begin(), want.end());
  if (got != want) t.fail("free unknowns differ from the first-row parameters");
  for (const auto& dir : rep.free_basis) {
    for (int i = 1; i + 1 <= n - 1; ++i)
      for (int j = 1; j + 1 <= n - 1; ++j) {
        const double lhs = ansatz_entry(rep, dir, i + 1, j);
        const double rhs = -ansatz_entry(rep, dir, i, j + 1);
        t.record(std::abs(lhs - rhs), 1e-9, [&] {
          return "b_{" + std::to_string(i + 1) + "," + std::to_string(j) + "} != -b_{" +
                 std::to_string(i) + "," + std::to_string(j + 1) + "}";
        });
      }
    for (int s = 3; s < n - 1; s += 2) {
      t.record(std::abs(ansatz_entry(rep, dir, 1, s)), 1e-9,
               [&] { return "b_{1," + std::to_string(s) + "} not forced to zero"; });
    }
  }
  SignTable signs = rep.signs;
  if (hooks.sign_override) {
    if (auto o = hooks.sign_override(n)) signs = *o;
  }
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const StructureTensor table = build_table(p, signs);
    const LeibnizDefect d = leibniz_defect(table);
    t.record(d.residual / std::max(1.0, table.max_abs()), 1e-9, [&] {
      std::ostringstream os;
      os << "Leibniz identity fails at triple (" << d.worst_triple[0] << "," << d.worst_triple[1]
         << "," << d.worst_triple[2] << "), residual " << d.residual;
      return os.str();
    });
  }
  std::ostringstream note;
  note << "free " << rep.free_count << " of " << rep.total_unknowns << ", s(i) =";
  for (int i = 1; i < n; ++i)
    note << ' ' << (!rep.signs.determined[i] ? '?' : rep.signs.sign[i] > 0 ? '+' : '-');
  return finish(t, trials, note.str());
}

CheckResult adapted_form(int n, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const AdaptedTransform tr = random_valid_transform(p, rng);
    const Matrix g = adapted_matrix(tr, p);
    const Complex want = normalizer(tr, p.b);
    t.record(std::abs(g(n, n) - want) / std::abs(want), 1e-9,
             [&] { return "e_n coefficient mismatch for " + dump(p) + " " + dump(tr); });
    try {
      (void)read_params(change_basis(build_table(p), g));
    } catch (const ShapeError& e) {
      t.fail(std::string("image not adapted: ") + e.what());
    }
  }
  return finish(t, trials, "e_n' = A0^{n-2} B1 (A0 + A1 b) e_n; image keeps the table shape");
}

CheckResult isomorphism_criterion(int n, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const AdaptedTransform tr = random_valid_transform(p, rng);
    const double err = relative_distance(act_on_params(tr, p), act_on_params_tensor(tr, p));
    t.record(err, 1e-8, [&] { return "closed form vs tensor action: " + dump(p) + " " + dump(tr); });
  }
  return finish(t, trials, "closed-form action agrees with change_basis");
}

CheckResult general_action_formula(int n, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const AdaptedTransform tr = random_valid_transform(p, rng);
    const double err = relative_distance(act_on_params_general(tr, p), act_on_params_tensor(tr, p));
    t.record(err, 1e-8, [&] { return "general sum vs tensor action: " + dump(p) + " " + dump(tr); });
  }
  return finish(t, trials,
                "double-sum formula agrees with change_basis (B_k = 0 outside 1..n-2, b_{1,odd} = 0)");
}

CheckResult group_law(int n, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const AdaptedTransform t1 = random_valid_transform(p, rng);
    const ExtensionParams p1 = act_on_params(t1, p);
    const AdaptedTransform t2 = random_valid_transform(p1, rng);
    const ExtensionParams seq = act_on_params(t2, p1);
    const AdaptedTransform t12 = compose(t1, t2);
    t.record(relative_distance(seq, act_on_params(t12, p)), 1e-8,
             [&] { return "composition mismatch for " + dump(p) + " " + dump(t1) + " " + dump(t2); });
    const Matrix g = adapted_matrix(t1, p) * adapted_matrix(t2, p1);
    const ExtensionParams via = read_params(change_basis(build_table(p), g));
    t.record(relative_distance(seq, via), 1e-8,
             [&] { return "matrix product mismatch for " + dump(p); });
    t.record(relative_distance(p, act_on_params(inverse(t1), p1)), 1e-8,
             [&] { return "inverse mismatch for " + dump(p) + " " + dump(t1); });
    // Left action law of transport on generic matrices.
    Matrix h(n + 1, n + 1), k(n + 1, n + 1);
    for (int i = 0; i <= n; ++i)
      for (int j = 0; j <= n; ++j) {
        h(i, j) = draw(rng);
        k(i, j) = draw(rng);
      }
    h += Matrix::Identity(n + 1, n + 1) * 4.0;
    k += Matrix::Identity(n + 1, n + 1) * 4.0;
    const StructureTensor base = build_table(p);
    const double scale = std::max(1.0, transport(base, h * k).max_abs());
    t.record(max_abs_difference(transport(base, h * k), transport(transport(base, k), h)) / scale,
             1e-9, [&] { return "transport composition law fails for " + dump(p); });
  }
  return finish(t, trials, "action of compose(t1, t2) equals sequential action and matrix product");
}

CheckResult elementary_decomposition(int n, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(n, std::nullopt, rng());
    const AdaptedTransform tr = random_valid_transform(p, rng);
    const AdaptedTransform rebuilt = compose_maps(decompose(tr), n);
    t.record(relative_distance(act_on_params(tr, p), act_on_params(rebuilt, p)), 1e-8,
             [&] { return "factorization mismatch for " + dump(tr); });
  }
  return finish(t, trials, "sigma_{n-2} o ... o sigma_2 o tau(A1/A0,1) o upsilon(A0,B1) reproduces the action");
}

CheckResult tail_triviality(int n, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const std::uint64_t seed = rng();
    if (!verify_tail_triviality(n, seed)) t.fail("tail transform changed parameters, seed " + std::to_string(seed));
  }
  // Control: tau(a, 1) is not a tail transform.
  ExtensionParams p = random_params(n, SubsetId{n, 1}, rng());
  if (p.b11 != Complex{} && preserves_params(ElementaryTransform::tau(1.0, 1), p)) {
    t.fail("tau(1,1) unexpectedly preserved " + dump(p));
  }
  return finish(t, trials, "tau(a,k>=2), sigma(b,n-1), sigma(b,n) fix all parameters");
}

bool same_vector(const ExtensionParams& a, const ExtensionParams& b, double tol, double* err) {
  const auto x = to_vector(a);
  const auto y = to_vector(b);
  double e = 0.0;
  for (std::size_t i = 0; i < x.size(); ++i)
    e = std::max(e, std::abs(x[i] - y[i]) / std::max(1.0, std::abs(y[i])));
  if (err) *err = e;
  return e <= tol;
}

CheckResult canonical_form(const SubsetId id, Rng& rng, int trials) {
  Tally t;
  const SubsetSpec& spec = subset_spec(id);
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(id.n, id, rng());
    const OrbitLabel label = classify(p);
    if (!(label.subset == id)) {
      t.fail("member " + dump(p) + " classified as " + label.subset.label());
      continue;
    }
    const ExtensionParams want =
        representative_at(id, label.lambda.value_or(Complex{}));
    double err = 0.0;
    same_vector(label.representative, want, 1e-6, &err);
    t.record(err, 1e-6, [&] { return "representative mismatch for " + dump(p); });
    same_vector(act_on_params(label.witness, p), label.representative, 1e-6, &err);
    t.record(err, 1e-6, [&] { return "witness does not reach the representative for " + dump(p); });
    const StructureTensor moved =
        change_basis(build_table(p), adapted_matrix(label.witness, p));
    t.record(max_abs_difference(moved, build_table(label.representative)), 1e-6,
             [&] { return "tensor witness mismatch for " + dump(p); });
    const OrbitLabel again = classify(label.representative);
    same_vector(again.representative, label.representative, 1e-9, &err);
    t.record(err, 1e-9, [&] { return "classification of the representative moved it: " + dump(p); });
  }
  std::ostringstream note;
  note << "members map to " << dump(from_vector(id.n, spec.representative));
  if (spec.parametric) note << " (slot b00 = lambda)";
  return finish(t, trials, note.str());
}

CheckResult orbit_function(const SubsetId id, Rng& rng, int trials) {
  Tally t;
  for (int s = 0; s < trials; ++s) {
    const ExtensionParams p = random_params(id.n, id, rng());
    const AdaptedTransform tr = random_valid_transform(p, rng);
    const ExtensionParams q = act_on_params(tr, p);
    if (!(subset_of(q) == id)) t.fail("subset changed under " + dump(tr) + " for " + dump(p));
    const Complex v = *orbit_invariant(p);
    const auto w = orbit_invariant(q);
    if (!w) {
      t.fail("orbit function vanished on image of " + dump(p));
      continue;
    }
    t.record(std::abs(*w - v) / (1.0 + std::abs(v)), 1e-6,
             [&] { return "orbit function drift for " + dump(p) + " " + dump(tr); });
  }
  std::vector<Complex> lambdas;
  for (int s = 0; s < trials; ++s) {
    std::uniform_real_distribution<double> u(-2.0, 2.0);
    const Complex lambda{u(rng), u(rng)};
    lambdas.push_back(lambda);
    const OrbitLabel label = classify(representative_at(id, lambda));
    if (!label.lambda || !(label.subset == id)) {
      t.fail("representative at lambda left the subset");
      continue;
    }
    t.record(std::abs(*label.lambda - lambda), 1e-9,
             [&] { return "lambda round trip failed at " + to_json(lambda).dump(); });
  }
  for (std::size_t s = 1; s < lambdas.size(); ++s) {
    if (isomorphic(representative_at(id, lambdas[s - 1]), representative_at(id, lambdas[s])).isomorphic) {
      t.fail("distinct lambda reported isomorphic");
    }
  }
  return finish(t, trials, "orbit function constant along orbits; every lambda is attained");
}

CheckResult separation(int n, Rng& rng, int trials) {
  Tally t;
  const auto reps = representatives(n);
  std::uniform_real_distribution<double> u(-2.0, 2.0);
  std::vector<ExtensionParams> points;
  for (const auto& r : reps) {
    ExtensionParams p = r.params;
    if (r.parametric) p.b00 = Complex{u(rng), u(rng)};
    points.push_back(p);
    if (!(subset_of(p) == r.subset)) t.fail("representative of " + r.subset.label() + " is outside it");
  }
  for (std::size_t i = 0; i < points.size(); ++i)
    for (std::size_t j = i + 1; j < points.size(); ++j)
      if (isomorphic(points[i], points[j]).isomorphic) {
        t.fail(reps[i].subset.label() + " and " + reps[j].subset.label() + " reported isomorphic");
      }
  return finish(t, trials, std::to_string(reps.size()) + " representatives pairwise non-isomorphic");
}

CheckResult exceptional_strata(int n, Rng& rng, int trials) {
  Tally t;
  const auto extra = exceptional_representatives(n);
  for (int s = 0; s < trials; ++s) {
    for (const auto& e : extra) {
      const AdaptedTransform tr = random_valid_transform(e.params, rng);
      const ExtensionParams p = act_on_params(tr, e.params);
      const OrbitLabel label = classify(p);
      if (!label.exceptional || !(label.subset == e.subset)) {
        t.fail("point on " + e.locus + " not flagged: " + dump(p));
        continue;
      }
      double err = 0.0;
      same_vector(label.representative, e.params, 1e-6, &err);
      t.record(err, 1e-6, [&] { return "locus " + e.locus + " missed its normal form: " + dump(p); });
      same_vector(act_on_params(label.witness, p), e.params, 1e-6, &err);
      t.record(err, 1e-6, [&] { return "witness fails on " + dump(p); });
    }
  }
  for (std::size_t i = 0; i < extra.size(); ++i) {
    for (std::size_t j = i + 1; j < extra.size(); ++j)
      if (isomorphic(extra[i].params, extra[j].params).isomorphic) t.fail("exceptional orbits merge");
    for (const auto& r : representatives(n)) {
      ExtensionParams q = r.params;
      if (r.parametric) q.b00 = draw(rng);
      if (isomorphic(extra[i].params, q).isomorphic) {
        t.fail(extra[i].locus + " isomorphic to listed " + r.subset.label());
      }
    }
  }
  return finish(t, trials, std::to_string(extra.size()) + " invariant loci outside the listed normal forms");
}

std::vector<RegisteredCheck> build_registry() {
  std::vector<RegisteredCheck> out;
  for (int n = kMinN; n <= kMaxN; ++n) {
    const std::string p = "n" + std::to_string(n) + ".";
    const auto add = [&](const std::string& name, CheckFn fn) { out.push_back({p + name, n, std::move(fn)}); };
    add("leibniz_validity", [n](Rng& r, int k, const VerifyHooks&) { return leibniz_validity(n, r, k); });
    add("filiform_series", [n](Rng& r, int k, const VerifyHooks&) { return filiform_series(n, r, k); });
    add("constraint_reduction",
        [n](Rng& r, int k, const VerifyHooks& h) { return constraint_reduction(n, r, k, h); });
    add("adapted_form", [n](Rng& r, int k, const VerifyHooks&) { return adapted_form(n, r, k); });
    add("isomorphism_criterion",
        [n](Rng& r, int k, const VerifyHooks&) { return isomorphism_criterion(n, r, k); });
    add("general_action_formula",
        [n](Rng& r, int k, const VerifyHooks&) { return general_action_formula(n, r, k); });
    add("group_law", [n](Rng& r, int k, const VerifyHooks&) { return group_law(n, r, k); });
    add("elementary_decomposition",
        [n](Rng& r, int k, const VerifyHooks&) { return elementary_decomposition(n, r, k); });
    add("tail_triviality", [n](Rng& r, int k, const VerifyHooks&) { return tail_triviality(n, r, k); });
    add("separation", [n](Rng& r, int k, const VerifyHooks&) { return separation(n, r, k); });
    if (n % 2 == 1) {
      add("exceptional_strata",
          [n](Rng& r, int k, const VerifyHooks&) { return exceptional_strata(n, r, k); });
    }
    for (const auto& spec : subset_table(n)) {
      const SubsetId id{n, spec.index};
      const std::string u = "U" + std::to_string(spec.index) + ".";
      add(u + "canonical_form", [id](Rng& r, int k, const VerifyHooks&) { return canonical_form(id, r, k); });
      if (spec.parametric) {
        add(u + "orbit_function", [id](Rng& r, int k, const VerifyHooks&) { return orbit_function(id, r, k); });
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.id < b.id; });
  return out;
}

const std::vector<RegisteredCheck>& registry() {
  static const std::vector<RegisteredCheck> r = build_registry();
  return r;
}

std::vector<std::string> split_lines(const char* text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream words(line);
    std::string w;
    while (words >> w) out.push_back(w);
  }
  return out;
}

}  // namespace

std::vector<std::string> check_registry() {
  std::vector<std::string> ids;
  for (const auto& c : registry()) ids.push_back(c.id);
  return ids;
}

const std::vector<std::string>& check_manifest() {
  // Every check the suite must run, independent of the registry.
  static const std::vector<std::string> manifest = [] {
    auto ids = split_lines(R"(
n4.leibniz_validity n4.filiform_series n4.constraint_reduction n4.adapted_form
n4.isomorphism_criterion n4.general_action_formula n4.group_law n4.elementary_decomposition
n4.tail_triviality n4.separation
n4.U1.canonical_form n4.U1.orbit_function n4.U2.canonical_form n4.U3.canonical_form
n4.U4.canonical_form n4.U5.canonical_form n4.U6.canonical_form n4.U7.canonical_form
n4.U8.canonical_form n4.U9.canonical_form
n5.leibniz_validity n5.filiform_series n5.constraint_reduction n5.adapted_form
n5.isomorphism_criterion n5.general_action_formula n5.group_law n5.elementary_decomposition
n5.tail_triviality n5.separation n5.exceptional_strata
n5.U1.canonical_form n5.U1.orbit_function n5.U2.canonical_form n5.U3.canonical_form
n5.U4.canonical_form n5.U5.canonical_form n5.U5.orbit_function n5.U6.canonical_form
n5.U7.canonical_form n5.U8.canonical_form n5.U9.canonical_form n5.U10.canonical_form
n5.U11.canonical_form n5.U12.canonical_form n5.U13.canonical_form
n6.leibniz_validity n6.filiform_series n6.constraint_reduction n6.adapted_form
n6.isomorphism_criterion n6.general_action_formula n6.group_law n6.elementary_decomposition
n6.tail_triviality n6.separation
n6.U1.canonical_form n6.U1.orbit_function n6.U2.canonical_form n6.U2.orbit_function
n6.U3.canonical_form n6.U4.canonical_form n6.U5.canonical_form n6.U6.canonical_form
n6.U7.canonical_form n6.U8.canonical_form n6.U9.canonical_form n6.U10.canonical_form
n6.U11.canonical_form n6.U12.canonical_form n6.U13.canonical_form
n7.leibniz_validity n7.filiform_series n7.constraint_reduction n7.adapted_form
n7.isomorphism_criterion n7.general_action_formula n7.group_law n7.elementary_decomposition
n7.tail_triviality n7.separation n7.exceptional_strata
n7.U1.canonical_form n7.U1.orbit_function n7.U2.canonical_form n7.U3.canonical_form
n7.U4.canonical_form n7.U5.canonical_form n7.U5.orbit_function n7.U6.canonical_form
n7.U7.canonical_form n7.U8.canonical_form n7.U9.canonical_form n7.U9.orbit_function
n7.U10.canonical_form n7.U11.canonical_form n7.U12.canonical_form n7.U13.canonical_form
n7.U14.canonical_form n7.U15.canonical_form n7.U16.canonical_form n7.U17.canonical_form
n8.leibniz_validity n8.filiform_series n8.constraint_reduction n8.adapted_form
n8.isomorphism_criterion n8.general_action_formula n8.group_law n8.elementary_decomposition
n8.tail_triviality n8.separation
n8.U1.canonical_form n8.U1.orbit_function n8.U2.canonical_form n8.U3.canonical_form
n8.U4.canonical_form n8.U5.canonical_form n8.U5.orbit_function n8.U6.canonical_form
n8.U7.canonical_form n8.U8.canonical_form n8.U9.canonical_form n8.U9.orbit_function
n8.U10.canonical_form n8.U11.canonical_form n8.U12.canonical_form n8.U13.canonical_form
n8.U14.canonical_form n8.U15.canonical_form n8.U16.canonical_form n8.U17.canonical_form
)");
    std::sort(ids.begin(), ids.end());
    return ids;
  }();
  return manifest;
}

VerificationReport verify_all(std::uint64_t seed, int trials, const VerifyHooks& hooks) {
  if (trials < 1) throw ArgumentError("verify_all: trials must be at least 1");
  const auto& checks = registry();
  VerificationReport report;
  report.seed = seed;
  report.trials = trials;
  report.checks.resize(checks.size());

  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    for (std::size_t i = next++; i < checks.size(); i = next++) {
      Rng rng(fnv1a(seed, checks[i].id));
      CheckResult r;
      try {
        r = checks[i].fn(rng, trials, hooks);
      } catch (const std::exception& e) {
        r.trials = trials;
        r.pass = false;
        r.notes = std::string("exception: ") + e.what();
      }
      r.id = checks[i].id;
      r.n = checks[i].n;
      report.checks[i] = std::move(r);
    }
  };
  unsigned threads = hooks.threads != 0 ? hooks.threads : std::thread::hardware_concurrency();
  threads = std::clamp(threads, 1u, 16u);
  std::vector<std::thread> pool;
  for (unsigned i = 1; i < threads; ++i) pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
  return report;
}

std::string report_json(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

std::string report_table(const VerificationReport& report) {
  std::size_t width = 8;
  for (const auto& c : report.checks) width = std::max(width, c.id.size());
  std::ostringstream os;
  os << std::left << std::setw(static_cast<int>(width)) << "check" << "  result  trials  max_residual  notes\n";
  for (const auto& c : report.checks) {
    std::ostringstream res;
    res << std::scientific << std::setprecision(2) << c.max_residual;
    os << std::left << std::setw(static_cast<int>(width)) << c.id << "  " << std::setw(6)
       << (c.pass ? "pass" : "FAIL") << "  " << std::right << std::setw(6) << c.trials << "  "
       << std::setw(12) << res.str() << "  " << c.notes << "\n";
  }
  os << report.passed() << "/" << report.total() << " checks passed\n";
  return os.str();
}

}  // namespace leibext
