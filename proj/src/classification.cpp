#include "leibext/classification.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "leibext/errors.hpp"
#include "leibext/normalization.hpp"

namespace leibext {

Complex delta(const ExtensionParams& p) { return p.b01 * p.b01 - 4.0 * p.b00 * p.b11; }

namespace {

std::vector<Quantity> quantities(int n) {
  std::vector<Quantity> q{Quantity::b00, Quantity::b01, Quantity::b11};
  const Quantity even[] = {Quantity::b12, Quantity::b14, Quantity::b16};
  for (int j = 0; j < even_slot_count(n); ++j) q.push_back(even[j]);
  if (n % 2 == 1) q.push_back(Quantity::b);
  q.push_back(Quantity::delta);
  return q;
}

double threshold(const ExtensionParams& p, Quantity q, const Tolerance& tol) {
  const double s = param_scale(p);
  return tol.abs + tol.rel * (q == Quantity::delta ? s * s : s);
}

// |x| negligible against the larger of the terms it was formed from.
bool cancels(Complex x, double a, double b, const Tolerance& tol) {
  return std::abs(x) <= tol.abs + tol.rel * std::max(a, b);
}

double flag_margin(const ExtensionParams& p, const Tolerance& tol) {
  const double s = param_scale(p);
  if (s == 0.0) return 1.0;
  double margin = 1.0;
  for (Quantity q : quantities(p.n)) {
    if (is_zero_quantity(p, q, tol)) continue;
    const double ref = q == Quantity::delta ? s * s : s;
    margin = std::min(margin, std::abs(quantity_value(p, q)) / ref);
  }
  return margin;
}

std::vector<Complex> as_vector(const std::vector<Complex>& rep) { return rep; }

struct Canonical {
  AdaptedTransform witness;
  std::vector<Complex> representative;
  bool exceptional = false;
};

// Index of the top nonzero first-row coefficient: n-1 when b != 0 (odd n),
// otherwise the largest even s with b_{1,s} != 0, otherwise 0.
int top_slot(const ExtensionParams& p, const Tolerance& tol) {
  if (p.n % 2 == 1 && !is_zero_quantity(p, Quantity::b, tol)) return p.n - 1;
  const Quantity even[] = {Quantity::b12, Quantity::b14, Quantity::b16};
  for (int j = even_slot_count(p.n); j >= 1; --j)
    if (!is_zero_quantity(p, even[j - 1], tol)) return 2 * j;
  return 0;
}

// Clears b_{1,2j} below the top slot with B_m, m = top - 2j + 1; b_{1,2j}' is
// affine in B_m once the larger-j slots are fixed.
AdaptedTransform clear_lower_slots(const ExtensionParams& p, int top) {
  AdaptedTransform t = identity_transform(p.n);
  for (int j = top / 2 - 1; j >= 1; --j) {
    const int m = top - 2 * j + 1;
    t.B[m - 1] = 0.0;
    const Complex v0 = act_on_params(t, p).b_even[j - 1];
    t.B[m - 1] = 1.0;
    const Complex v1 = act_on_params(t, p).b_even[j - 1];
    t.B[m - 1] = -v0 / (v1 - v0);
  }
  return t;
}

AdaptedTransform reduced(int n, Complex A0, Complex A1, Complex B1) {
  AdaptedTransform t = identity_transform(n);
  t.A0 = A0;
  t.A1 = A1;
  t.B[0] = B1;
  return t;
}

std::vector<Complex> odd_top_vector(int n, double b00, double b01, double b11) {
  std::vector<Complex> v(arity(n), Complex{});
  v[0] = b00;
  v[1] = b01;
  v[2] = b11;
  v.back() = 1.0;
  return v;
}

Canonical closed_form(const ExtensionParams& p, const SubsetSpec& spec, const Tolerance& tol) {
  const int n = p.n;
  const auto zero = [&](Quantity q) { return is_zero_quantity(p, q, tol); };
  const int top = top_slot(p, tol);
  const bool oddb = n % 2 == 1 && top == n - 1;
  const Complex top_value = top == 0 ? Complex{} : (oddb ? p.b : p.b_even[top / 2 - 1]);
  const int k = top / 2;

  Canonical out;
  out.representative = as_vector(spec.representative);
  const AdaptedTransform sigma = top > 0 ? clear_lower_slots(p, top) : identity_transform(n);

  AdaptedTransform t2 = identity_transform(n);
  const Complex b = p.b;
  if (!zero(Quantity::b11)) {
    const Complex A1_ratio = -p.b01 / (2.0 * p.b11);
    if (oddb) {
      const Complex A0 = principal_root(p.b11 / b, n - 2);
      const Complex rho = 2.0 * p.b11 - b * p.b01;
      if (!cancels(rho, std::abs(2.0 * p.b11), std::abs(b * p.b01), tol)) {
        const Complex N0 = A0 * rho / (2.0 * p.b11);
        t2 = reduced(n, A0, A0 * A1_ratio, N0 / b);
      } else {
        out.exceptional = true;
        Complex s{};
        if (!zero(Quantity::delta)) {
          s = (principal_root(-(b * b * p.b00 - p.b11) / p.b11, 2) - 1.0) / b;
          out.representative = odd_top_vector(n, 0, 2, 1);
        } else {
          out.representative = odd_top_vector(n, 1, 2, 1);
        }
        t2 = reduced(n, A0, s * A0, A0 * (1.0 + s * b) / b);
      }
    } else if (top > 0) {
      const Complex a = principal_root(p.b11 / top_value, 2 * k - 1);
      t2 = reduced(n, a, a * A1_ratio, ipow(a, n - 1) / p.b11);
    } else {
      const Complex a =
          zero(Quantity::delta) ? Complex{1.0} : principal_root(-delta(p) / 4.0, 2 * n - 4);
      t2 = reduced(n, a, a * A1_ratio, ipow(a, n - 1) / p.b11);
    }
  } else if (!zero(Quantity::b01)) {
    if (oddb) {
      const Complex r = p.b01 - b * p.b00;
      if (!cancels(r, std::abs(p.b01), std::abs(b * p.b00), tol)) {
        const Complex ratio = r / p.b01;
        const Complex A0 = principal_root(p.b01 / ratio, n - 2);
        t2 = reduced(n, A0, -A0 * p.b00 / p.b01, A0 * ratio / b);
      } else {
        out.exceptional = true;
        out.representative = odd_top_vector(n, 1, 1, 0);
        const Complex A0 = principal_root(p.b01, n - 2);
        t2 = reduced(n, A0, 0.0, A0 / b);
      }
    } else {
      const Complex A0 = principal_root(p.b01, n - 2);
      const Complex B1 = top > 0 ? ipow(A0, n - 2 * k) / top_value : Complex{1.0};
      t2 = reduced(n, A0, -A0 * p.b00 / p.b01, B1);
    }
  } else if (!zero(Quantity::b00)) {
    if (oddb) {
      const Complex A0 = principal_root(b * p.b00, n - 2);
      t2 = reduced(n, A0, 0.0, A0 / b);
    } else if (top > 0) {
      const Complex a = principal_root(p.b00 * top_value, 2 * n - 2 * k - 3);
      t2 = reduced(n, a, 0.0, ipow(a, 3 - n) * p.b00);
    } else {
      t2 = reduced(n, 1.0, 0.0, p.b00);
    }
  } else if (oddb) {
    t2 = reduced(n, 1.0, 0.0, 1.0 / b);
  } else if (top > 0) {
    t2 = reduced(n, 1.0, 0.0, 1.0 / top_value);
  }
  out.witness = compose(sigma, t2);
  return out;
}

bool matches(const std::vector<Complex>& got, const std::vector<Complex>& want, bool skip_first,
             double tol) {
  double scale = 1.0;
  for (const auto& z : want) scale = std::max(scale, std::abs(z));
  for (std::size_t i = skip_first ? 1 : 0; i < want.size(); ++i)
    if (std::abs(got[i] - want[i]) > tol * scale) return false;
  return true;
}

}  // namespace

bool is_zero_quantity(const ExtensionParams& p, Quantity q, const Tolerance& tol) {
  return std::abs(quantity_value(p, q)) <= threshold(p, q, tol);
}

SubsetId subset_of(const ExtensionParams& p, const Tolerance& tol) {
  validate(p);
  const auto& table = subset_table(p.n);
  for (const auto& spec : table) {
    bool ok = true;
    for (const auto& c : spec.conditions) {
      if (is_zero_quantity(p, c.quantity, tol) == c.nonzero) {
        ok = false;
        break;
      }
    }
    if (ok) return {p.n, spec.index};
  }
  throw Error("subset_of: parameters match no subset");
}

std::optional<Complex> orbit_invariant(const ExtensionParams& p, const Tolerance& tol) {
  const SubsetId id = subset_of(p, tol);
  if (!subset_spec(id).parametric) return std::nullopt;
  const Complex d = delta(p);
  const auto ratio_pow = [&](Complex num, int e) { return ipow(num / p.b11, e); };
  const auto odd_u1 = [&]() -> Complex {
    const Complex den = p.b01 * p.b - 2.0 * p.b11;
    if (cancels(den, std::abs(p.b01 * p.b), std::abs(2.0 * p.b11), tol)) {
      throw DomainError("orbit function undefined: b01*b - 2*b11 vanishes");
    }
    return d * p.b * p.b / (den * den);
  };
  switch (p.n * 100 + id.index) {
    case 401: return ratio_pow(p.b_even[0], 4) * d;
    case 501: return odd_u1();
    case 505: return ratio_pow(p.b_even[0], 6) * d;
    case 601: return ratio_pow(p.b_even[1], 8) * d * d * d;
    case 602: return ratio_pow(p.b_even[0], 8) * d;
    case 701: return odd_u1();
    case 705: return ratio_pow(p.b_even[1], 10) * d * d * d;
    // Exponent 1 on delta: (b12/b11)^10 scales as A0^10 and delta as A0^-10.
    case 709: return ratio_pow(p.b_even[0], 10) * d;
    case 801: return ratio_pow(p.b_even[2], 12) * ipow(d, 5);
    case 805: {
      if (is_zero_quantity(p, Quantity::delta, tol)) {
        throw DomainError("orbit function undefined: delta vanishes");
      }
      return ipow(p.b11 / p.b_even[1], 4) / d;
    }
    case 809: return ratio_pow(p.b_even[0], 12) * d;
    default: break;
  }
  throw Error("orbit_invariant: no orbit function for " + id.label());
}

OrbitLabel canonicalize(const ExtensionParams& p, const Tolerance& tol, std::uint64_t seed) {
  validate(p);
  const SubsetId id = subset_of(p, tol);
  const SubsetSpec& spec = subset_spec(id);
  Canonical c = closed_form(p, spec, tol);

  const bool parametric = spec.parametric && !c.exceptional;
  ExtensionParams image = act_on_params(c.witness, p);
  std::vector<Complex> got = to_vector(image);
  if (!matches(got, c.representative, parametric, 1e-8)) {
    std::vector<SlotTarget> targets;
    for (int s = parametric ? 1 : 0; s < arity(p.n); ++s) targets.push_back({s, c.representative[s]});
    const NormalizationResult r = solve_normalization(p, targets, seed, c.witness);
    if (!r.converged) {
      std::ostringstream msg;
      msg << "canonicalization failed for " << id.label() << " (n=" << p.n
          << "): best residual " << r.residual << " after " << r.starts_used << " starts";
      throw CanonicalizationError(msg.str());
    }
    c.witness = r.transform;
    image = act_on_params(c.witness, p);
    got = to_vector(image);
  }

  OrbitLabel label;
  label.n = p.n;
  label.subset = id;
  label.exceptional = c.exceptional;
  if (parametric) {
    label.lambda = got[0];
    c.representative[0] = got[0];
  }
  label.representative = from_vector(p.n, c.representative);
  label.witness = c.witness;
  return label;
}

OrbitLabel classify(const ExtensionParams& p, const Tolerance& tol, std::uint64_t seed) {
  OrbitLabel label = canonicalize(p, tol, seed);
  InvariantReport& r = label.invariants;
  r.delta = delta(p);
  for (Quantity q : quantities(p.n)) r.is_zero[quantity_name(q)] = is_zero_quantity(p, q, tol);
  try {
    r.orbit_value = orbit_invariant(p, tol);
  } catch (const DomainError&) {
    r.orbit_value.reset();
  }
  r.canonical_lambda = label.lambda;
  r.flag_margin = flag_margin(p, tol);
  return label;
}

namespace {

// Order m of the scalings upsilon(a, a^{n-1}), a^m = 1, fixing the shape of a
// parametric normal form; lambda moves to a^{4-2n} lambda.
int stabilizer_order(const SubsetId& id) {
  const auto& rep = subset_spec(id).representative;
  const int n = id.n;
  if (n % 2 == 1 && rep.back() != Complex{}) return n - 2;
  for (int j = even_slot_count(n); j >= 1; --j)
    if (rep[2 + j] != Complex{}) return 2 * j - 1;
  return 1;
}

}  // namespace

IsomorphismResult isomorphic(const ExtensionParams& p, const ExtensionParams& q,
                             const Tolerance& tol) {
  validate(p);
  validate(q);
  if (p.n != q.n) throw ArgumentError("isomorphic: dimension mismatch");
  IsomorphismResult out;
  if (relative_distance(p, q) <= tol.rel) {
    out.isomorphic = true;
    out.witness = identity_transform(p.n);
    return out;
  }
  const OrbitLabel lp = canonicalize(p, tol);
  const OrbitLabel lq = canonicalize(q, tol);
  if (!(lp.subset == lq.subset) || lp.exceptional != lq.exceptional) return out;
  if (lp.exceptional &&
      relative_distance(lp.representative, lq.representative) > 1e-9) {
    return out;
  }

  AdaptedTransform link = identity_transform(p.n);
  if (lp.lambda && lq.lambda) {
    const int m = stabilizer_order(lp.subset);
    const double scale = std::max({1.0, std::abs(*lp.lambda), std::abs(*lq.lambda)});
    bool found = false;
    for (int r = 0; r < m && !found; ++r) {
      const Complex a = std::polar(1.0, 2.0 * M_PI * r / m);
      const Complex moved = ipow(a, 4 - 2 * p.n) * *lp.lambda;
      if (std::abs(moved - *lq.lambda) <= 1e-7 * scale) {
        link = reduced(p.n, a, 0.0, ipow(a, p.n - 1));
        found = true;
      }
    }
    if (!found) return out;
  }
  out.isomorphic = true;
  out.witness = compose(compose(lp.witness, link), inverse(lq.witness));
  return out;
}

std::vector<RepresentativeEntry> representatives(int n) {
  std::vector<RepresentativeEntry> out;
  for (const auto& spec : subset_table(n)) {
    out.push_back({{n, spec.index}, from_vector(n, spec.representative), spec.parametric});
  }
  return out;
}

ExtensionParams representative_at(const SubsetId& id, Complex lambda) {
  const SubsetSpec& spec = subset_spec(id);
  std::vector<Complex> v = spec.representative;
  if (spec.parametric) v[0] = lambda;
  return from_vector(id.n, v);
}

std::vector<ExceptionalEntry> exceptional_representatives(int n) {
  if (n < kMinN || n > kMaxN) throw ArgumentError("exceptional_representatives: n out of range");
  if (n % 2 == 0) return {};
  return {
      {{n, 1}, from_vector(n, odd_top_vector(n, 0, 2, 1)), "b*b01 = 2*b11, delta != 0"},
      {{n, 1}, from_vector(n, odd_top_vector(n, 1, 2, 1)), "b*b01 = 2*b11, delta = 0"},
      {{n, 2}, from_vector(n, odd_top_vector(n, 1, 1, 0)), "b*b00 = b01"},
  };
}

}  // namespace leibext
