#include "leibext/adapted.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

#include "leibext/algebra.hpp"
#include "leibext/errors.hpp"

namespace leibext {

AdaptedTransform identity_transform(int n) {
  AdaptedTransform t;
  t.n = n;
  t.B.assign(n - 2, Complex{});
  t.B[0] = 1.0;
  return t;
}

namespace {

void require_shape(const AdaptedTransform& t) {
  if (t.n < kMinN || t.n > kMaxN) throw ArgumentError("transform: n out of range");
  if (static_cast<int>(t.B.size()) != t.n - 2) {
    throw ArgumentError("transform: B must have length n-2");
  }
  if (!is_finite(t.A0) || !is_finite(t.A1)) throw ArgumentError("transform: non-finite entry");
  for (const Complex& z : t.B)
    if (!is_finite(z)) throw ArgumentError("transform: non-finite entry");
}

// B_k with the convention B_k = 0 outside 1..n-2.
Complex bk(const AdaptedTransform& t, int k) {
  if (k < 1 || k > t.n - 2) return {};
  return t.B[k - 1];
}

}  // namespace

Complex normalizer(const AdaptedTransform& t, Complex b) {
  return ipow(t.A0, t.n - 2) * t.B.at(0) * (t.A0 + t.A1 * b);
}

void require_nondegenerate(const AdaptedTransform& t, Complex b, const Tolerance& tol) {
  require_shape(t);
  if (std::abs(t.A0) <= tol.abs || std::abs(t.B[0]) <= tol.abs ||
      std::abs(t.A0 + t.A1 * b) <= tol.abs) {
    throw ValidityError("degenerate adapted transform: A0 * B1 * (A0 + A1 b) vanishes");
  }
}

Matrix induced_matrix(const StructureTensor& t, const Vector& f0, const Vector& f1) {
  const int d = t.dim();
  Matrix g(d, d);
  g.col(0) = f0;
  g.col(1) = f1;
  for (int i = 1; i + 1 < d; ++i) g.col(i + 1) = bracket(t, g.col(i), f0);
  return g;
}

Matrix adapted_matrix(const AdaptedTransform& t, const ExtensionParams& p) {
  validate(p);
  if (t.n != p.n) throw ArgumentError("adapted_matrix: dimension mismatch");
  require_nondegenerate(t, p.b);
  const int d = p.n + 1;
  Vector f0 = Vector::Zero(d);
  f0(0) = t.A0;
  f0(1) = t.A1;
  Vector f1 = Vector::Zero(d);
  for (int k = 1; k <= p.n - 2; ++k) f1(k) = t.B[k - 1];
  return induced_matrix(build_table(p), f0, f1);
}

namespace {

struct Common {
  Complex A0, A1, B1, N0, Q;
};

Common common(const AdaptedTransform& t, const ExtensionParams& p) {
  Common c;
  c.A0 = t.A0;
  c.A1 = t.A1;
  c.B1 = t.B[0];
  c.N0 = t.A0 + t.A1 * p.b;
  c.Q = t.A0 * t.A0 * p.b00 + t.A0 * t.A1 * p.b01 + t.A1 * t.A1 * p.b11;
  return c;
}

ExtensionParams act_4(const AdaptedTransform& t, const ExtensionParams& p) {
  const Common c = common(t, p);
  const Complex A03 = ipow(c.A0, 3);
  ExtensionParams q = p;
  q.b00 = c.Q / (A03 * c.B1);
  q.b01 = (c.A0 * p.b01 + 2.0 * c.A1 * p.b11) / A03;
  q.b11 = c.B1 * p.b11 / A03;
  q.b_even[0] = c.B1 * p.b_even[0] / (c.A0 * c.A0);
  return q;
}

ExtensionParams act_5(const AdaptedTransform& t, const ExtensionParams& p) {
  const Common c = common(t, p);
  const Complex B2 = bk(t, 2), B3 = bk(t, 3);
  const Complex A03 = ipow(c.A0, 3);
  ExtensionParams q = p;
  q.b00 = c.Q / (A03 * c.B1 * c.N0);
  q.b01 = (c.A0 * p.b01 + 2.0 * c.A1 * p.b11) / (A03 * c.N0);
  q.b11 = c.B1 * p.b11 / (A03 * c.N0);
  q.b_even[0] = (c.B1 * c.B1 * p.b_even[0] + (B2 * B2 - 2.0 * c.B1 * B3) * p.b) /
                (c.A0 * c.A0 * c.B1 * c.N0);
  q.b = c.B1 * p.b / c.N0;
  return q;
}

ExtensionParams act_6(const AdaptedTransform& t, const ExtensionParams& p) {
  const Common c = common(t, p);
  const Complex B2 = bk(t, 2), B3 = bk(t, 3);
  const Complex A05 = ipow(c.A0, 5);
  ExtensionParams q = p;
  q.b00 = c.Q / (A05 * c.B1);
  q.b01 = (c.A0 * p.b01 + 2.0 * c.A1 * p.b11) / A05;
  q.b11 = c.B1 * p.b11 / A05;
  q.b_even[0] = (c.B1 * c.B1 * p.b_even[0] + (2.0 * c.B1 * B3 - B2 * B2) * p.b_even[1]) /
                (ipow(c.A0, 4) * c.B1);
  q.b_even[1] = c.B1 * p.b_even[1] / (c.A0 * c.A0);
  return q;
}

// b12' is quadratic in B3; the b14' numerator carries +B1^2 b14.
ExtensionParams act_7(const AdaptedTransform& t, const ExtensionParams& p) {
  const Common c = common(t, p);
  const Complex B2 = bk(t, 2), B3 = bk(t, 3), B4 = bk(t, 4), B5 = bk(t, 5);
  const Complex A05 = ipow(c.A0, 5);
  ExtensionParams q = p;
  q.b00 = c.Q / (A05 * c.B1 * c.N0);
  q.b01 = (c.A0 * p.b01 + 2.0 * c.A1 * p.b11) / (A05 * c.N0);
  q.b11 = c.B1 * p.b11 / (A05 * c.N0);
  q.b_even[0] = (c.B1 * c.B1 * p.b_even[0] + (2.0 * c.B1 * B3 - B2 * B2) * p.b_even[1] +
                 (2.0 * B2 * B4 - 2.0 * c.B1 * B5 - B3 * B3) * p.b) /
                (ipow(c.A0, 4) * c.B1 * c.N0);
  q.b_even[1] = (c.B1 * c.B1 * p.b_even[1] + (B2 * B2 - 2.0 * c.B1 * B3) * p.b) /
                (c.A0 * c.A0 * c.B1 * c.N0);
  q.b = c.B1 * p.b / c.N0;
  return q;
}

ExtensionParams act_8(const AdaptedTransform& t, const ExtensionParams& p) {
  const Common c = common(t, p);
  const Complex B2 = bk(t, 2), B3 = bk(t, 3), B4 = bk(t, 4), B5 = bk(t, 5);
  const Complex A07 = ipow(c.A0, 7);
  ExtensionParams q = p;
  q.b00 = c.Q / (A07 * c.B1);
  q.b01 = (c.A0 * p.b01 + 2.0 * c.A1 * p.b11) / A07;
  q.b11 = c.B1 * p.b11 / A07;
  q.b_even[0] = (c.B1 * c.B1 * p.b_even[0] + (2.0 * c.B1 * B3 - B2 * B2) * p.b_even[1] +
                 (2.0 * c.B1 * B5 - 2.0 * B2 * B4 + B3 * B3) * p.b_even[2]) /
                (ipow(c.A0, 6) * c.B1);
  q.b_even[1] = (c.B1 * c.B1 * p.b_even[1] + (2.0 * c.B1 * B3 - B2 * B2) * p.b_even[2]) /
                (ipow(c.A0, 4) * c.B1);
  q.b_even[2] = c.B1 * p.b_even[2] / (c.A0 * c.A0);
  return q;
}

void check_pair(const AdaptedTransform& t, const ExtensionParams& p) {
  validate(p);
  if (t.n != p.n) throw ArgumentError("transform and parameters differ in n");
  require_nondegenerate(t, p.b);
}

}  // namespace

ExtensionParams act_on_params(const AdaptedTransform& t, const ExtensionParams& p) {
  check_pair(t, p);
  switch (p.n) {
    case 4: return act_4(t, p);
    case 5: return act_5(t, p);
    case 6: return act_6(t, p);
    case 7: return act_7(t, p);
    default: return act_8(t, p);
  }
}

ExtensionParams act_on_params_general(const AdaptedTransform& t, const ExtensionParams& p) {
  check_pair(t, p);
  const int n = p.n;
  const Common c = common(t, p);
  const Complex lead = ipow(c.A0, n - 2) * c.N0;
  ExtensionParams q = p;
  q.b00 = c.Q / (lead * c.B1);
  q.b01 = (c.A0 * p.b01 + 2.0 * c.A1 * p.b11) / lead;
  q.b11 = c.B1 * p.b11 / lead;
  q.b = c.B1 * p.b / c.N0;
  // b_{1,s} inside the double sum: even s <= n-2 only.
  const auto b1 = [&](int s) -> Complex {
    if (s >= 2 && s <= n - 2 && s % 2 == 0) return p.b_even[s / 2 - 1];
    return {};
  };
  for (int j = 1; j <= even_slot_count(n); ++j) {
    const Complex scale = ipow(c.A0, 1 + 2 * j - n);
    Complex sum{};
    for (int k = 1; k <= n - 1; ++k) {
      for (int l = 2 * j; l <= n - k - 1; ++l) {
        const double sign = (k % 2 == 1) ? 1.0 : -1.0;
        sum += sign * scale * bk(t, k) * bk(t, l - 2 * j + 1) * b1(k + l - 1);
      }
    }
    for (int k = 1; k <= n - 2; ++k) {
      const double sign = (k % 2 == 0) ? 1.0 : -1.0;
      sum += sign * scale * bk(t, k) * bk(t, n - k - 2 * j + 1) * p.b;
    }
    q.b_even[j - 1] = sum / (c.B1 * c.N0);
  }
  return q;
}

ExtensionParams act_on_params_tensor(const AdaptedTransform& t, const ExtensionParams& p) {
  check_pair(t, p);
  return read_params(change_basis(build_table(p), adapted_matrix(t, p)));
}

AdaptedTransform compose(const AdaptedTransform& first, const AdaptedTransform& then) {
  require_shape(first);
  require_shape(then);
  if (first.n != then.n) throw ArgumentError("compose: dimension mismatch");
  const int m = first.n - 2;
  AdaptedTransform out;
  out.n = first.n;
  out.A0 = first.A0 * then.A0;
  out.A1 = first.A1 * then.A0 + first.B[0] * then.A1;
  // then.B(A0 x) * first.B(x) mod x^m, coefficient k-1 holds B_k.
  out.B.assign(m, Complex{});
  for (int i = 0; i < m; ++i) {
    const Complex scaled = then.B[i] * ipow(first.A0, i);
    for (int j = 0; i + j < m; ++j) out.B[i + j] += scaled * first.B[j];
  }
  return out;
}

AdaptedTransform inverse(const AdaptedTransform& t) {
  require_shape(t);
  if (t.A0 == Complex{} || t.B[0] == Complex{}) throw ValidityError("inverse: degenerate transform");
  const int m = t.n - 2;
  std::vector<Complex> c(m, Complex{});
  c[0] = 1.0 / t.B[0];
  for (int k = 1; k < m; ++k) {
    Complex s{};
    for (int j = 1; j <= k; ++j) s += t.B[j] * c[k - j];
    c[k] = -s / t.B[0];
  }
  AdaptedTransform out;
  out.n = t.n;
  out.A0 = 1.0 / t.A0;
  out.A1 = -t.A1 / (t.A0 * t.B[0]);
  out.B.resize(m);
  for (int k = 0; k < m; ++k) out.B[k] = c[k] / ipow(t.A0, k);
  return out;
}

void validate(const ElementaryTransform& e, int n) {
  if (n < kMinN || n > kMaxN) throw ArgumentError("elementary transform: n out of range");
  switch (e.kind) {
    case ElementaryKind::sigma:
      if (e.k < 2 || e.k > n) throw ArgumentError("sigma: k must lie in 2..n");
      if (!is_finite(e.b)) throw ArgumentError("sigma: non-finite argument");
      break;
    case ElementaryKind::tau:
      if (e.k < 1 || e.k > n) throw ArgumentError("tau: k must lie in 1..n");
      if (!is_finite(e.a)) throw ArgumentError("tau: non-finite argument");
      break;
    case ElementaryKind::upsilon:
      if (e.a == Complex{} || e.b == Complex{} || !is_finite(e.a) || !is_finite(e.b)) {
        throw ArgumentError("upsilon: arguments must be finite and nonzero");
      }
      break;
  }
}

AdaptedTransform elementary_to_adapted(const ElementaryTransform& e, int n) {
  validate(e, n);
  AdaptedTransform t = identity_transform(n);
  switch (e.kind) {
    case ElementaryKind::sigma:
      if (e.k <= n - 2) t.B[e.k - 1] += e.b;
      break;
    case ElementaryKind::tau:
      if (e.k == 1) t.A1 = e.a;
      break;
    case ElementaryKind::upsilon:
      t.A0 = e.a;
      t.B[0] = e.b;
      break;
  }
  return t;
}

Matrix elementary_matrix(const ElementaryTransform& e, const ExtensionParams& p) {
  validate(e, p.n);
  validate(p);
  const int d = p.n + 1;
  Vector f0 = basis_vector(d, 0);
  Vector f1 = basis_vector(d, 1);
  switch (e.kind) {
    case ElementaryKind::sigma: f1(e.k) += e.b; break;
    case ElementaryKind::tau: f0(e.k) += e.a; break;
    case ElementaryKind::upsilon:
      f0(0) = e.a;
      f1(1) = e.b;
      break;
  }
  return induced_matrix(build_table(p), f0, f1);
}

std::vector<ElementaryTransform> decompose(const AdaptedTransform& t) {
  require_shape(t);
  if (t.A0 == Complex{} || t.B[0] == Complex{}) {
    throw ValidityError("decompose: degenerate transform");
  }
  const int m = t.n - 2;
  // B(x) / B1 = prod_k (1 + c_k x^{k-1}) mod x^m, peeled off in order of k.
  std::vector<Complex> rest(m);
  for (int i = 0; i < m; ++i) rest[i] = t.B[i] / t.B[0];
  std::vector<ElementaryTransform> sigmas;
  for (int k = 2; k <= m; ++k) {
    const Complex ck = rest[k - 1];
    sigmas.push_back(ElementaryTransform::sigma(ck, k));
    // rest /= (1 + ck x^{k-1})
    for (int i = k - 1; i < m; ++i) rest[i] -= ck * rest[i - (k - 1)];
  }
  std::vector<ElementaryTransform> out(sigmas.rbegin(), sigmas.rend());
  out.push_back(ElementaryTransform::tau(t.A1 / t.A0, 1));
  out.push_back(ElementaryTransform::upsilon(t.A0, t.B[0]));
  return out;
}

AdaptedTransform compose_maps(const std::vector<ElementaryTransform>& factors, int n) {
  AdaptedTransform acc = identity_transform(n);
  for (const auto& f : factors) acc = compose(acc, elementary_to_adapted(f, n));
  return acc;
}

bool preserves_params(const ElementaryTransform& e, const ExtensionParams& p, double rel_tol) {
  const ExtensionParams q = read_params(change_basis(build_table(p), elementary_matrix(e, p)));
  return relative_distance(p, q) <= rel_tol;
}

bool verify_tail_triviality(int n, std::uint64_t seed) {
  if (n < kMinN || n > kMaxN) throw ArgumentError("verify_tail_triviality: n out of range");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  const auto draw = [&] { return std::polar(mag(rng), ang(rng)); };
  const ExtensionParams p = random_params(n, std::nullopt, rng());
  for (int k = 2; k <= n; ++k) {
    if (!preserves_params(ElementaryTransform::tau(draw(), k), p)) return false;
  }
  for (int k = n - 1; k <= n; ++k) {
    if (!preserves_params(ElementaryTransform::sigma(draw(), k), p)) return false;
  }
  return true;
}

ExtensionParams read_params(const StructureTensor& t, const Tolerance& tol) {
  const int n = t.dim() - 1;
  if (n < kMinN || n > kMaxN) {
    throw ShapeError("tensor dimension " + std::to_string(t.dim()) + " is not n+1 for n in 4..8",
                     {});
  }
  ExtensionParams p;
  p.n = n;
  p.b00 = t(0, 0, n);
  p.b01 = t(0, 1, n);
  p.b11 = t(1, 1, n);
  p.b_even.resize(even_slot_count(n));
  for (int j = 1; j <= even_slot_count(n); ++j) p.b_even[j - 1] = t(1, 2 * j, n);
  if (n % 2 == 1) p.b = -t(1, n - 1, n);

  const StructureTensor expected = build_table(p);
  const double limit = tol.abs + tol.rel * t.max_abs();
  std::vector<std::array<int, 3>> bad;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int k = 0; k <= n; ++k)
        if (std::abs(t(i, j, k) - expected(i, j, k)) > limit) bad.push_back({i, j, k});
  if (!bad.empty()) {
    std::ostringstream msg;
    msg << "tensor is not an adapted CE(mu_" << n << ") table; offending entries:";
    const std::size_t shown = std::min<std::size_t>(bad.size(), 12);
    for (std::size_t s = 0; s < shown; ++s)
      msg << " (" << bad[s][0] << "," << bad[s][1] << "," << bad[s][2] << ")";
    if (bad.size() > shown) msg << " ...";
    throw ShapeError(msg.str(), std::move(bad));
  }
  return p;
}

}  // namespace leibext
