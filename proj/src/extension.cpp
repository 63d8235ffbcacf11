#include "leibext/extension.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "leibext/constraints.hpp"
#include "leibext/errors.hpp"
#include "leibext/subsets.hpp"

namespace leibext {

int even_slot_count(int n) { return (n - 2) / 2; }

int arity(int n) { return 3 + even_slot_count(n) + (n % 2); }

std::vector<std::string> parameter_names(int n) {
  std::vector<std::string> names{"b00", "b01", "b11"};
  for (int j = 1; j <= even_slot_count(n); ++j) names.push_back("b1" + std::to_string(2 * j));
  if (n % 2 == 1) names.push_back("b");
  return names;
}

void validate(const ExtensionParams& p) {
  if (p.n < kMinN || p.n > kMaxN) {
    throw ArgumentError("n must lie in " + std::to_string(kMinN) + ".." + std::to_string(kMaxN));
  }
  if (static_cast<int>(p.b_even.size()) != even_slot_count(p.n)) {
    throw ArgumentError("b_even must have length " + std::to_string(even_slot_count(p.n)));
  }
  if (p.n % 2 == 0 && p.b != Complex{}) throw ArgumentError("b must be 0 for even n");
  for (const Complex& z : to_vector(p)) {
    if (!is_finite(z)) throw ArgumentError("parameters must be finite");
  }
}

std::vector<Complex> to_vector(const ExtensionParams& p) {
  std::vector<Complex> v{p.b00, p.b01, p.b11};
  v.insert(v.end(), p.b_even.begin(), p.b_even.end());
  if (p.n % 2 == 1) v.push_back(p.b);
  return v;
}

ExtensionParams from_vector(int n, std::span<const Complex> values) {
  if (n < kMinN || n > kMaxN) throw ArgumentError("n out of range");
  if (static_cast<int>(values.size()) != arity(n)) {
    throw ArgumentError("expected " + std::to_string(arity(n)) + " parameters for n=" +
                        std::to_string(n));
  }
  ExtensionParams p;
  p.n = n;
  p.b00 = values[0];
  p.b01 = values[1];
  p.b11 = values[2];
  const int m = even_slot_count(n);
  p.b_even.assign(values.begin() + 3, values.begin() + 3 + m);
  if (n % 2 == 1) p.b = values[3 + m];
  return p;
}

Complex first_row_coefficient(const ExtensionParams& p, int s) {
  if (s == p.n - 1 && p.n % 2 == 1) return -p.b;
  if (s >= 2 && s <= p.n - 2 && s % 2 == 0) return p.b_even[s / 2 - 1];
  return {};
}

double param_scale(const ExtensionParams& p) {
  double m = 0.0;
  for (const Complex& z : to_vector(p)) m = std::max(m, std::abs(z));
  return m;
}

double relative_distance(const ExtensionParams& p, const ExtensionParams& q) {
  if (p.n != q.n) throw ArgumentError("relative_distance: dimension mismatch");
  const auto a = to_vector(p);
  const auto b = to_vector(q);
  double diff = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) diff = std::max(diff, std::abs(a[i] - b[i]));
  const double scale = std::max(param_scale(p), param_scale(q));
  if (diff == 0.0) return 0.0;
  return diff / std::max(scale, 1e-300);
}

StructureTensor build_mu(int n) {
  if (n < 2) throw ArgumentError("build_mu: n must be at least 2");
  StructureTensor t(n + 1);
  for (int i = 1; i <= n - 1; ++i) t.set(i, 0, i + 1, 1.0);
  return t;
}

StructureTensor build_table(const ExtensionParams& p) {
  return build_table(p, leibniz_signs(p.n));
}

StructureTensor build_table(const ExtensionParams& p, const SignTable& signs) {
  validate(p);
  const int n = p.n;
  if (signs.n != n || static_cast<int>(signs.sign.size()) != n) {
    throw ArgumentError("sign table does not match n");
  }
  StructureTensor t(n + 1);
  for (int i = 1; i <= n - 1; ++i) t.set(i, 0, i + 1, 1.0);
  for (int i = 1; i <= n - 1; ++i) t.set(0, i, i + 1, -1.0);
  t.set(0, 0, n, p.b00);
  t.set(0, 1, n, p.b01);
  t.set(1, 1, n, p.b11);
  for (int i = 1; i <= n - 1; ++i) {
    for (int j = i + 1; j <= n - 1; ++j) {
      // [e_i, e_{n-i}] = (-1)^i b agrees with s(i) * b_{1,n-1}, b_{1,n-1} = -b.
      const Complex v = static_cast<double>(signs.sign[i]) * first_row_coefficient(p, i + j - 1);
      if (v == Complex{}) continue;
      t.set(i, j, n, v);
      t.set(j, i, n, -v);
    }
  }
  return t;
}

namespace {

Complex random_complex(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> mag(0.5, 2.0);
  std::uniform_real_distribution<double> ang(-M_PI, M_PI);
  const double r = mag(rng);
  return std::polar(r, ang(rng));
}

bool in_window(Complex z) { return std::abs(z) >= 0.5 && std::abs(z) <= 2.0; }

}  // namespace

ExtensionParams random_params(int n, const std::optional<SubsetId>& subset, std::uint64_t seed) {
  if (n < kMinN || n > kMaxN) throw ArgumentError("random_params: n out of range");
  const SubsetSpec* spec = nullptr;
  if (subset) {
    if (subset->n != n) throw ArgumentError("random_params: subset belongs to another n");
    spec = &subset_spec(*subset);
  }
  std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(n)));
  constexpr double kMargin = 0.1;

  for (int attempt = 0; attempt < 10000; ++attempt) {
    ExtensionParams p;
    p.n = n;
    p.b00 = random_complex(rng);
    p.b01 = random_complex(rng);
    p.b11 = random_complex(rng);
    p.b_even.resize(even_slot_count(n));
    for (auto& z : p.b_even) z = random_complex(rng);
    if (n % 2 == 1) p.b = random_complex(rng);

    bool delta_zero = false;
    if (spec) {
      for (const Condition& c : spec->conditions) {
        if (c.nonzero) continue;
        switch (c.quantity) {
          case Quantity::b00: p.b00 = 0.0; break;
          case Quantity::b01: p.b01 = 0.0; break;
          case Quantity::b11: p.b11 = 0.0; break;
          case Quantity::b12: p.b_even[0] = 0.0; break;
          case Quantity::b14: p.b_even[1] = 0.0; break;
          case Quantity::b16: p.b_even[2] = 0.0; break;
          case Quantity::b: p.b = 0.0; break;
          case Quantity::delta: delta_zero = true; break;
        }
      }
    }
    if (delta_zero) {
      p.b00 = p.b01 * p.b01 / (4.0 * p.b11);
      if (!in_window(p.b00)) continue;
    } else if (p.b11 != Complex{} && std::abs(p.b01 * p.b01 - 4.0 * p.b00 * p.b11) < kMargin) {
      continue;
    }
    if (p.b != Complex{}) {
      if (p.b11 != Complex{} && std::abs(p.b * p.b01 - 2.0 * p.b11) < kMargin) continue;
      if (p.b11 == Complex{} && p.b01 != Complex{} && std::abs(p.b * p.b00 - p.b01) < kMargin) {
        continue;
      }
    }
    return p;
  }
  throw ArgumentError("random_params: sampling did not converge");
}

}  // namespace leibext
