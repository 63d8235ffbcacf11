#pragma once

#include <complex>

namespace leibext {

/// Scalars of the ground field. Equality is always tolerance based.
using Complex = std::complex<double>;

/// Approximate-equality contract: |a - b| <= abs + rel * max(|a|, |b|).
struct Tolerance {
  double abs = 1e-12;
  double rel = 1e-9;
};

inline bool is_finite(Complex z) {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

bool approx_equal(Complex a, Complex b, const Tolerance& tol = {});

/// Principal k-th root, k >= 1. The argument of z is taken in (-pi, pi].
Complex principal_root(Complex z, int k);

/// z^e for integer e (negative allowed, z != 0 then).
Complex ipow(Complex z, int e);

}  // namespace leibext
