#include "leibext/scalar.hpp"

#include <algorithm>
#include <cmath>

#include "leibext/errors.hpp"

namespace leibext {

bool approx_equal(Complex a, Complex b, const Tolerance& tol) {
  return std::abs(a - b) <= tol.abs + tol.rel * std::max(std::abs(a), std::abs(b));
}

Complex principal_root(Complex z, int k) {
  if (k < 1) throw ArgumentError("principal_root: k must be positive");
  if (z == Complex{}) return {};
  if (k == 1) return z;
  double arg = std::arg(z);
  if (z.imag() == 0.0 && z.real() < 0.0) arg = M_PI;
  return std::polar(std::pow(std::abs(z), 1.0 / k), arg / k);
}

Complex ipow(Complex z, int e) {
  if (e < 0) return Complex{1.0} / ipow(z, -e);
  Complex r{1.0};
  Complex base = z;
  while (e > 0) {
    if (e & 1) r *= base;
    base *= base;
    e >>= 1;
  }
  return r;
}

}  // namespace leibext
