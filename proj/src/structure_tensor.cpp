#include "leibext/structure_tensor.hpp"

#include <algorithm>
#include <cmath>

#include "leibext/errors.hpp"

namespace leibext {

StructureTensor::StructureTensor(int dim) : dim_(dim) {
  if (dim < 1) throw ArgumentError("StructureTensor: dimension must be positive");
  gamma_.assign(static_cast<std::size_t>(dim) * dim * dim, Complex{});
}

void StructureTensor::set(int i, int j, int k, Complex value) {
  if (!is_finite(value)) throw ArgumentError("StructureTensor: non-finite entry");
  gamma_[index(i, j, k)] = value;
}

void StructureTensor::add(int i, int j, int k, Complex value) {
  set(i, j, k, gamma_[index(i, j, k)] + value);
}

double StructureTensor::max_abs() const {
  double m = 0.0;
  for (const Complex& z : gamma_) m = std::max(m, std::abs(z));
  return m;
}

Vector basis_vector(int dim, int i) {
  Vector v = Vector::Zero(dim);
  v(i) = 1.0;
  return v;
}

double max_abs_difference(const StructureTensor& a, const StructureTensor& b) {
  if (a.dim() != b.dim()) throw ArgumentError("max_abs_difference: dimension mismatch");
  double m = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) {
    m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
  }
  return m;
}

}  // namespace leibext
