#pragma once

#include <Eigen/Dense>
#include <vector>

#include "leibext/scalar.hpp"

namespace leibext {

using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;

/// Dense structure constants: [e_i, e_j] = sum_k gamma(i, j, k) e_k.
class StructureTensor {
 public:
  explicit StructureTensor(int dim);

  int dim() const { return dim_; }

  Complex operator()(int i, int j, int k) const { return gamma_[index(i, j, k)]; }

  /// Throws ArgumentError for non-finite values.
  void set(int i, int j, int k, Complex value);
  void add(int i, int j, int k, Complex value);

  double max_abs() const;
  const std::vector<Complex>& data() const { return gamma_; }

 private:
  std::size_t index(int i, int j, int k) const {
    return (static_cast<std::size_t>(i) * dim_ + j) * dim_ + k;
  }

  int dim_;
  std::vector<Complex> gamma_;
};

Vector basis_vector(int dim, int i);

/// Largest entrywise |a - b|; tensors must have equal dimension.
double max_abs_difference(const StructureTensor& a, const StructureTensor& b);

}  // namespace leibext
