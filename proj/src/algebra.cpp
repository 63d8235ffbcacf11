#include "leibext/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "leibext/errors.hpp"

namespace leibext {

Vector bracket(const StructureTensor& t, const Vector& x, const Vector& y) {
  const int d = t.dim();
  if (x.size() != d || y.size() != d) throw ArgumentError("bracket: dimension mismatch");
  Vector r = Vector::Zero(d);
  for (int i = 0; i < d; ++i) {
    if (x(i) == Complex{}) continue;
    for (int j = 0; j < d; ++j) {
      const Complex c = x(i) * y(j);
      if (c == Complex{}) continue;
      for (int k = 0; k < d; ++k) r(k) += c * t(i, j, k);
    }
  }
  return r;
}

LeibnizDefect leibniz_defect(const StructureTensor& t) {
  const int d = t.dim();
  const Complex* g = t.data().data();
  auto at = [g, d](int i, int j, int k) { return g[(i * d + j) * d + k]; };
  LeibnizDefect out;
  std::vector<Complex> v(d);
  for (int i = 0; i < d; ++i) {
    for (int j = 0; j < d; ++j) {
      for (int k = 0; k < d; ++k) {
        std::fill(v.begin(), v.end(), Complex{});
        for (int m = 0; m < d; ++m) {
          const Complex a = at(j, k, m);
          const Complex b = at(i, j, m);
          const Complex c = at(i, k, m);
          if (a == Complex{} && b == Complex{} && c == Complex{}) continue;
          for (int l = 0; l < d; ++l) {
            v[l] += a * at(i, m, l) - b * at(m, k, l) + c * at(m, j, l);
          }
        }
        for (int l = 0; l < d; ++l) {
          const double r = std::abs(v[l]);
          if (r > out.residual) {
            out.residual = r;
            out.worst_triple = {i, j, k};
          }
        }
      }
    }
  }
  return out;
}

double leibniz_residual(const StructureTensor& t) { return leibniz_defect(t).residual; }

namespace {

void require_invertible(const Matrix& g, double tol) {
  if (g.size() == 0 || !g.allFinite()) throw SingularMatrixError("change_basis: matrix is singular");
  Eigen::PartialPivLU<Matrix> lu(g);
  // rcond() reports 1 on an exactly zero pivot, so pivots are checked first.
  const double pivot = lu.matrixLU().diagonal().cwiseAbs().minCoeff();
  if (!(pivot > 0.0) || !(lu.rcond() > tol)) throw SingularMatrixError("change_basis: matrix is singular");
}

}  // namespace

StructureTensor change_basis(const StructureTensor& t, const Matrix& g, double singular_tol) {
  const int d = t.dim();
  if (g.rows() != d || g.cols() != d) throw ArgumentError("change_basis: dimension mismatch");
  require_invertible(g, singular_tol);
  const Matrix ginv = g.inverse();

  std::vector<Matrix> slices(d, Matrix::Zero(d, d));
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j)
      for (int m = 0; m < d; ++m) slices[m](i, j) = t(i, j, m);

  std::vector<Matrix> pulled(d);
  for (int m = 0; m < d; ++m) pulled[m] = g.transpose() * slices[m] * g;

  StructureTensor out(d);
  for (int k = 0; k < d; ++k) {
    Matrix acc = Matrix::Zero(d, d);
    for (int m = 0; m < d; ++m) {
      if (ginv(k, m) != Complex{}) acc += ginv(k, m) * pulled[m];
    }
    for (int i = 0; i < d; ++i)
      for (int j = 0; j < d; ++j) out.set(i, j, k, acc(i, j));
  }
  return out;
}

StructureTensor transport(const StructureTensor& t, const Matrix& g, double singular_tol) {
  if (g.rows() != t.dim() || g.cols() != t.dim()) {
    throw ArgumentError("transport: dimension mismatch");
  }
  require_invertible(g, singular_tol);
  return change_basis(t, g.inverse(), singular_tol);
}

int numeric_rank(const Matrix& m, double rel_tol) {
  if (m.size() == 0) return 0;
  Eigen::JacobiSVD<Matrix> svd(m);
  const auto& s = svd.singularValues();
  if (s.size() == 0 || s(0) == 0.0) return 0;
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * s(0)) ++r;
  return r;
}

namespace {

// Orthonormal basis (columns) of the column span of m. Singular values are
// compared against rel_tol * max(sigma_max, scale).
Matrix span_basis(const Matrix& m, double scale, double rel_tol) {
  if (m.cols() == 0) return Matrix(m.rows(), 0);
  Eigen::JacobiSVD<Matrix> svd(m, Eigen::ComputeThinU);
  const auto& s = svd.singularValues();
  const double ref = std::max(s.size() > 0 ? s(0) : 0.0, scale);
  int r = 0;
  for (int i = 0; i < s.size(); ++i)
    if (s(i) > rel_tol * ref && s(i) > 0.0) ++r;
  return svd.matrixU().leftCols(r);
}

}  // namespace

SeriesProfile lower_central_series(const StructureTensor& t) {
  const int d = t.dim();
  const double scale = t.max_abs();
  SeriesProfile out;
  Matrix current = Matrix::Identity(d, d);
  out.dims.push_back(d);
  while (current.cols() > 0) {
    Matrix products(d, current.cols() * d);
    for (int c = 0; c < current.cols(); ++c)
      for (int j = 0; j < d; ++j)
        products.col(c * d + j) = bracket(t, current.col(c), basis_vector(d, j));
    Matrix next = span_basis(products, scale, 1e-8);
    if (next.cols() == current.cols()) break;
    out.dims.push_back(static_cast<int>(next.cols()));
    current = next;
  }
  return out;
}

bool is_filiform(const StructureTensor& t) {
  const int d = t.dim();
  const SeriesProfile s = lower_central_series(t);
  for (int i = 2; i <= d; ++i) {
    if (static_cast<int>(s.dims.size()) < i || s.dims[i - 1] != d - i) return false;
  }
  return true;
}

}  // namespace leibext
