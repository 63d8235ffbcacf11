#pragma once

#include <array>
#include <vector>

#include "leibext/structure_tensor.hpp"

namespace leibext {

Vector bracket(const StructureTensor& t, const Vector& x, const Vector& y);

struct LeibnizDefect {
  double residual = 0.0;
  std::array<int, 3> worst_triple{0, 0, 0};
};

/// max over basis triples of ||[x,[y,z]] - [[x,y],z] + [[x,z],y]||_inf,
/// together with the triple attaining it.
LeibnizDefect leibniz_defect(const StructureTensor& t);
double leibniz_residual(const StructureTensor& t);

/// Structure constants in the basis formed by the columns of g:
/// [g e_i, g e_j] = sum_k gamma'(i,j,k) g e_k. This is the tensor of g^{-1} * L,
/// so change_basis(t, g * h) == change_basis(change_basis(t, g), h).
/// Throws SingularMatrixError when the LU reciprocal condition estimate of g is <= singular_tol.
StructureTensor change_basis(const StructureTensor& t, const Matrix& g,
                             double singular_tol = 1e-12);

/// The left action [x,y]_{g*L} = g [g^{-1} x, g^{-1} y]_L.
StructureTensor transport(const StructureTensor& t, const Matrix& g,
                          double singular_tol = 1e-12);

struct SeriesProfile {
  std::vector<int> dims;  ///< dims[t] = dim L^{t+1}
};

/// Singular values above rel_tol * sigma_max count toward the rank.
int numeric_rank(const Matrix& m, double rel_tol = 1e-8);

SeriesProfile lower_central_series(const StructureTensor& t);
bool is_filiform(const StructureTensor& t);

}  // namespace leibext
