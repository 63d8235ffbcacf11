#pragma once

#include <cstdint>
#include <vector>

#include "leibext/extension.hpp"
#include "leibext/structure_tensor.hpp"

namespace leibext {

/// Reduced adapted basis change:
///   f(e_0) = A0 e_0 + A1 e_1,  f(e_1) = B1 e_1 + ... + B_{n-2} e_{n-2},
///   f(e_{i+1}) = [f(e_i), f(e_0)].
/// B[0] holds B1.
struct AdaptedTransform {
  int n = 4;
  Complex A0{1.0}, A1{};
  std::vector<Complex> B;
};

AdaptedTransform identity_transform(int n);

/// e_n coefficient of f(e_n): A0^{n-2} B1 (A0 + A1 b).
Complex normalizer(const AdaptedTransform& t, Complex b);

/// Throws ArgumentError on shape problems and ValidityError when any factor of
/// A0 * B1 * (A0 + A1 b) is at most tol.abs.
void require_nondegenerate(const AdaptedTransform& t, Complex b, const Tolerance& tol = {});

/// Column i holds the coordinates of f(e_i); brackets are taken in build_table(p).
Matrix adapted_matrix(const AdaptedTransform& t, const ExtensionParams& p);

/// Parameters of the algebra in the new basis, from the closed-form action.
ExtensionParams act_on_params(const AdaptedTransform& t, const ExtensionParams& p);

/// The general double-sum formula for b'_{1,2j} as printed (B_k = 0 outside
/// 1..n-2, b_{1,odd} = 0, b_{1,n-1} = -b), with the b00/b01/b11 formulas.
ExtensionParams act_on_params_general(const AdaptedTransform& t, const ExtensionParams& p);

/// Tensor route: read_params(change_basis(build_table(p), adapted_matrix(t, p))).
ExtensionParams act_on_params_tensor(const AdaptedTransform& t, const ExtensionParams& p);

/// Basis change by `first`, then by `then` relative to the new basis. Agrees
/// with adapted_matrix(first, p) * adapted_matrix(then, p') on the reduced
/// coordinates and on the induced parameters.
AdaptedTransform compose(const AdaptedTransform& first, const AdaptedTransform& then);

/// compose(t, inverse(t)) == compose(inverse(t), t) == identity.
AdaptedTransform inverse(const AdaptedTransform& t);

enum class ElementaryKind { sigma, tau, upsilon };

/// sigma(b,k): f(e_1) = e_1 + b e_k.  tau(a,k): f(e_0) = e_0 + a e_k.
/// upsilon(a,b): f(e_0) = a e_0, f(e_1) = b e_1.
struct ElementaryTransform {
  ElementaryKind kind = ElementaryKind::upsilon;
  Complex a{1.0};
  Complex b{1.0};
  int k = 0;

  static ElementaryTransform sigma(Complex b, int k) { return {ElementaryKind::sigma, {}, b, k}; }
  static ElementaryTransform tau(Complex a, int k) { return {ElementaryKind::tau, a, {}, k}; }
  static ElementaryTransform upsilon(Complex a, Complex b) {
    return {ElementaryKind::upsilon, a, b, 0};
  }
};

void validate(const ElementaryTransform& e, int n);

/// Parameter-level image. sigma(b, k >= n-1) and tau(a, k >= 2) map to the
/// identity.
AdaptedTransform elementary_to_adapted(const ElementaryTransform& e, int n);

/// Full basis matrix of an elementary transform on build_table(p), keeping the
/// components that the reduced form drops.
Matrix elementary_matrix(const ElementaryTransform& e, const ExtensionParams& p);

/// Factors f = sigma(c_{n-2}, n-2) o ... o sigma(c_2, 2) o tau(A1/A0, 1) o upsilon(A0, B1),
/// listed left to right as in that expression.
std::vector<ElementaryTransform> decompose(const AdaptedTransform& t);

/// Map composition of factors[0] o factors[1] o ... (rightmost acts first).
AdaptedTransform compose_maps(const std::vector<ElementaryTransform>& factors, int n);

/// True iff the full-level basis change by e leaves the parameters of p unchanged.
bool preserves_params(const ElementaryTransform& e, const ExtensionParams& p,
                      double rel_tol = 1e-9);

/// Random tau(a, k >= 2) and sigma(b, k in {n-1, n}) on random parameters.
bool verify_tail_triviality(int n, std::uint64_t seed);

/// Inverse of build_table on adapted-basis tensors. Throws ShapeError listing
/// every entry (i, j, k) that disagrees with build_table of the extracted
/// parameters by more than tol.abs + tol.rel * max|gamma|.
ExtensionParams read_params(const StructureTensor& t, const Tolerance& tol = {1e-9, 1e-8});

/// Matrix with columns f(e_0), f(e_1), f(e_{i+1}) = [f(e_i), f(e_0)] in t.
Matrix induced_matrix(const StructureTensor& t, const Vector& f0, const Vector& f1);

}  // namespace leibext
