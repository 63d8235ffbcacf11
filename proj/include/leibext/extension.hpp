#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "leibext/scalar.hpp"
#include "leibext/structure_tensor.hpp"

namespace leibext {

inline constexpr int kMinN = 4;
inline constexpr int kMaxN = 8;

/// Free parameters of an element of CE(mu_n); the algebra has basis e_0..e_n.
struct ExtensionParams {
  int n = 4;
  Complex b00{}, b01{}, b11{};
  std::vector<Complex> b_even;  ///< b_{1,2}, b_{1,4}, ..., b_{1,2m}, 2m <= n-2
  Complex b{};                  ///< top antisymmetric coefficient, zero for even n
};

/// Number of b_{1,2j} slots: floor((n-2)/2).
int even_slot_count(int n);
/// Length of the flat parameter vector: 4, 5, 5, 6, 6 for n = 4..8.
int arity(int n);
/// Names in flat order, e.g. {"b00","b01","b11","b12","b","..."}.
std::vector<std::string> parameter_names(int n);

/// Throws ArgumentError when n is out of range, b_even has the wrong length,
/// b != 0 for even n, or an entry is not finite.
void validate(const ExtensionParams& p);

/// Flat order: b00, b01, b11, b12, b14, ..., then b for odd n.
std::vector<Complex> to_vector(const ExtensionParams& p);
ExtensionParams from_vector(int n, std::span<const Complex> values);

/// Coefficient of [e_1, e_s] for 2 <= s <= n-1: b_{1,s} for even s <= n-2,
/// -b for s = n-1 (odd n), zero otherwise.
Complex first_row_coefficient(const ExtensionParams& p, int s);

/// max |parameter|.
double param_scale(const ExtensionParams& p);

/// Largest |p_i - q_i| relative to the largest parameter magnitude of both.
double relative_distance(const ExtensionParams& p, const ExtensionParams& q);

/// s(i) in b_{i,j} = s(i) * b_{1,i+j-1}, stored for i = 1..n-1 (index 0 unused).
struct SignTable {
  int n = 0;
  std::vector<int> sign;
  /// False where no Leibniz relation ties row i to the first row (sign left at +1).
  std::vector<bool> determined;
};

/// [e_i, e_0] = e_{i+1} for 1 <= i <= n-1 on e_0..e_n; every other product zero.
StructureTensor build_mu(int n);

/// Multiplication table of CE(mu_n) with the sign table derived by the
/// constraint solver.
StructureTensor build_table(const ExtensionParams& p);
/// Same with an explicit sign table (used to inject corrupted signs in tests).
StructureTensor build_table(const ExtensionParams& p, const SignTable& signs);

/// U_index of the partition of CE(mu_n).
struct SubsetId {
  int n = 4;
  int index = 1;

  std::string label() const { return "U_" + std::to_string(index); }
  friend bool operator==(const SubsetId&, const SubsetId&) = default;
};


/// Parameters with magnitudes in [0.5, 2] and uniform angles. With a subset,
/// the subset's zero conditions hold exactly and its nonzero conditions hold
/// with margin.
ExtensionParams random_params(int n, const std::optional<SubsetId>& subset,
                              std::uint64_t seed);

}  // namespace leibext
