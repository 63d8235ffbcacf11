#pragma once

#include <string>
#include <vector>

#include "leibext/extension.hpp"

namespace leibext {

struct RelationTerm {
  std::string source;  ///< name of a free unknown, e.g. "b14"
  double coefficient;
};

/// unknown = sum of terms; an empty list means the unknown is forced to zero.
struct ImpliedRelation {
  std::string unknown;
  int i = 0, j = 0;  ///< (0,0) for b00, (0,1) for b01, (1,1) for b11
  std::vector<RelationTerm> terms;
};

struct ConstraintReport {
  int n = 0;
  int total_unknowns = 0;
  int rank = 0;
  int free_count = 0;
  std::vector<std::string> unknowns;
  std::vector<std::string> free_unknowns;
  /// One direction per free unknown, coordinates over `unknowns`.
  std::vector<std::vector<double>> free_basis;
  std::vector<ImpliedRelation> implied_relations;
  SignTable signs;
  bool signs_consistent = true;
  bool arity_matches = false;
};

/// Imposes the Leibniz identity on every basis triple of the general ansatz
/// (fixed graded part, arbitrary b00, b01, b11 and antisymmetric b_{i,j} for
/// 1 <= i < j <= n-1) and solves the resulting linear system. 4 <= n <= 9.
ConstraintReport solve_leibniz_constraints(int n);

/// Cached sign table of solve_leibniz_constraints(n).
const SignTable& leibniz_signs(int n);

/// Value of b_{i,j} (any 1 <= i, j <= n-1) in a null-space direction, using
/// antisymmetry and b_{i,i} = 0 for i >= 2.
double ansatz_entry(const ConstraintReport& report, const std::vector<double>& direction,
                    int i, int j);

}  // namespace leibext
