#pragma once

#include <string>
#include <vector>

#include "leibext/extension.hpp"

namespace leibext {

/// Quantities the membership conditions test for (non)vanishing.
enum class Quantity { b00, b01, b11, b12, b14, b16, b, delta };

std::string quantity_name(Quantity q);
/// Value of q at p; throws ArgumentError when q does not exist for p.n.
Complex quantity_value(const ExtensionParams& p, Quantity q);

struct Condition {
  Quantity quantity;
  bool nonzero;
};

struct SubsetSpec {
  int index;
  std::vector<Condition> conditions;
  /// Normal form in flat parameter order; for parametric subsets slot 0 holds
  /// the placeholder 0 and is replaced by lambda.
  std::vector<Complex> representative;
  bool parametric;
};

/// The partition of CE(mu_n), n = 4..8, in listing order.
const std::vector<SubsetSpec>& subset_table(int n);
const SubsetSpec& subset_spec(const SubsetId& id);

}  // namespace leibext
