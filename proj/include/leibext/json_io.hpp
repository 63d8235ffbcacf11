#pragma once

#include <json.hpp>
#include <stdexcept>

#include "leibext/algebra.hpp"
#include "leibext/classification.hpp"
#include "leibext/constraints.hpp"
#include "leibext/verify.hpp"

namespace leibext {

using Json = nlohmann::json;

/// Structurally malformed JSON input (missing field, wrong type or shape).
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Complex numbers travel as [re, im].
Json to_json(Complex z);
Complex complex_from_json(const Json& j);

Json to_json(const StructureTensor& t);
StructureTensor tensor_from_json(const Json& j);

Json to_json(const ExtensionParams& p);
ExtensionParams params_from_json(const Json& j);

Json to_json(const AdaptedTransform& t);
AdaptedTransform transform_from_json(const Json& j);

Json to_json(const OrbitLabel& label);
Json to_json(const ConstraintReport& report);
Json to_json(const SeriesProfile& s);
Json to_json(const VerificationReport& report);

}  // namespace leibext
