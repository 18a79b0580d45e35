#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "elg/extended.hpp"
#include "elg/gauge.hpp"
#include "elg/types.hpp"

namespace elg {

using Json = nlohmann::json;

/// Malformed JSON input: wrong shape, missing field, non-finite number.
class SchemaError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Parameters are {"omega":[4], "u":[3], "theta":[3]}; the string "identity"
// is accepted on input. Missing members default to zero.
Json params_to_json(const ExtendedParams& p);
ExtendedParams params_from_json(const Json& j);

// Complex numbers are [re, im]; matrices are arrays of rows.
Json complex_to_json(Complex z);
Complex complex_from_json(const Json& j);
Json matrix_to_json(const Matrix4C& m);
Matrix4C matrix4c_from_json(const Json& j);
Json matrix_to_json(const Matrix10& m);
Json vector_to_json(const Eigen::VectorXd& v);
Vector10 vector10_from_json(const Json& j);

/// {"dims":[4], "spacing":[4], "values":[params...]}.
FieldGrid grid_from_json(const Json& j);
Json gauge_to_json(const GaugeField& a);
SiteConnection connection_from_json(const Json& j);

}  // namespace elg
