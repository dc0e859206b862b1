#pragma once

// JSON encodings of the exact types. Integers that fit in 64 bits are JSON
// numbers, larger ones strings; rationals and polynomials are strings or
// coefficient lists of strings so that nothing passes through a double.

#include "knotcert/matrix.hpp"

#include "json.hpp"

namespace knotcert {

using Json = nlohmann::json;

Json to_json(const BigInt& z);
BigInt bigint_from_json(const Json& j);

Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

/// Coefficient list, constant term first.
Json to_json(const Poly& p);
Poly poly_from_json(const Json& j);

/// {"low": k, "coefficients": [...]}
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j);

/// Row-major list of rows.
Json to_json(const IntMatrix& m);
IntMatrix int_matrix_from_json(const Json& j);

Json to_json(const PolyVector& v);
PolyVector poly_vector_from_json(const Json& j);

}  // namespace knotcert
