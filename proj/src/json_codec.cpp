#include "knotcert/json_codec.hpp"

#include <limits>
#include <stdexcept>

namespace knotcert {

Json to_json(const BigInt& z) {
  if (z >= std::numeric_limits<long long>::min() && z <= std::numeric_limits<long long>::max())
    return Json(z.convert_to<long long>());
  return Json(to_string(z));
}

BigInt bigint_from_json(const Json& j) {
  if (j.is_number_integer()) return BigInt(j.get<long long>());
  if (j.is_string()) {
    const Rational q = parse_rational(j.get<std::string>());
    if (!is_integer(q)) throw std::invalid_argument("expected an integer");
    return numerator_of(q);
  }
  throw std::invalid_argument("expected an integer");
}

Json to_json(const Rational& q) { return Json(to_string(q)); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw std::invalid_argument("expected a rational");
}

Json to_json(const Poly& p) {
  Json out = Json::array();
  for (const auto& c : p.coefficients()) out.push_back(to_json(c));
  return out;
}

Poly poly_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a coefficient list");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return Poly(std::move(coeffs));
}

Json to_json(const LaurentPoly& f) { return Json{{"low", f.low_exponent()}, {"coefficients", to_json(f.body())}}; }

LaurentPoly laurent_from_json(const Json& j) {
  return LaurentPoly(poly_from_json(j.at("coefficients")), j.at("low").get<int>());
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index k = 0; k < m.cols(); ++k) row.push_back(to_json(m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix int_matrix_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of rows");
  const auto n = static_cast<Eigen::Index>(j.size());
  const Eigen::Index cols = n == 0 ? 0 : static_cast<Eigen::Index>(j.front().size());
  IntMatrix m(n, cols);
  for (Eigen::Index i = 0; i < n; ++i) {
    const Json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) throw std::invalid_argument("ragged matrix");
    for (Eigen::Index k = 0; k < cols; ++k) m(i, k) = bigint_from_json(row[static_cast<std::size_t>(k)]);
  }
  return m;
}

Json to_json(const PolyVector& v) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(to_json(v(i)));
  return out;
}

PolyVector poly_vector_from_json(const Json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected a list of Laurent polynomials");
  PolyVector v(static_cast<Eigen::Index>(j.size()));
  for (std::size_t i = 0; i < j.size(); ++i) v(static_cast<Eigen::Index>(i)) = laurent_from_json(j[i]);
  return v;
}

}  // namespace knotcert
