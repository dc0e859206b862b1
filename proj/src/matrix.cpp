#include "knotcert/exact_linalg.hpp"
#include "knotcert/matrix.hpp"
#include "knotcert/smith.hpp"

namespace knotcert {

PolyMatrix to_laurent(const IntMatrix& m) {
  return map_entries<LaurentPoly>(m, [](const BigInt& x) { return LaurentPoly(Rational(x)); });
}

PolyMatrix to_laurent(const QtMatrix& m) {
  return map_entries<LaurentPoly>(m, [](const Poly& p) { return LaurentPoly(p); });
}

PolyMatrix alexander_presentation(const IntMatrix& v) {
  PolyMatrix p(v.rows(), v.cols());
  for (Eigen::Index i = 0; i < v.rows(); ++i)
    for (Eigen::Index j = 0; j < v.cols(); ++j)
      p(i, j) = LaurentPoly(Poly(std::vector<Rational>{Rational(v(j, i)), Rational(-v(i, j))}));
  return p;
}

PolyMatrix conjugate_transpose(const PolyMatrix& m) {
  PolyMatrix out(m.cols(), m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) out(j, i) = m(i, j).conjugate();
  return out;
}

namespace {

// Multiplies each row by the power of t that makes it polynomial with a
// nonzero constant column somewhere; returns the shifts applied.
QtMatrix clear_rows(const PolyMatrix& m, std::vector<int>& shifts) {
  QtMatrix out(m.rows(), m.cols());
  shifts.assign(static_cast<std::size_t>(m.rows()), 0);
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    bool any = false;
    int low = 0;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (m(i, j).is_zero()) continue;
      low = any ? std::min(low, m(i, j).low_exponent()) : m(i, j).low_exponent();
      any = true;
    }
    shifts[static_cast<std::size_t>(i)] = -low;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      out(i, j) = *(m(i, j) * LaurentPoly::monomial(Rational(1), -low)).to_poly();
  }
  return out;
}

}  // namespace

LaurentPoly det_laurent(const PolyMatrix& m) {
  if (m.rows() != m.cols()) throw std::invalid_argument("det_laurent: matrix is not square");
  if (m.rows() <= 4) return cofactor_determinant(m);
  std::vector<int> shifts;
  QtMatrix q = clear_rows(m, shifts);
  int total = 0;
  for (int s : shifts) total += s;
  return LaurentPoly(bareiss_determinant(std::move(q)), -total);
}

std::vector<Poly> SNFResult::nontrivial_factors() const {
  std::vector<Poly> out;
  for (const auto& d : diagonal)
    if (d.degree() > 0) out.push_back(d);
  return out;
}

PolyMatrix SNFResult::diagonal_matrix(Eigen::Index rows, Eigen::Index cols) const {
  PolyMatrix d = zero_matrix<LaurentPoly>(rows, cols);
  for (std::size_t k = 0; k < diagonal.size(); ++k)
    d(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(k)) = LaurentPoly(diagonal[k]);
  return d;
}

SNFResult smith_normal_form(const PolyMatrix& m) {
  std::vector<int> shifts;
  QtMatrix q = clear_rows(m, shifts);
  SmithForm<Poly> s = smith_form(q, true);
  SNFResult out;
  out.diagonal = std::move(s.diagonal);
  out.left_transform = to_laurent(s.left);
  out.left_inverse = to_laurent(s.left_inverse);
  out.right_transform = to_laurent(s.right);
  out.right_inverse = to_laurent(s.right_inverse);
  // t is a unit: drop it from the factors and push t^-k into the right transform
  for (std::size_t k = 0; k < out.diagonal.size(); ++k) {
    if (out.diagonal[k].is_zero()) continue;
    int shift = 0;
    out.diagonal[k] = strip_t_power(out.diagonal[k], &shift);
    if (shift == 0) continue;
    const auto col = static_cast<Eigen::Index>(k);
    out.right_transform.col(col) *= LaurentPoly::monomial(Rational(1), -shift);
    out.right_inverse.row(col) *= LaurentPoly::monomial(Rational(1), shift);
  }
  // left = S * diag(t^shift); left^-1 = diag(t^-shift) * S^-1
  for (Eigen::Index j = 0; j < m.rows(); ++j) {
    const auto unit = LaurentPoly::monomial(Rational(1), shifts[static_cast<std::size_t>(j)]);
    const auto unit_inv = LaurentPoly::monomial(Rational(1), -shifts[static_cast<std::size_t>(j)]);
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      out.left_transform(i, j) *= unit;
      out.left_inverse(j, i) *= unit_inv;
    }
  }
  return out;
}

}  // namespace knotcert
