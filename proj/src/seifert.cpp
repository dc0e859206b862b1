#include "knotcert/seifert.hpp"

#include "knotcert/cyclotomic.hpp"
#include "knotcert/exact_linalg.hpp"
#include "knotcert/roots.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <complex>
#include <numeric>

namespace knotcert {

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows) {
  const auto n_rows = static_cast<Eigen::Index>(rows.size());
  const auto n_cols = n_rows == 0 ? 0 : static_cast<Eigen::Index>(rows.begin()->size());
  IntMatrix m(n_rows, n_cols);
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    if (static_cast<Eigen::Index>(row.size()) != n_cols)
      throw std::invalid_argument("ragged matrix literal");
    Eigen::Index j = 0;
    for (long long v : row) m(i, j++) = BigInt(v);
    ++i;
  }
  return m;
}

SeifertMatrix SeifertMatrix::validate(IntMatrix entries, std::string label) {
  if (entries.rows() != entries.cols()) throw InvalidSeifertMatrix("Seifert matrix is not square");
  if (entries.rows() % 2 != 0) throw InvalidSeifertMatrix("Seifert matrix has odd size");
  IntMatrix anti = entries - entries.transpose();
  if (bareiss_determinant(anti) != 1)
    throw InvalidSeifertMatrix("det(V - V^T) != 1");
  return {std::move(entries), std::move(label)};
}

SeifertMatrix SeifertMatrix::relabeled(std::string label) const { return {m_, std::move(label)}; }

SeifertMatrix build_seed_matrix(SeedMatrix which) {
  const IntMatrix a = int_matrix({
      {0, 1, 1, 0, 0, 0, 0, 0},
      {0, 0, 1, 0, 0, 0, 0, 0},
      {1, 1, 0, 1, -9, 0, 0, 0},
      {0, 0, 0, 0, 1, 0, 0, 0},
      {0, 0, -9, 1, 0, 1, 26, 0},
      {0, 0, 0, 0, 0, 0, 1, 0},
      {0, 0, 0, 0, 26, 1, 24, 1},
      {0, 0, 0, 0, 0, 0, 0, 1},
  });
  if (which == SeedMatrix::A) return SeifertMatrix::validate(a, "A");

  IntMatrix b = zero_matrix<BigInt>(16, 16);
  for (Eigen::Index i = 0; i < 8; ++i)
    for (Eigen::Index j = 0; j < 8; ++j) {
      b(i, j) = a(i, j);
      b(8 + i, 8 + j) = -a(7 - i, 7 - j);
    }
  if (which == SeedMatrix::B) return SeifertMatrix::validate(b, "B");

  // rows/cols 7..10 in 1-based indexing
  b.block(6, 6, 4, 4) = int_matrix({
      {24, 1, 0, 0},
      {0, 0, 1, 0},
      {0, 1, -2, 0},
      {0, 0, -1, -24},
  });
  return SeifertMatrix::validate(b, "C");
}

SeifertMatrix trefoil() { return SeifertMatrix::validate(int_matrix({{-1, 1}, {0, -1}}), "trefoil"); }

SeifertMatrix granny() { return connected_sum(trefoil(), trefoil()).relabeled("granny"); }

SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b) {
  const Eigen::Index n = a.size() + b.size();
  IntMatrix m = zero_matrix<BigInt>(n, n);
  m.topLeftCorner(a.size(), a.size()) = a.entries();
  m.bottomRightCorner(b.size(), b.size()) = b.entries();
  std::string label;
  if (!a.label().empty() || !b.label().empty()) label = a.label() + " # " + b.label();
  return SeifertMatrix::validate(std::move(m), std::move(label));
}

SeifertMatrix reverse_mirror(const SeifertMatrix& s) {
  const Eigen::Index n = s.size();
  IntMatrix m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) m(i, j) = -s(n - 1 - i, n - 1 - j);
  return SeifertMatrix::validate(std::move(m), s.label().empty() ? "" : "-" + s.label());
}

LaurentPoly normalize_alexander(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  return LaurentPoly(primitive_integer(f.body()));
}

LaurentPoly alexander_polynomial(const SeifertMatrix& s) {
  return normalize_alexander(det_laurent(alexander_presentation(s.entries())));
}

int arf_invariant(const SeifertMatrix& s) {
  const Rational at_minus_one = alexander_polynomial(s).body()(Rational(-1));
  BigInt v = boost::multiprecision::abs(numerator_of(at_minus_one));
  const BigInt r = v % 8;
  return (r == 1 || r == 7) ? 0 : 1;
}

namespace {

// Squarefree reciprocal s with no roots on the unit circle; decides whether
// s = h * h^* (up to units) for some h in Q[t].
bool splits_as_norm(const Poly& s) {
  const Poly s_int = primitive_integer(s);
  const int deg = s_int.degree();
  if (deg == 0) return true;
  if (deg % 2 != 0) return false;

  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
  const double lead = to_double(s_int.leading());
  for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
  for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -to_double(s_int[i]) / lead;
  Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
  const Eigen::VectorXcd roots = solver.eigenvalues();

  // One representative per conjugation orbit inside the unit disk.
  std::vector<std::complex<double>> inside;
  for (Eigen::Index i = 0; i < roots.size(); ++i) {
    const auto r = roots(i);
    if (std::abs(r) >= 1.0) continue;
    if (r.imag() < -1e-12) continue;
    inside.push_back(r);
  }
  int inside_degree = 0;
  for (const auto& r : inside) inside_degree += std::abs(r.imag()) > 1e-12 ? 2 : 1;
  if (2 * inside_degree != deg) return false;
  if (inside.size() > 20) return false;

  const double scale = lead;
  const std::size_t choices = std::size_t{1} << inside.size();
  for (std::size_t mask = 0; mask < choices; ++mask) {
    std::vector<std::complex<double>> poly{1.0};
    for (std::size_t k = 0; k < inside.size(); ++k) {
      std::complex<double> r = inside[k];
      if (mask & (std::size_t{1} << k)) r = 1.0 / r;
      const bool real = std::abs(r.imag()) <= 1e-12 * std::max(1.0, std::abs(r));
      std::vector<std::complex<double>> factors = {r};
      if (!real) factors.push_back(std::conj(r));
      for (const auto& z : factors) {
        std::vector<std::complex<double>> next(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) {
          next[i + 1] += poly[i];
          next[i] -= z * poly[i];
        }
        poly = std::move(next);
      }
    }
    std::vector<Rational> coeffs;
    bool ok = true;
    for (const auto& c : poly) {
      const double v = c.real() * scale;
      if (!std::isfinite(v) || std::abs(v) > 1e15) {
        ok = false;
        break;
      }
      coeffs.emplace_back(BigInt(static_cast<long long>(std::llround(v))));
    }
    if (!ok) continue;
    Poly h(std::move(coeffs));
    if (h.degree() != deg / 2) continue;
    if ((h * reversed(h)).monic() == s_int.monic()) return true;
  }
  return false;
}

}  // namespace

bool fox_milnor_check(const LaurentPoly& delta) {
  if (delta.is_zero()) throw std::invalid_argument("fox_milnor_check: zero polynomial");
  const Poly body = primitive_integer(delta.body());
  const Rational at_one = body(Rational(1));
  if (at_one != 1 && at_one != -1) throw std::invalid_argument("fox_milnor_check: Delta(1) != +-1");
  if (body.degree() == 0) return true;
  for (const auto& [part, multiplicity] : squarefree_decomposition(body)) {
    if (multiplicity % 2 == 0) continue;
    // A squarefree h h^* never vanishes on the unit circle.
    if (count_unit_circle_roots(part) > 0) return false;
    if (!splits_as_norm(part)) return false;
  }
  return true;
}

namespace {

BigInt form(const IntMatrix& s, const IntVector& v, const IntVector& w) {
  BigInt acc = 0;
  for (Eigen::Index i = 0; i < s.rows(); ++i) {
    if (v(i) == 0) continue;
    for (Eigen::Index j = 0; j < s.cols(); ++j) acc += v(i) * s(i, j) * w(j);
  }
  return acc;
}

}  // namespace

bool is_metabolizer(const SeifertMatrix& s, const std::vector<IntVector>& basis) {
  const Eigen::Index n = s.size();
  const auto g = static_cast<std::size_t>(s.genus());
  for (const auto& v : basis)
    if (v.size() != n) throw std::invalid_argument("metabolizer vector has the wrong length");
  if (basis.size() != g) return false;
  if (g == 0) return true;

  IntMatrix rows(static_cast<Eigen::Index>(g), n);
  for (std::size_t k = 0; k < g; ++k) rows.row(static_cast<Eigen::Index>(k)) = basis[k].transpose();
  // Direct summand of rank g iff every invariant factor equals 1.
  const auto snf = smith_form(rows, false);
  for (const auto& d : snf.diagonal)
    if (d != 1) return false;

  for (std::size_t a = 0; a < g; ++a)
    for (std::size_t b = 0; b < g; ++b)
      if (form(s.entries(), basis[a], basis[b]) != 0) return false;
  return true;
}

std::optional<std::vector<IntVector>> find_metabolizer(const SeifertMatrix& s) {
  const Eigen::Index n = s.size();
  if (n > 4) throw std::invalid_argument("metabolizer search is limited to size <= 4");
  if (n == 0) return std::vector<IntVector>{};
  constexpr int kBound = 3;

  std::vector<IntVector> isotropic;
  std::vector<long long> digits(static_cast<std::size_t>(n), -kBound);
  for (;;) {
    IntVector v(n);
    long long content = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      v(i) = digits[static_cast<std::size_t>(i)];
      content = std::gcd(content, std::llabs(digits[static_cast<std::size_t>(i)]));
    }
    if (content == 1 && form(s.entries(), v, v) == 0) isotropic.push_back(v);
    Eigen::Index pos = 0;
    while (pos < n && ++digits[static_cast<std::size_t>(pos)] > kBound) {
      digits[static_cast<std::size_t>(pos)] = -kBound;
      ++pos;
    }
    if (pos == n) break;
  }

  if (n == 2) {
    for (const auto& v : isotropic)
      if (is_metabolizer(s, {v})) return std::vector<IntVector>{v};
    return std::nullopt;
  }
  for (std::size_t a = 0; a < isotropic.size(); ++a)
    for (std::size_t b = a + 1; b < isotropic.size(); ++b) {
      std::vector<IntVector> candidate{isotropic[a], isotropic[b]};
      if (is_metabolizer(s, candidate)) return candidate;
    }
  return std::nullopt;
}

}  // namespace knotcert
