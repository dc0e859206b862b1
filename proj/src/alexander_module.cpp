#include "knotcert/alexander_module.hpp"

#include "knotcert/cyclotomic.hpp"
#include "knotcert/exact_linalg.hpp"

namespace knotcert {

namespace {

PolyVector apply(const PolyMatrix& m, const PolyVector& v) {
  PolyVector out(m.rows());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    LaurentPoly acc;
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      if (!m(i, j).is_zero() && !v(j).is_zero()) acc += m(i, j) * v(j);
    out(i) = std::move(acc);
  }
  return out;
}

Poly lcm(const Poly& a, const Poly& b) { return exact_div(a * b, poly_gcd(a, b)).monic(); }

// Numerator of v written over the common denominator `common`, reduced
// below deg common, as deg(common) rationals.
std::vector<Rational> numerator_over(const BlanchfieldValue& v, const Poly& common) {
  const Poly scaled = reduce_mod(LaurentPoly(v.numerator() * exact_div(common, v.denominator())), common);
  std::vector<Rational> out(static_cast<std::size_t>(common.degree()));
  for (int i = 0; i < common.degree(); ++i) out[static_cast<std::size_t>(i)] = scaled[i];
  return out;
}

}  // namespace

BlanchfieldValue BlanchfieldValue::from_fraction(const LaurentPoly& num, const Poly& den) {
  if (den.is_zero()) throw std::invalid_argument("BlanchfieldValue: zero denominator");
  int shift = 0;
  const Poly stripped = strip_t_power(den, &shift);
  BlanchfieldValue v;
  if (stripped.degree() == 0) return v;
  const Rational lead = stripped.leading();
  const Poly d = stripped.monic();
  const LaurentPoly n = num * LaurentPoly::monomial(1 / lead, -shift);
  const Poly r = reduce_mod(n, d);
  if (r.is_zero()) return v;
  const Poly g = poly_gcd(r, d);
  v.num_ = exact_div(r, g);
  v.den_ = exact_div(d, g);
  return v;
}

BlanchfieldValue BlanchfieldValue::conjugate() const {
  if (is_zero()) return *this;
  const int d = den_.degree();
  return from_fraction(LaurentPoly(num_).conjugate() * LaurentPoly::monomial(1, d), reversed(den_));
}

BlanchfieldValue operator+(const BlanchfieldValue& a, const BlanchfieldValue& b) {
  return BlanchfieldValue::from_fraction(LaurentPoly(a.num_ * b.den_ + b.num_ * a.den_), a.den_ * b.den_);
}

BlanchfieldValue operator*(const LaurentPoly& f, const BlanchfieldValue& v) {
  return BlanchfieldValue::from_fraction(f * LaurentPoly(v.num_), v.den_);
}

std::string to_string(const BlanchfieldValue& v) {
  if (v.is_zero()) return "0";
  return "(" + to_string(v.numerator()) + ")/(" + to_string(v.denominator()) + ")";
}

AlexModule AlexModule::from_seifert(const SeifertMatrix& s) {
  return from_presentation(alexander_presentation(s.entries()));
}

AlexModule AlexModule::from_presentation(PolyMatrix presentation) {
  if (presentation.rows() != presentation.cols())
    throw std::invalid_argument("presentation matrix is not square");
  AlexModule m;
  m.presentation_ = std::move(presentation);
  const Eigen::Index n = m.presentation_.rows();
  if (n == 0) {
    m.snf_.left_transform = m.snf_.right_transform = PolyMatrix(0, 0);
    m.snf_.left_inverse = m.snf_.right_inverse = PolyMatrix(0, 0);
    return m;
  }
  m.snf_ = smith_normal_form(m.presentation_);
  for (std::size_t i = 0; i < m.snf_.diagonal.size(); ++i) {
    const Poly& d = m.snf_.diagonal[i];
    if (d.is_zero()) throw std::invalid_argument("Alexander module is not torsion");
    if (d.degree() > 0) {
      m.nontrivial_.push_back(static_cast<Eigen::Index>(i));
      m.factors_.push_back(d);
    }
  }
  return m;
}

AlexModule module_from_seifert(const SeifertMatrix& s) { return AlexModule::from_seifert(s); }

Poly AlexModule::order() const {
  Poly out(1);
  for (const auto& d : factors_) out *= d;
  return out;
}

int AlexModule::dimension() const {
  int dim = 0;
  for (const auto& d : factors_) dim += d.degree();
  return dim;
}

std::vector<Poly> AlexModule::reduce_normal(const PolyVector& coordinates) const {
  if (coordinates.size() != rank())
    throw std::invalid_argument("module element has the wrong number of coordinates");
  const PolyVector y = apply(snf_.left_transform, coordinates);
  std::vector<Poly> residues;
  residues.reserve(factors_.size());
  for (std::size_t k = 0; k < factors_.size(); ++k) residues.push_back(reduce_mod(y(nontrivial_[k]), factors_[k]));
  return residues;
}

ModuleElement AlexModule::from_normal_coordinates(const std::vector<Poly>& residues) const {
  if (residues.size() != factors_.size()) throw std::invalid_argument("wrong number of normal coordinates");
  PolyVector z(rank());
  for (Eigen::Index i = 0; i < rank(); ++i) z(i) = LaurentPoly();
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    if (residues[k].degree() >= factors_[k].degree()) throw std::invalid_argument("normal coordinate is not reduced");
    z(nontrivial_[k]) = LaurentPoly(residues[k]);
  }
  return {apply(snf_.left_inverse, z)};
}

ModuleElement AlexModule::element(const PolyVector& coordinates) const {
  return from_normal_coordinates(reduce_normal(coordinates));
}

std::vector<Poly> AlexModule::normal_coordinates(const ModuleElement& x) const {
  return reduce_normal(x.coordinates);
}

ModuleElement AlexModule::check(const ModuleElement& x) const {
  if (x.coordinates.size() != rank())
    throw std::invalid_argument("module element has the wrong number of coordinates");
  return x;
}

ModuleElement AlexModule::zero() const { return from_normal_coordinates(std::vector<Poly>(factors_.size())); }

ModuleElement AlexModule::summand_generator(std::size_t k) const {
  if (k >= factors_.size()) throw std::out_of_range("summand index");
  std::vector<Poly> residues(factors_.size());
  residues[k] = Poly(1);
  return from_normal_coordinates(residues);
}

ModuleElement AlexModule::generator() const {
  if (!is_cyclic()) throw UnsupportedModule("module is not cyclic");
  return summand_generator(0);
}

ModuleElement AlexModule::add(const ModuleElement& a, const ModuleElement& b) const {
  return element(check(a).coordinates + check(b).coordinates);
}

ModuleElement AlexModule::scale(const LaurentPoly& f, const ModuleElement& x) const {
  PolyVector c = check(x).coordinates;
  for (Eigen::Index i = 0; i < c.size(); ++i) c(i) = f * c(i);
  return element(c);
}

std::vector<ModuleElement> AlexModule::rational_basis() const {
  std::vector<ModuleElement> basis;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (int j = 0; j < factors_[k].degree(); ++j) {
      std::vector<Poly> residues(factors_.size());
      residues[k] = Poly::monomial(Rational(1), j);
      basis.push_back(from_normal_coordinates(residues));
    }
  return basis;
}

RationalVector AlexModule::to_rational(const ModuleElement& x) const {
  const auto residues = normal_coordinates(x);
  RationalVector v(dimension());
  Eigen::Index pos = 0;
  for (std::size_t k = 0; k < factors_.size(); ++k)
    for (int j = 0; j < factors_[k].degree(); ++j) v(pos++) = residues[k][j];
  return v;
}

ModuleElement AlexModule::from_rational(const RationalVector& v) const {
  if (v.size() != dimension()) throw std::invalid_argument("rational vector has the wrong length");
  std::vector<Poly> residues;
  Eigen::Index pos = 0;
  for (const auto& d : factors_) {
    std::vector<Rational> coeffs;
    for (int j = 0; j < d.degree(); ++j) coeffs.push_back(v(pos++));
    residues.emplace_back(std::move(coeffs));
  }
  return from_normal_coordinates(residues);
}

Poly AlexModule::annihilator(const ModuleElement& x) const {
  const auto residues = normal_coordinates(x);
  Poly out(1);
  for (std::size_t k = 0; k < factors_.size(); ++k)
    out = lcm(out, exact_div(factors_[k], poly_gcd(factors_[k], residues[k])));
  return out.monic();
}

BlanchfieldValue AlexModule::blanchfield(const ModuleElement& x, const ModuleElement& y) const {
  // With L P R = D:  (P^T)^-1 = L^T D^-1 R^T, so the pairing is
  // (1 - t) sum_k (L x)_k (R^T conj y)_k / d_k.
  const PolyVector lx = apply(snf_.left_transform, check(x).coordinates);
  PolyVector y_bar = check(y).coordinates;
  for (Eigen::Index i = 0; i < y_bar.size(); ++i) y_bar(i) = y_bar(i).conjugate();
  const PolyVector ry = apply(snf_.right_transform.transpose(), y_bar);
  BlanchfieldValue total;
  const LaurentPoly one_minus_t = LaurentPoly(1) - LaurentPoly::t();
  for (std::size_t k = 0; k < factors_.size(); ++k) {
    const Eigen::Index i = nontrivial_[k];
    if (lx(i).is_zero() || ry(i).is_zero()) continue;
    total = total + BlanchfieldValue::from_fraction(one_minus_t * lx(i) * ry(i), factors_[k]);
  }
  return total;
}

BlanchfieldValue blanchfield(const SeifertMatrix& s, const ModuleElement& x, const ModuleElement& y) {
  return module_from_seifert(s).blanchfield(x, y);
}

PrimaryDecomposition primary_structure(const AlexModule& m) {
  if (m.is_trivial()) throw UnsupportedModule("module is trivial");
  if (!m.is_cyclic()) throw UnsupportedModule("module is not cyclic");
  const auto parts = squarefree_decomposition(m.invariant_factors().front());
  if (parts.size() != 1) throw UnsupportedModule("module order is not a prime power");
  const Poly p = parts.front().first.monic();
  const bool irreducible = p.degree() == 1 || recognize_cyclotomic(p).has_value() ||
                           (p.degree() <= 3 && rational_roots(p).empty());
  if (!irreducible) throw UnsupportedModule("cannot certify irreducibility of " + to_string(p));
  return {p, parts.front().second};
}

std::vector<Submodule> proper_submodules(const AlexModule& m) {
  const auto [p, e] = primary_structure(m);
  const ModuleElement g = m.generator();
  std::vector<Submodule> out;
  for (int k = 1; k < e; ++k) out.push_back({{m.scale(LaurentPoly(pow(p, k)), g)}, pow(p, e - k)});
  return out;
}

Submodule span(const AlexModule& m, std::vector<ModuleElement> generators) {
  Submodule sub;
  sub.order = Poly(1);
  for (auto& x : generators) {
    const ModuleElement reduced = m.element(x.coordinates);
    sub.order = lcm(sub.order, m.annihilator(reduced));
    sub.generators.push_back(reduced);
  }
  return sub;
}

namespace {

// Columns span the submodule over Q.
RationalMatrix rational_span(const AlexModule& m, const Submodule& s) {
  const int dim = m.dimension();
  std::vector<RationalVector> cols;
  for (const auto& g : s.generators) {
    ModuleElement x = g;
    for (int j = 0; j < dim; ++j) {
      cols.push_back(m.to_rational(x));
      x = m.scale(LaurentPoly::t(), x);
    }
  }
  RationalMatrix out(dim, static_cast<Eigen::Index>(cols.size()));
  for (std::size_t c = 0; c < cols.size(); ++c) out.col(static_cast<Eigen::Index>(c)) = cols[c];
  return out;
}

// Rows: coefficients of Bl(basis_i, partner) over the common denominator,
// stacked for every partner; one column per Q-basis element.
RationalMatrix pairing_matrix(const AlexModule& m, const std::vector<ModuleElement>& partners) {
  const auto basis = m.rational_basis();
  const Poly common = m.invariant_factors().empty() ? Poly(1) : m.invariant_factors().back();
  const auto width = static_cast<Eigen::Index>(common.degree());
  RationalMatrix a(width * static_cast<Eigen::Index>(partners.size()), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t r = 0; r < partners.size(); ++r) {
      const auto coeffs = numerator_over(m.blanchfield(basis[c], partners[r]), common);
      for (Eigen::Index i = 0; i < width; ++i)
        a(static_cast<Eigen::Index>(r) * width + i, static_cast<Eigen::Index>(c)) = coeffs[static_cast<std::size_t>(i)];
    }
  return a;
}

}  // namespace

bool same_submodule(const AlexModule& m, const Submodule& a, const Submodule& b) {
  const RationalMatrix sa = rational_span(m, a);
  const RationalMatrix sb = rational_span(m, b);
  RationalMatrix both(sa.rows(), sa.cols() + sb.cols());
  both << sa, sb;
  const auto ra = exact_rank(sa);
  return ra == exact_rank(sb) && ra == exact_rank(both);
}

OrthogonalComplement orthogonal_complement(const AlexModule& m, const Submodule& p) {
  primary_structure(m);
  const Poly& d = m.invariant_factors().front();
  const ModuleElement g = m.generator();
  Poly h = d;
  if (!p.generators.empty()) {
    const RationalMatrix kernel = exact_nullspace(pairing_matrix(m, p.generators));
    for (Eigen::Index c = 0; c < kernel.cols(); ++c)
      h = poly_gcd(h, m.normal_coordinates(m.from_rational(kernel.col(c))).front());
  } else {
    h = Poly(1);
  }
  OrthogonalComplement out;
  out.complement = h == d ? span(m, {}) : span(m, {m.scale(LaurentPoly(h), g)});
  out.is_self_annihilating = same_submodule(m, p, out.complement);
  return out;
}

OrthogonalComplement orthogonal_complement(const SeifertMatrix& s, const Submodule& p) {
  return orthogonal_complement(module_from_seifert(s), p);
}

CharacterValue character_value(const AlexModule& m, const ModuleElement& x, const ModuleElement& y) {
  BlanchfieldValue v = m.blanchfield(x, y);
  const bool nontrivial = !v.is_zero();
  return {std::move(v), nontrivial};
}

CharacterValue character_value(const SeifertMatrix& s, const ModuleElement& x, const ModuleElement& y) {
  return character_value(module_from_seifert(s), x, y);
}

NonsingularityWitness nonsingularity(const AlexModule& m) {
  NonsingularityWitness w;
  w.dimension = m.dimension();
  if (m.is_trivial()) {
    w.rank = 0;
    return w;
  }
  std::vector<ModuleElement> generators;
  for (std::size_t k = 0; k < m.invariant_factors().size(); ++k) generators.push_back(m.summand_generator(k));
  w.rank = static_cast<int>(exact_rank(pairing_matrix(m, generators)));
  const auto basis = m.rational_basis();
  for (const auto& b : basis) {
    int partner = -1;
    for (std::size_t j = 0; j < basis.size() && partner < 0; ++j)
      if (!m.blanchfield(b, basis[j]).is_zero()) partner = static_cast<int>(j);
    w.partners.push_back(partner);
  }
  return w;
}

}  // namespace knotcert
