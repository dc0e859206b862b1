#pragma once

// Rational Alexander module Q[t,t^-1]^n / colspace(V^T - tV), its Blanchfield
// pairing, and the submodule calculus of cyclic primary modules.

#include "knotcert/seifert.hpp"
#include "knotcert/smith.hpp"

#include <stdexcept>
#include <vector>

namespace knotcert {

/// The module is outside the supported class (cyclic of order p^e with p
/// certified irreducible).
class UnsupportedModule : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Element of an Alexander module, stored as its canonical representative in
/// the presentation basis. Two elements of the same module are equal iff
/// their coordinates are.
struct ModuleElement {
  PolyVector coordinates;

  friend bool operator==(const ModuleElement& a, const ModuleElement& b) {
    return a.coordinates == b.coordinates;
  }
  friend bool operator!=(const ModuleElement& a, const ModuleElement& b) { return !(a == b); }
};

/// Class of num/den in Q(t) / Q[t,t^-1]. Canonical: den monic with nonzero
/// constant term, deg num < deg den, gcd(num, den) = 1; zero is 0/1.
class BlanchfieldValue {
 public:
  BlanchfieldValue() = default;
  /// Reduces an arbitrary fraction; den must be nonzero.
  static BlanchfieldValue from_fraction(const LaurentPoly& num, const Poly& den);

  const Poly& numerator() const { return num_; }
  const Poly& denominator() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }
  /// Image under t -> t^-1.
  BlanchfieldValue conjugate() const;

  friend BlanchfieldValue operator+(const BlanchfieldValue& a, const BlanchfieldValue& b);
  friend BlanchfieldValue operator*(const LaurentPoly& f, const BlanchfieldValue& v);
  friend bool operator==(const BlanchfieldValue& a, const BlanchfieldValue& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const BlanchfieldValue& a, const BlanchfieldValue& b) { return !(a == b); }

 private:
  Poly num_;
  Poly den_ = Poly(1);
};

std::string to_string(const BlanchfieldValue& v);

class AlexModule {
 public:
  /// Throws std::invalid_argument when the module is not torsion.
  static AlexModule from_seifert(const SeifertMatrix& s);
  /// Module presented by the columns of a square matrix with nonzero
  /// determinant.
  static AlexModule from_presentation(PolyMatrix presentation);

  const PolyMatrix& presentation() const { return presentation_; }
  /// Invariant factors that are not units, monic, in divisibility order.
  const std::vector<Poly>& invariant_factors() const { return factors_; }
  const PolyMatrix& to_normal() const { return snf_.left_transform; }
  const PolyMatrix& from_normal() const { return snf_.left_inverse; }
  const SNFResult& smith() const { return snf_; }

  Eigen::Index rank() const { return presentation_.rows(); }
  bool is_trivial() const { return factors_.empty(); }
  bool is_cyclic() const { return factors_.size() == 1; }
  /// Product of the invariant factors.
  Poly order() const;
  /// Dimension over Q.
  int dimension() const;

  /// Generator of a cyclic module; throws UnsupportedModule otherwise.
  ModuleElement generator() const;
  /// Image of the k-th nontrivial summand generator.
  ModuleElement summand_generator(std::size_t k) const;
  ModuleElement zero() const;
  ModuleElement element(const PolyVector& coordinates) const;

  ModuleElement add(const ModuleElement& a, const ModuleElement& b) const;
  ModuleElement scale(const LaurentPoly& f, const ModuleElement& x) const;

  /// Coordinates in the normal form: one residue (deg < deg d_k) per
  /// nontrivial invariant factor d_k.
  std::vector<Poly> normal_coordinates(const ModuleElement& x) const;
  ModuleElement from_normal_coordinates(const std::vector<Poly>& residues) const;

  /// Q-basis t^j e_k, j < deg d_k, ordered by k then j.
  std::vector<ModuleElement> rational_basis() const;
  RationalVector to_rational(const ModuleElement& x) const;
  ModuleElement from_rational(const RationalVector& v) const;

  /// Annihilator of x, monic.
  Poly annihilator(const ModuleElement& x) const;

  /// Blanchfield pairing (1 - t) x^T (S - t S^T)^-1 conj(y), for the
  /// presentation S^T - tS.
  BlanchfieldValue blanchfield(const ModuleElement& x, const ModuleElement& y) const;

 private:
  std::vector<Poly> reduce_normal(const PolyVector& coordinates) const;
  ModuleElement check(const ModuleElement& x) const;

  PolyMatrix presentation_;
  SNFResult snf_;
  std::vector<Eigen::Index> nontrivial_;  // diagonal positions of factors_
  std::vector<Poly> factors_;
};

struct Submodule {
  std::vector<ModuleElement> generators;
  Poly order;  // annihilator, monic
};

AlexModule module_from_seifert(const SeifertMatrix& s);

BlanchfieldValue blanchfield(const SeifertMatrix& s, const ModuleElement& x, const ModuleElement& y);

/// p with module order p^e, p certified irreducible; throws UnsupportedModule.
struct PrimaryDecomposition {
  Poly prime;
  int exponent;
};
PrimaryDecomposition primary_structure(const AlexModule& m);

/// The e - 1 proper nontrivial submodules (p^k g), k = 1..e-1.
std::vector<Submodule> proper_submodules(const AlexModule& m);

/// Submodule generated by the given elements.
Submodule span(const AlexModule& m, std::vector<ModuleElement> generators);

bool same_submodule(const AlexModule& m, const Submodule& a, const Submodule& b);

struct OrthogonalComplement {
  Submodule complement;
  bool is_self_annihilating;
};
OrthogonalComplement orthogonal_complement(const AlexModule& m, const Submodule& p);
OrthogonalComplement orthogonal_complement(const SeifertMatrix& s, const Submodule& p);

struct CharacterValue {
  BlanchfieldValue value;
  bool is_nontrivial;
};
CharacterValue character_value(const AlexModule& m, const ModuleElement& x, const ModuleElement& y);
CharacterValue character_value(const SeifertMatrix& s, const ModuleElement& x, const ModuleElement& y);

/// Rank of x -> (Bl(x, e_k))_k over Q, and for every Q-basis element the
/// index of a basis partner with nonzero pairing (-1 when none exists).
struct NonsingularityWitness {
  int dimension;
  int rank;
  std::vector<int> partners;
  bool nonsingular() const { return rank == dimension; }
};
NonsingularityWitness nonsingularity(const AlexModule& m);

}  // namespace knotcert
