#pragma once

#include "knotcert/matrix.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace knotcert {

class InvalidSeifertMatrix : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Square integer matrix V of even size with det(V - V^T) = 1. Size 0 is the
/// unknot.
class SeifertMatrix {
 public:
  /// Throws InvalidSeifertMatrix on a non-square or odd-sized grid, or when
  /// det(V - V^T) != 1.
  static SeifertMatrix validate(IntMatrix entries, std::string label = {});
  static SeifertMatrix unknot() { return validate(IntMatrix(0, 0), "unknot"); }

  Eigen::Index size() const { return m_.rows(); }
  Eigen::Index genus() const { return m_.rows() / 2; }
  const IntMatrix& entries() const { return m_; }
  const BigInt& operator()(Eigen::Index i, Eigen::Index j) const { return m_(i, j); }
  const std::string& label() const { return label_; }
  SeifertMatrix relabeled(std::string label) const;

  friend bool operator==(const SeifertMatrix& a, const SeifertMatrix& b) {
    return a.m_.rows() == b.m_.rows() && a.m_ == b.m_;
  }
  friend bool operator!=(const SeifertMatrix& a, const SeifertMatrix& b) { return !(a == b); }

 private:
  SeifertMatrix(IntMatrix m, std::string label) : m_(std::move(m)), label_(std::move(label)) {}
  IntMatrix m_;
  std::string label_;
};

IntMatrix int_matrix(std::initializer_list<std::initializer_list<long long>> rows);

/// The three matrices of the seed construction: A (Alexander polynomial
/// Phi_30), B = A # -A, and C = B with the 4x4 block at rows/cols 7..10
/// (1-based) replaced.
enum class SeedMatrix { A, B, C };
SeifertMatrix build_seed_matrix(SeedMatrix which);

SeifertMatrix trefoil();
SeifertMatrix granny();

/// Block sum.
SeifertMatrix connected_sum(const SeifertMatrix& a, const SeifertMatrix& b);
/// -J V J with J the index reversal; a Seifert matrix of the reverse mirror.
SeifertMatrix reverse_mirror(const SeifertMatrix& s);

/// Unit-normalized primitive integer form: low exponent 0, content 1,
/// positive leading coefficient.
LaurentPoly normalize_alexander(const LaurentPoly& f);

/// det(V^T - t V), normalized as above.
LaurentPoly alexander_polynomial(const SeifertMatrix& s);

/// 0 iff |Delta(-1)| = +-1 mod 8.
int arf_invariant(const SeifertMatrix& s);

/// Fox-Milnor condition Delta = +-t^k f(t) f(t^-1). Throws
/// std::invalid_argument unless Delta(1) = +-1.
bool fox_milnor_check(const LaurentPoly& delta);

/// Whether the vectors span a rank-g direct summand of Z^2g on which the
/// Seifert form vanishes. Throws std::invalid_argument on a length mismatch.
bool is_metabolizer(const SeifertMatrix& s, const std::vector<IntVector>& basis);

/// Exhaustive search for sizes <= 4 over primitive vectors with entries in
/// [-3, 3]. Throws std::invalid_argument for larger matrices.
std::optional<std::vector<IntVector>> find_metabolizer(const SeifertMatrix& s);

}  // namespace knotcert
