#pragma once

// Homology orders of branched cyclic covers and the cyclotomic criterion for
// prime-power covers to be rational homology spheres.

#include "knotcert/cyclotomic.hpp"
#include "knotcert/seifert.hpp"

#include <optional>
#include <string>
#include <vector>

namespace knotcert {

/// |H_1| of the k-fold branched cover; order 0 encodes infinite homology.
struct CoverOrder {
  long long k;
  BigInt order;
  bool infinite() const { return order == 0; }
};

CoverOrder cover_homology_order(const LaurentPoly& delta, long long k);
CoverOrder cover_homology_order(const SeifertMatrix& s, long long k);

struct CriterionVerdict {
  bool passes;
  std::vector<CyclotomicFactor> stripped_factors;
  std::optional<Poly> witness;  // residual that is not a unit
};

/// Strips every Phi_n with n divisible by at least three distinct primes;
/// passes iff nothing else remains. Throws when Delta(1) != +-1.
CriterionVerdict livingston_criterion(const LaurentPoly& delta);

struct CassonGordonCertificate {
  bool issued;
  long long prime_power_bound;
  CriterionVerdict criterion;
  std::vector<CoverOrder> scan;  // every prime power <= bound, ascending
  std::optional<CoverOrder> failing_cover;
  std::string refusal;  // empty when issued
};

constexpr long long kDefaultPrimePowerBound = 128;

/// Issued iff the criterion passes and every prime-power cover up to the
/// bound is a homology sphere.
CassonGordonCertificate casson_gordon_vanishing_certificate(const SeifertMatrix& s,
                                                            long long prime_power_bound = kDefaultPrimePowerBound);

/// order(S1 # S2, k) == order(S1, k) * order(S2, k).
bool connected_sum_cover_property(const SeifertMatrix& a, const SeifertMatrix& b, long long k);

}  // namespace knotcert
