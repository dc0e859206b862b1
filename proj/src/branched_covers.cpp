#include "knotcert/branched_covers.hpp"

#include "knotcert/parallel.hpp"

#include <stdexcept>

namespace knotcert {

CoverOrder cover_homology_order(const LaurentPoly& delta, long long k) {
  if (k < 2) throw std::invalid_argument("cover degree must be at least 2");
  if (k > 1'000'000) throw std::invalid_argument("cover degree is too large");
  const Poly body = primitive_integer(normalize_alexander(delta).body());
  const Poly cover = Poly::monomial(Rational(1), static_cast<int>(k)) - Poly(1);
  const Rational r = resultant(body, cover);
  if (!is_integer(r)) throw std::logic_error("non-integral resultant of integer polynomials");
  return {k, boost::multiprecision::abs(numerator_of(r))};
}

CoverOrder cover_homology_order(const SeifertMatrix& s, long long k) {
  return cover_homology_order(alexander_polynomial(s), k);
}

CriterionVerdict livingston_criterion(const LaurentPoly& delta) {
  if (delta.is_zero()) throw std::invalid_argument("livingston_criterion: zero polynomial");
  Poly residual = primitive_integer(delta.body());
  const Rational at_one = residual(Rational(1));
  if (at_one != 1 && at_one != -1) throw std::invalid_argument("livingston_criterion: Delta(1) != +-1");
  CriterionVerdict v;
  v.stripped_factors =
      strip_cyclotomic(residual, [](long long n) { return distinct_prime_factors(n).size() >= 3; });
  v.passes = residual.degree() == 0;
  if (!v.passes) v.witness = primitive_integer(residual);
  return v;
}

CassonGordonCertificate casson_gordon_vanishing_certificate(const SeifertMatrix& s, long long prime_power_bound) {
  CassonGordonCertificate c;
  c.prime_power_bound = prime_power_bound;
  const LaurentPoly delta = alexander_polynomial(s);
  c.criterion = livingston_criterion(delta);
  const auto ks = prime_powers_up_to(prime_power_bound);
  c.scan = parallel_map(ks.size(), [&](std::size_t i) { return cover_homology_order(delta, ks[i]); });
  for (const auto& co : c.scan)
    if (co.order != 1) {
      c.failing_cover = co;
      break;
    }
  c.issued = c.criterion.passes && !c.failing_cover;
  if (c.failing_cover) {
    c.refusal = "the " + std::to_string(c.failing_cover->k) + "-fold branched cover has first homology of order " +
                (c.failing_cover->infinite() ? std::string("infinity") : to_string(c.failing_cover->order));
  } else if (!c.criterion.passes) {
    c.refusal = "Alexander polynomial has the factor " + to_string(*c.criterion.witness) +
                ", which is not a product of Phi_n with n divisible by three distinct primes";
  }
  return c;
}

bool connected_sum_cover_property(const SeifertMatrix& a, const SeifertMatrix& b, long long k) {
  return cover_homology_order(connected_sum(a, b), k).order ==
         cover_homology_order(a, k).order * cover_homology_order(b, k).order;
}

}  // namespace knotcert
