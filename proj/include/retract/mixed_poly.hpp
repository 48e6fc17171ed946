#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "retract/coeff.hpp"
#include "retract/ring.hpp"

namespace retract {

struct Term {
  Coeff coeff;
  Exponent exp;

  friend bool operator==(const Term& a, const Term& b) { return a.coeff == b.coeff && a.exp == b.exp; }
};

/// Graded lexicographic comparison: total degree first, then x1 > x2 > ...
/// Returns <0, 0, >0.
int grlex_compare(const Exponent& a, const Exponent& b);

/// A unit λ·x^e of B (e supported on the Laurent block).
struct UnitMonomial {
  Coeff scalar;
  Exponent exp;
};

/// Element of B in canonical form: nonzero coefficients, distinct exponents,
/// terms sorted by decreasing grlex order. The zero polynomial has no terms.
/// Values are immutable once built.
class MixedPoly {
 public:
  explicit MixedPoly(RingPtr ring) : ring_(std::move(ring)) {}

  /// Canonicalizes arbitrary terms: reduces coefficients into the domain,
  /// merges equal exponents and drops zeros. Throws std::invalid_argument on
  /// an exponent the ring does not admit.
  static MixedPoly from_terms(RingPtr ring, std::vector<Term> terms);
  static MixedPoly constant(RingPtr ring, const Coeff& c);
  static MixedPoly one(RingPtr ring) { return constant(std::move(ring), Coeff(1)); }
  static MixedPoly variable(RingPtr ring, std::size_t i);
  static MixedPoly monomial(RingPtr ring, const Coeff& c, Exponent e);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  /// Zero or a single term with zero exponent.
  bool is_constant() const;
  /// Constant term value (0 when absent).
  Coeff constant_value() const;

  /// Some(λ, e) iff the element is a unit of B.
  std::optional<UnitMonomial> is_unit() const;
  /// Throws NotAUnit for non-units.
  MixedPoly invert_unit() const;

  /// Integer power; negative exponents require a unit.
  MixedPoly pow(std::int64_t k) const;

  /// Ring-homomorphism image with x_i ↦ images[i]; coefficients are fixed.
  /// Throws NotAUnit when a negative exponent meets a non-unit image.
  MixedPoly substitute(std::span<const MixedPoly> images) const;

  /// Formal ∂/∂x_i.
  MixedPoly partial_derivative(std::size_t i) const;

  /// Exact value at a point, computed in the fraction field of the domain.
  /// Throws EvaluationPole for a zero at a negative exponent.
  Coeff evaluate(std::span<const Coeff> point) const;

  /// Canonical text form, parseable by parse_poly.
  std::string to_string() const;

  /// Multiplies every term by x^shift (shift admitted by the ring).
  MixedPoly shift(const Exponent& shift) const;

  /// Componentwise minimum exponent over all terms (zero vector for zero).
  Exponent min_exponent() const;

  friend bool operator==(const MixedPoly& a, const MixedPoly& b) {
    return same_ring(a.ring_, b.ring_) && a.terms_ == b.terms_;
  }

 private:
  RingPtr ring_;
  std::vector<Term> terms_;
};

MixedPoly add(const MixedPoly& p, const MixedPoly& q);
MixedPoly sub(const MixedPoly& p, const MixedPoly& q);
MixedPoly mul(const MixedPoly& p, const MixedPoly& q);
MixedPoly neg(const MixedPoly& p);
MixedPoly scale(const MixedPoly& p, const Coeff& c);

/// Exact quotient p / q for polynomials with nonnegative exponents. Throws
/// std::domain_error when q does not divide p.
MixedPoly divide_exact(const MixedPoly& p, const MixedPoly& q);

inline MixedPoly operator+(const MixedPoly& p, const MixedPoly& q) { return add(p, q); }
inline MixedPoly operator-(const MixedPoly& p, const MixedPoly& q) { return sub(p, q); }
inline MixedPoly operator*(const MixedPoly& p, const MixedPoly& q) { return mul(p, q); }
inline MixedPoly operator-(const MixedPoly& p) { return neg(p); }

/// Text of a single monomial x^e, "1" for e = 0.
std::string monomial_to_string(const Ring& ring, const Exponent& e);

}  // namespace retract
