#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <vector>

#include "retract/int_matrix.hpp"
#include "retract/mixed_poly.hpp"

namespace retract {

/// Induced action on the unit lattice: images[i] = lambdas[i]·x^{column i of M}
/// for every Laurent-block index i.
struct MonomialData {
  IntMatrix m;
  std::vector<Coeff> lambdas;
};

/// One variable where φ∘φ and φ disagree.
struct IdempotencyDefect {
  std::size_t index;
  MixedPoly twice;  // φ(φ(x_i))
  MixedPoly once;   // φ(x_i)
};

/// R-algebra self-map of B, given by the images of the variables.
class Endomorphism {
 public:
  /// Throws std::invalid_argument on a wrong image count, RingMismatch on
  /// images from another ring. Validity (units on the Laurent block) is
  /// checked separately by validate().
  Endomorphism(RingPtr ring, std::vector<MixedPoly> images);

  static Endomorphism identity(RingPtr ring);

  const RingPtr& ring() const { return ring_; }
  const std::vector<MixedPoly>& images() const { return images_; }
  const MixedPoly& image(std::size_t i) const { return images_[i]; }

  /// True iff every Laurent-block variable maps to a unit.
  bool validate() const;

  /// φ(p). Throws InvalidEndomorphism when validate() fails.
  MixedPoly apply(const MixedPoly& p) const;

  bool is_idempotent() const;
  /// Variables with φ²(x_i) ≠ φ(x_i); empty iff idempotent.
  std::vector<IdempotencyDefect> idempotency_defects() const;

  /// Throws InvalidEndomorphism when validate() fails.
  MonomialData monomial_part() const;

  friend bool operator==(const Endomorphism& a, const Endomorphism& b) {
    return same_ring(a.ring_, b.ring_) && a.images_ == b.images_;
  }

 private:
  RingPtr ring_;
  std::vector<MixedPoly> images_;
};

/// φ∘ψ: the result sends x_i to φ(ψ(x_i)).
Endomorphism compose(const Endomorphism& phi, const Endomorphism& psi);

/// α∘φ∘α⁻¹. Throws InvalidEndomorphism unless alpha_inv is a two-sided
/// inverse of alpha.
Endomorphism conjugate(const Endomorphism& phi, const Endomorphism& alpha, const Endomorphism& alpha_inv);

/// Keeps the listed variables (0-based), sends dropped Laurent variables to 1
/// and dropped polynomial variables to 0.
Endomorphism standard_projection(RingPtr ring, const std::set<std::size_t>& keep_laurent,
                                 const std::set<std::size_t>& keep_poly);

/// x^e for an exponent supported on the Laurent block (length d) of the ring.
MixedPoly laurent_monomial(const RingPtr& ring, const IntVector& e, const Coeff& c = Coeff(1));

}  // namespace retract
