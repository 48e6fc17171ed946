#pragma once

#include <cstdint>
#include <string>

#include <gmpxx.h>

namespace retract {

// Every coefficient is held as an exact rational. Integer and prime-field
// elements are rationals with denominator 1; prime-field elements are kept
// as least nonnegative residues.
using Coeff = mpq_class;

enum class DomainKind { Rationals, Integers, PrimeField };

/// Coefficient domain R: QQ, ZZ or GF(p).
class Domain {
 public:
  static Domain rationals() { return Domain(DomainKind::Rationals, 0); }
  static Domain integers() { return Domain(DomainKind::Integers, 0); }
  /// Throws std::invalid_argument unless p is prime.
  static Domain prime_field(std::uint64_t p);

  DomainKind kind() const { return kind_; }
  std::uint64_t characteristic() const { return p_; }
  bool is_field() const { return kind_ != DomainKind::Integers; }
  bool is_ufd() const { return true; }

  /// "QQ", "ZZ" or "GF(p)".
  std::string name() const;

  bool contains(const Coeff& c) const;
  /// Maps a rational into the domain. For GF(p) the denominator is inverted
  /// mod p; for ZZ a non-integer throws std::domain_error.
  Coeff from_rational(const Coeff& c) const;
  Coeff from_int(long v) const { return from_rational(Coeff(v)); }

  Coeff add(const Coeff& a, const Coeff& b) const { return reduce(a + b); }
  Coeff sub(const Coeff& a, const Coeff& b) const { return reduce(a - b); }
  Coeff mul(const Coeff& a, const Coeff& b) const { return reduce(a * b); }
  Coeff neg(const Coeff& a) const { return reduce(-a); }

  bool is_unit(const Coeff& c) const;
  /// Throws NotAUnit for non-units.
  Coeff inverse(const Coeff& c) const;
  /// c^e; negative e requires a unit.
  Coeff pow(const Coeff& c, const mpz_class& e) const;

  /// Canonical printing: lowest terms with positive denominator for QQ,
  /// least nonnegative residue for GF(p).
  std::string to_string(const Coeff& c) const;

  /// The fraction field used for exact evaluation and rank computations.
  Domain fraction_field() const { return is_field() ? *this : rationals(); }

  friend bool operator==(const Domain& a, const Domain& b) {
    return a.kind_ == b.kind_ && a.p_ == b.p_;
  }

 private:
  Domain(DomainKind kind, std::uint64_t p) : kind_(kind), p_(p) {}
  Coeff reduce(const Coeff& c) const;

  DomainKind kind_;
  std::uint64_t p_;
};

/// Convenience for the spec-level predicate c ∈ R*.
inline bool scalar_is_unit(const Coeff& c, const Domain& domain) { return domain.is_unit(c); }

bool is_prime(std::uint64_t p);

}  // namespace retract
