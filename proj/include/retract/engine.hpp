#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "retract/endomorphism.hpp"
#include "retract/lattice.hpp"

namespace retract {

/// A new Laurent coordinate y_i = x^{b_i}. Fixed ones satisfy φ(y_i) = y_i;
/// killed ones satisfy φ(x^{b_i}) = normalizer, so normalizer⁻¹·x^{b_i} ↦ 1.
struct YVariable {
  enum class Kind { Fixed, Killed };

  IntVector exponent;  // on the Laurent block
  Coeff normalizer;
  Kind kind;
};

/// Transcendence degree, exact when lo == hi.
struct Trdeg {
  std::size_t lo = 0;
  std::size_t hi = 0;

  bool exact() const { return lo == hi; }
  friend bool operator==(const Trdeg&, const Trdeg&) = default;
};

namespace verdict {
struct CoefficientRing {
  friend bool operator==(const CoefficientRing&, const CoefficientRing&) = default;
};
struct WholeRing {
  friend bool operator==(const WholeRing&, const WholeRing&) = default;
};
struct PureLaurent {
  std::size_t r;
  friend bool operator==(const PureLaurent&, const PureLaurent&) = default;
};
struct LaurentTensorPoly {
  std::size_t r;
  std::size_t s;
  friend bool operator==(const LaurentTensorPoly&, const LaurentTensorPoly&) = default;
};
struct UFDClassified {
  std::size_t r;
  std::size_t s;
  bool generators_explicit;
  friend bool operator==(const UFDClassified&, const UFDClassified&) = default;
};
struct BoundsOnly {
  std::size_t lo;
  std::size_t hi;
  friend bool operator==(const BoundsOnly&, const BoundsOnly&) = default;
};
}  // namespace verdict

using Classification = std::variant<verdict::CoefficientRing, verdict::WholeRing, verdict::PureLaurent,
                                    verdict::LaurentTensorPoly, verdict::UFDClassified, verdict::BoundsOnly>;

std::string classification_tag(const Classification& c);

enum class Rationality { Rational, Unknown, NotApplicable };

std::string to_string(Rationality r);

struct Certificate {
  std::string name;
  bool passed;
};

struct RetractReport {
  RingPtr ring;
  std::size_t r = 0;
  SummandDecomposition decomposition;
  std::vector<YVariable> y;
  /// y_1..y_r followed by φ(x_j) for the polynomial variables.
  std::vector<MixedPoly> generators;
  /// Ring with Laurent block y_1..y_r and the original polynomial variables,
  /// modelling B/J.
  RingPtr quotient_ring;
  std::vector<MixedPoly> quotient_generators;
  Trdeg trdeg;
  Classification classification;
  Rationality rationality = Rationality::Unknown;
  std::vector<Certificate> certificates;

  bool certified() const;
};

struct YVariables {
  SummandDecomposition decomposition;
  std::vector<YVariable> y;
};

/// Builds the y-coordinates from the unit-lattice summand decomposition and
/// verifies φ(y_i) = y_i (fixed) and φ(λ_i⁻¹·x^{b_i}) = 1 (killed) exactly.
/// Throws NotIdempotent, or CertificateFailure with a dump on inconsistency.
YVariables compute_y_variables(const Endomorphism& phi);

/// Ring for B/J ≅ S[x_{d+1},...,x_n] with Laurent variables named y1..yr
/// (renamed away from clashes with polynomial variable names).
RingPtr quotient_ring(const Ring& ring, std::size_t r);

/// Image of p in B/J: Laurent exponents v are rewritten as c = T·v, killed
/// coordinates contribute ∏ λ_i^{c_i} to the coefficient.
MixedPoly quotient_mod_J(const MixedPoly& p, const SummandDecomposition& dec, std::span<const YVariable> y,
                         const RingPtr& target);

enum class RankMode { Exact, Probabilistic };

/// Rank of the Jacobian (∂g_i/∂x_j) over the rational function field.
/// Exact mode: fraction-free elimination after clearing Laurent denominators.
/// Probabilistic mode: evaluation at up to three random points, falling back
/// to the exact path unless full rank is observed. Characteristic 0 only.
std::size_t jacobian_rank(std::span<const MixedPoly> generators, const Ring& ring, RankMode mode = RankMode::Exact,
                          std::uint64_t seed = 0x9e3779b97f4a7c15ULL);

/// Rank of the Jacobian evaluated at one point (a lower bound for the generic rank).
std::size_t jacobian_rank_at(std::span<const MixedPoly> generators, const Ring& ring, std::span<const Coeff> point);

/// Transcendence degree of the subring generated by the given elements.
/// Characteristic 0: exact Jacobian rank. Characteristic p: the interval
/// [r, r + n - d] (collapsed to r when d = n), or [0, min(#gens, n)] without
/// a unit rank.
Trdeg transcendence_degree(std::span<const MixedPoly> generators, const Ring& ring,
                           std::optional<std::size_t> unit_rank = std::nullopt);

/// For idempotent φ the matrix Q = φ(J_φ) satisfies Q² = Q and has the same
/// rank as J_φ, so tr Q is a constant equal to the transcendence degree of
/// φ(B). Returns nullopt if the trace is not a constant in [0, n].
/// Characteristic 0 only.
std::optional<std::size_t> idempotent_jacobian_trace(const Endomorphism& phi);

/// Throws std::invalid_argument on inconsistent inputs.
Classification classify(std::size_t n, std::size_t d, std::size_t r, const Trdeg& trdeg, const Domain& domain,
                        bool generators_explicit = false);

/// Throws std::invalid_argument for a non-field domain.
Rationality rationality_verdict(std::size_t n, std::size_t d, std::size_t r, const Trdeg& trdeg,
                                const Domain& domain);

/// Full pipeline. Throws InvalidEndomorphism or NotIdempotent (with the
/// offending φ² vs φ difference) on bad input, CertificateFailure when an
/// internal check fails.
RetractReport analyze(const Endomorphism& phi);

}  // namespace retract
