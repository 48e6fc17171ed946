#pragma once

#include <cstdint>
#include <random>

#include "retract/mixed_poly.hpp"

namespace retract {

/// Seeded mt19937_64 with portable bounded sampling (rejection on the raw
/// 64-bit output), so streams are identical across standard libraries.
class Rng {
 public:
  static constexpr const char* kAlgorithm = "mt19937_64";

  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [lo, hi].
  std::int64_t uniform(std::int64_t lo, std::int64_t hi);
  bool coin() { return (next() >> 63) != 0; }

 private:
  std::mt19937_64 engine_;
};

/// Random element with up to max_terms terms, Laurent exponents in
/// [-max_exp, max_exp], polynomial exponents in [0, max_exp] and nonzero
/// integer coefficients in [-max_coeff, max_coeff].
MixedPoly random_poly(const RingPtr& ring, Rng& rng, int max_terms, int max_exp, int max_coeff);

}  // namespace retract
