#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>

#include "retract/endomorphism.hpp"
#include "retract/random.hpp"

namespace retract {

struct GeneratorSpec {
  std::size_t n = 2;
  std::size_t d = 2;
  std::size_t r = 1;
  std::uint64_t seed = 0;
  unsigned complexity = 1;
  Domain domain = Domain::rationals();
};

/// Random automorphism and its inverse: a unimodular monomial map with unit
/// scalars on the Laurent block, followed by triangular shifts
/// x_j ↦ x_j + q (q free of x_j) on polynomial variables.
std::pair<Endomorphism, Endomorphism> random_automorphism(const RingPtr& ring, Rng& rng);

/// Random d×d unimodular matrix built from elementary column operations.
IntMatrix random_unimodular(std::size_t d, Rng& rng, int steps);

/// Idempotent standard projection keeping r Laurent variables and a random
/// subset of polynomial variables, conjugated `complexity` times by random
/// automorphisms. Deterministic in the seed. Throws std::invalid_argument
/// unless r <= d <= n.
Endomorphism gen_random_idempotent(const GeneratorSpec& spec);

/// Problem text for a generated instance; the header records the PRNG and spec.
std::string generated_problem_text(const GeneratorSpec& spec, const Endomorphism& map);

}  // namespace retract
