#pragma once

#include <string>
#include <vector>

#include "retract/endomorphism.hpp"
#include "retract/problem.hpp"
#include "retract/random.hpp"

namespace retract::testing {

inline RingPtr ring_of(const std::string& header) { return parse_ring("ring " + header); }

inline MixedPoly P(const RingPtr& ring, const std::string& text) { return parse_poly(text, ring); }

inline Endomorphism map_of(const std::string& text) { return parse_problem(text).map; }

inline Endomorphism map_of(const RingPtr& ring, const std::vector<std::string>& images) {
  std::vector<MixedPoly> ims;
  for (const auto& s : images) ims.push_back(P(ring, s));
  return Endomorphism(ring, std::move(ims));
}

// Random element with a few small terms; rings here are tiny so the products
// stay cheap.
inline MixedPoly small_poly(const RingPtr& ring, Rng& rng) { return random_poly(ring, rng, 4, 2, 5); }

}  // namespace retract::testing
