#include "retract/random.hpp"

#include <limits>
#include <stdexcept>

namespace retract {

std::int64_t Rng::uniform(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("empty sampling range");
  const std::uint64_t range = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (range == 0) return static_cast<std::int64_t>(next());
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t x;
  do {
    x = next();
  } while (x > limit);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + x % range);
}

MixedPoly random_poly(const RingPtr& ring, Rng& rng, int max_terms, int max_exp, int max_coeff) {
  std::vector<Term> terms;
  const int count = static_cast<int>(rng.uniform(0, max_terms));
  for (int k = 0; k < count; ++k) {
    Exponent e(ring->n());
    for (std::size_t i = 0; i < e.size(); ++i) {
      e[i] = ring->is_laurent(i) ? rng.uniform(-max_exp, max_exp) : rng.uniform(0, max_exp);
    }
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-max_coeff, max_coeff);
    terms.push_back(Term{ring->domain().from_int(static_cast<long>(c)), std::move(e)});
  }
  return MixedPoly::from_terms(ring, std::move(terms));
}

}  // namespace retract
