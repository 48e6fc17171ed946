#include "retract/generator.hpp"

#include <set>
#include <stdexcept>

#include "retract/lattice.hpp"
#include "retract/problem.hpp"

namespace retract {

namespace {

Coeff random_unit(const Domain& domain, Rng& rng) {
  switch (domain.kind()) {
    case DomainKind::Integers:
      return rng.coin() ? Coeff(1) : Coeff(-1);
    case DomainKind::PrimeField:
      return domain.from_int(static_cast<long>(rng.uniform(1, static_cast<std::int64_t>(domain.characteristic()) - 1)));
    case DomainKind::Rationals: {
      static const long choices[] = {1, 1, -1, 2, -2, 3};
      Coeff c(choices[rng.uniform(0, 5)]);
      return rng.coin() ? c : Coeff(1 / c);
    }
  }
  return Coeff(1);
}

// Short sum of monomials in at most two variables other than `skip`,
// exponents ±1.
MixedPoly shift_term(const RingPtr& ring, std::size_t skip, Rng& rng) {
  std::vector<Term> terms;
  const auto n = static_cast<std::int64_t>(ring->n());
  const int count = static_cast<int>(rng.uniform(1, 2));
  for (int k = 0; k < count; ++k) {
    Exponent e(ring->n(), 0);
    const int vars = static_cast<int>(rng.uniform(0, 2));
    for (int v = 0; v < vars; ++v) {
      auto i = static_cast<std::size_t>(rng.uniform(0, n - 1));
      if (i == skip) continue;
      e[i] = ring->is_laurent(i) && rng.coin() ? -1 : 1;
    }
    std::int64_t c = 0;
    while (c == 0) c = rng.uniform(-2, 2);
    terms.push_back(Term{ring->domain().from_int(static_cast<long>(c)), std::move(e)});
  }
  return MixedPoly::from_terms(ring, std::move(terms));
}

}  // namespace

IntMatrix random_unimodular(std::size_t d, Rng& rng, int steps) {
  IntMatrix u = IntMatrix::identity(d);
  if (d == 0) return u;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(d) - 1));
    std::size_t j = static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(d) - 1));
    switch (rng.uniform(0, 3)) {
      case 0:
      case 1:
        if (i != j) {
          long t = 0;
          while (t == 0) t = static_cast<long>(rng.uniform(-2, 2));
          for (std::size_t k = 0; k < d; ++k) u(k, i) += t * u(k, j);
        }
        break;
      case 2:
        for (std::size_t k = 0; k < d; ++k) std::swap(u(k, i), u(k, j));
        break;
      default:
        for (std::size_t k = 0; k < d; ++k) u(k, i) = -u(k, i);
        break;
    }
  }
  return u;
}

std::pair<Endomorphism, Endomorphism> random_automorphism(const RingPtr& ring, Rng& rng) {
  const std::size_t n = ring->n(), d = ring->d();
  const Domain& domain = ring->domain();

  // Monomial part: x_i ↦ μ_i·x^{U e_i}; inverse x_i ↦ ν_i·x^{W e_i} with
  // W = U⁻¹ and ν_i = ∏_j μ_j^{-W_ji}.
  IntMatrix u = random_unimodular(d, rng, static_cast<int>(d) + 1);
  IntMatrix w = unimodular_inverse(u);
  std::vector<Coeff> mu;
  for (std::size_t i = 0; i < d; ++i) mu.push_back(random_unit(domain, rng));
  std::vector<MixedPoly> fwd, bwd;
  for (std::size_t i = 0; i < n; ++i) {
    if (i < d) {
      Coeff nu(1);
      for (std::size_t j = 0; j < d; ++j) nu = domain.mul(nu, domain.pow(mu[j], -w(j, i)));
      fwd.push_back(laurent_monomial(ring, u.column(i), mu[i]));
      bwd.push_back(laurent_monomial(ring, w.column(i), nu));
    } else {
      fwd.push_back(MixedPoly::variable(ring, i));
      bwd.push_back(MixedPoly::variable(ring, i));
    }
  }
  Endomorphism alpha(ring, std::move(fwd));
  Endomorphism alpha_inv(ring, std::move(bwd));

  for (std::size_t j = d; j < n; ++j) {
    if (!rng.coin()) continue;
    MixedPoly q = shift_term(ring, j, rng);
    std::vector<MixedPoly> s = Endomorphism::identity(ring).images();
    std::vector<MixedPoly> s_inv = s;
    s[j] = s[j] + q;
    s_inv[j] = s_inv[j] - q;
    // α ← α∘s, α⁻¹ ← s⁻¹∘α⁻¹
    alpha = compose(alpha, Endomorphism(ring, std::move(s)));
    alpha_inv = compose(Endomorphism(ring, std::move(s_inv)), alpha_inv);
  }
  return {std::move(alpha), std::move(alpha_inv)};
}

Endomorphism gen_random_idempotent(const GeneratorSpec& spec) {
  if (spec.d > spec.n || spec.r > spec.d) throw std::invalid_argument("generator needs r <= d <= n");
  RingPtr ring = Ring::make(spec.domain, spec.n, spec.d);
  Rng rng(spec.seed);
  std::set<std::size_t> keep_laurent, keep_poly;
  for (std::size_t i = 0; i < spec.r; ++i) keep_laurent.insert(i);
  for (std::size_t j = spec.d; j < spec.n; ++j) {
    if (rng.coin()) keep_poly.insert(j);
  }
  Endomorphism phi = standard_projection(ring, keep_laurent, keep_poly);
  for (unsigned c = 0; c < spec.complexity; ++c) {
    auto [alpha, alpha_inv] = random_automorphism(ring, rng);
    phi = conjugate(phi, alpha, alpha_inv);
  }
  return phi;
}

std::string generated_problem_text(const GeneratorSpec& spec, const Endomorphism& map) {
  Options options = {
      {"prng", Rng::kAlgorithm},
      {"seed", std::to_string(spec.seed)},
      {"n", std::to_string(spec.n)},
      {"d", std::to_string(spec.d)},
      {"r", std::to_string(spec.r)},
      {"complexity", std::to_string(spec.complexity)},
  };
  return print_problem(map, options, {"generated idempotent endomorphism (prng mt19937_64)"});
}

}  // namespace retract
