#include <gtest/gtest.h>

#include "retract/errors.hpp"
#include "retract/generator.hpp"
#include "retract/lattice.hpp"
#include "support.hpp"

using namespace retract;
using namespace retract::testing;

namespace {

const char* kE1 = "ring QQ[x1^±, x2^±]\nx1 -> x1*x2\nx2 -> 1\n";
const char* kE7 = "ring QQ[x1^±, x2^±, x3]\nx1 -> x1\nx2 -> 1\nx3 -> x3 + x2 - 1\n";

// Random monomial map λ_i·x^{M e_i} on a pure Laurent ring.
Endomorphism random_monomial_map(const RingPtr& ring, Rng& rng, int spread) {
  std::vector<MixedPoly> images;
  for (std::size_t i = 0; i < ring->d(); ++i) {
    IntVector e(ring->d());
    for (auto& x : e) x = rng.uniform(-spread, spread);
    static const long scalars[] = {1, 1, -1, 2};
    images.push_back(laurent_monomial(ring, e, ring->domain().from_int(scalars[rng.uniform(0, 3)])));
  }
  return Endomorphism(ring, std::move(images));
}

}  // namespace

TEST(Endomorphism, Validate) {
  EXPECT_TRUE(map_of(kE1).validate());
  auto q = ring_of("QQ[x1^±, x2^±]");
  EXPECT_FALSE(map_of(q, {"x1 + x2", "x2"}).validate());
  EXPECT_TRUE(map_of("ring QQ[x1^±, x2]\nx1 -> x1\nx2 -> x1 + x1^-1\n").validate());
  EXPECT_THROW(map_of(q, {"x1 + x2", "x2"}).apply(P(q, "x1")), InvalidEndomorphism);
}

TEST(Endomorphism, ConstructorChecks) {
  auto q = ring_of("QQ[x1^±, x2^±]");
  EXPECT_THROW(Endomorphism(q, {P(q, "x1")}), std::invalid_argument);
  auto other = ring_of("QQ[x1^±, x2]");
  EXPECT_THROW(Endomorphism(q, {P(q, "x1"), P(other, "x2")}), RingMismatch);
}

TEST(Endomorphism, Apply) {
  auto e1 = map_of(kE1);
  auto q = e1.ring();
  MixedPoly p = P(q, "x1^2 - 3*x2^-1");
  EXPECT_EQ(Endomorphism::identity(q).apply(p), p);
  EXPECT_EQ(e1.apply(P(q, "x1^-1")), P(q, "x1^-1*x2^-1"));
  auto e3 = map_of("ring QQ[x1^±, x2]\nx1 -> x1\nx2 -> x1 + x1^-1\n");
  EXPECT_EQ(e3.apply(P(e3.ring(), "x2^2")), P(e3.ring(), "x1^2 + 2 + x1^-2"));
}

TEST(Endomorphism, Compose) {
  auto e1 = map_of(kE1);
  auto q = e1.ring();
  EXPECT_EQ(compose(e1, Endomorphism::identity(q)), e1);
  auto swap = map_of(q, {"x2", "x1"});
  EXPECT_EQ(compose(swap, swap), Endomorphism::identity(q));
  EXPECT_EQ(compose(e1, e1), e1);
}

TEST(Endomorphism, IsIdempotent) {
  auto q = ring_of("QQ[x1^±, x2^±]");
  EXPECT_TRUE(Endomorphism::identity(q).is_idempotent());
  auto swap = map_of(q, {"x2", "x1"});
  EXPECT_FALSE(swap.is_idempotent());
  auto defects = swap.idempotency_defects();
  ASSERT_EQ(defects.size(), 2u);
  EXPECT_EQ(defects[0].index, 0u);
  EXPECT_EQ(defects[0].twice, P(q, "x1"));
  EXPECT_EQ(defects[0].once, P(q, "x2"));
  EXPECT_TRUE(map_of(kE7).is_idempotent());
}

TEST(Endomorphism, MonomialPart) {
  auto md = map_of(kE1).monomial_part();
  EXPECT_EQ(md.m, IntMatrix::from_rows({{1, 0}, {1, 0}}));
  EXPECT_EQ(md.lambdas, (std::vector<Coeff>{1, 1}));
  auto q = ring_of("QQ[x1^±, x2^±]");
  auto scaled = map_of(q, {"x1", "3"}).monomial_part();
  EXPECT_EQ(scaled.m, IntMatrix::from_rows({{1, 0}, {0, 0}}));
  EXPECT_EQ(scaled.lambdas, (std::vector<Coeff>{1, 3}));
  auto ident = Endomorphism::identity(q).monomial_part();
  EXPECT_EQ(ident.m, IntMatrix::identity(2));
  EXPECT_EQ(ident.lambdas, (std::vector<Coeff>{1, 1}));
}

TEST(Endomorphism, Conjugate) {
  auto q = ring_of("QQ[x1^±, x2^±]");
  auto pi = standard_projection(q, {0}, {});
  auto alpha = map_of(q, {"x1", "x1^2*x2"});
  auto alpha_inv = map_of(q, {"x1", "x1^-2*x2"});
  EXPECT_EQ(conjugate(pi, alpha, alpha_inv), map_of(q, {"x1", "x1^-2"}));
  auto id = Endomorphism::identity(q);
  EXPECT_EQ(conjugate(id, alpha, alpha_inv), id);
  EXPECT_EQ(conjugate(pi, id, id), pi);
  EXPECT_THROW(conjugate(pi, alpha, alpha), InvalidEndomorphism);
}

TEST(Endomorphism, StandardProjection) {
  auto r = ring_of("QQ[x1^±, x2^±, x3]");
  EXPECT_EQ(standard_projection(r, {}, {}), map_of(r, {"1", "1", "0"}));
  EXPECT_EQ(standard_projection(r, {0, 1}, {2}), Endomorphism::identity(r));
  auto q = ring_of("QQ[x1^±, x2^±]");
  auto keep1 = standard_projection(q, {0}, {});
  EXPECT_EQ(keep1, map_of(q, {"x1", "1"}));
  EXPECT_TRUE(keep1.is_idempotent());
}

TEST(EndomorphismProperty, MonomialPartIsFunctorial) {
  auto ring = ring_of("QQ[x1^±, x2^±, x3^±]");
  Rng rng(31);
  for (int k = 0; k < 200; ++k) {
    auto phi = random_monomial_map(ring, rng, 2);
    auto psi = random_monomial_map(ring, rng, 2);
    auto mp = phi.monomial_part(), ms = psi.monomial_part();
    auto mc = compose(phi, psi).monomial_part();
    ASSERT_EQ(mc.m, mp.m * ms.m);
    // λ'_i = μ_i·∏_j λ_j^{(M_ψ)_{ji}} with μ the scalars of ψ.
    for (std::size_t i = 0; i < ring->d(); ++i) {
      Coeff expect = ms.lambdas[i];
      for (std::size_t j = 0; j < ring->d(); ++j) expect *= ring->domain().pow(mp.lambdas[j], ms.m(j, i));
      ASSERT_EQ(mc.lambdas[i], expect);
    }
  }
}

TEST(EndomorphismProperty, MonomialIdempotencyCriterion) {
  auto ring = ring_of("QQ[x1^±, x2^±]");
  Rng rng(32);
  int idempotent = 0;
  for (int k = 0; k < 2000; ++k) {
    auto phi = random_monomial_map(ring, rng, 1);
    auto md = phi.monomial_part();
    bool criterion = mat_is_idempotent(md.m);
    for (std::size_t i = 0; i < ring->d() && criterion; ++i) {
      Coeff prod(1);
      for (std::size_t j = 0; j < ring->d(); ++j) prod *= ring->domain().pow(md.lambdas[j], md.m(j, i));
      criterion = prod == 1;
    }
    ASSERT_EQ(phi.is_idempotent(), criterion) << print_problem(phi);
    idempotent += criterion;
  }
  EXPECT_GT(idempotent, 50);
}

TEST(EndomorphismProperty, RetractDecomposition) {
  Rng rng(33);
  for (std::uint64_t seed = 0; seed < 40; ++seed) {
    GeneratorSpec spec{3, 2, seed % 3, seed, 2, Domain::rationals()};
    auto phi = gen_random_idempotent(spec);
    for (int k = 0; k < 5; ++k) {
      MixedPoly b = small_poly(phi.ring(), rng);
      MixedPoly fb = phi.apply(b);
      ASSERT_TRUE(phi.apply(b - fb).is_zero());
      ASSERT_EQ(fb + (b - fb), b);
    }
  }
}

TEST(EndomorphismProperty, ConjugationPreservesIdempotency) {
  auto ring = ring_of("QQ[x1^±, x2^±, x3, x4]");
  Rng rng(34);
  auto swap = map_of(ring, {"x2", "x1", "x3", "x4"});
  for (int k = 0; k < 40; ++k) {
    auto [alpha, alpha_inv] = random_automorphism(ring, rng);
    ASSERT_EQ(compose(alpha, alpha_inv), Endomorphism::identity(ring));
    auto pi = standard_projection(ring, {0}, {3});
    ASSERT_TRUE(conjugate(pi, alpha, alpha_inv).is_idempotent());
    ASSERT_FALSE(conjugate(swap, alpha, alpha_inv).is_idempotent());
  }
}

TEST(Generator, Examples) {
  GeneratorSpec spec{3, 2, 1, 99, 0, Domain::rationals()};
  auto phi = gen_random_idempotent(spec);
  EXPECT_TRUE(phi.is_idempotent());
  // Complexity 0 is the standard projection: x1 kept, x2 killed.
  EXPECT_EQ(phi.image(0), MixedPoly::variable(phi.ring(), 0));
  EXPECT_EQ(phi.image(1), MixedPoly::one(phi.ring()));
  for (std::uint64_t s = 0; s < 10; ++s) {
    auto id = gen_random_idempotent(GeneratorSpec{2, 2, 2, s, 3, Domain::rationals()});
    EXPECT_EQ(id, Endomorphism::identity(id.ring()));
  }
  EXPECT_THROW(gen_random_idempotent(GeneratorSpec{2, 1, 2, 0, 1, Domain::rationals()}), std::invalid_argument);
}

TEST(Generator, DeterministicAndSound) {
  for (std::uint64_t s = 0; s < 30; ++s) {
    GeneratorSpec spec{4, 2, s % 3, s, static_cast<unsigned>(s % 4), s % 2 ? Domain::prime_field(5) : Domain::rationals()};
    auto a = gen_random_idempotent(spec), b = gen_random_idempotent(spec);
    ASSERT_EQ(generated_problem_text(spec, a), generated_problem_text(spec, b));
    ASSERT_TRUE(a.validate());
    ASSERT_TRUE(a.is_idempotent());
    ASSERT_EQ(rank(a.monomial_part().m), spec.r);
  }
}
