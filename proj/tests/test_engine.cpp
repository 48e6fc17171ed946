#include <gtest/gtest.h>

#include "retract/engine.hpp"
#include "retract/errors.hpp"
#include "retract/generator.hpp"
#include "support.hpp"

using namespace retract;
using namespace retract::testing;

namespace {

const char* kE1 = "ring QQ[x1^±, x2^±]\nx1 -> x1*x2\nx2 -> 1\n";
const char* kE7 = "ring QQ[x1^±, x2^±, x3]\nx1 -> x1\nx2 -> 1\nx3 -> x3 + x2 - 1\n";

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

std::vector<MixedPoly> polys(const RingPtr& ring, const std::vector<std::string>& texts) {
  std::vector<MixedPoly> out;
  for (const auto& t : texts) out.push_back(P(ring, t));
  return out;
}

}  // namespace

TEST(YVariables, WorkedExampleE1) {
  auto yv = compute_y_variables(map_of(kE1));
  EXPECT_EQ(yv.decomposition.r, 1u);
  ASSERT_EQ(yv.y.size(), 2u);
  EXPECT_EQ(yv.y[0].exponent, vec({1, 1}));
  EXPECT_EQ(yv.y[0].kind, YVariable::Kind::Fixed);
  EXPECT_EQ(yv.y[1].exponent, vec({0, 1}));
  EXPECT_EQ(yv.y[1].kind, YVariable::Kind::Killed);
  EXPECT_EQ(yv.y[1].normalizer, Coeff(1));
}

TEST(YVariables, ScaledKill) {
  auto yv = compute_y_variables(map_of("ring QQ[x1^±, x2^±]\nx1 -> x1\nx2 -> 3\n"));
  ASSERT_EQ(yv.y.size(), 2u);
  EXPECT_EQ(yv.y[0].exponent, vec({1, 0}));
  EXPECT_EQ(yv.y[1].exponent, vec({0, 1}));
  EXPECT_EQ(yv.y[1].normalizer, Coeff(3));
}

TEST(YVariables, Identity) {
  auto yv = compute_y_variables(Endomorphism::identity(ring_of("QQ[x1^±, x2^±]")));
  EXPECT_EQ(yv.decomposition.r, 2u);
  for (const auto& y : yv.y) EXPECT_EQ(y.kind, YVariable::Kind::Fixed);
}

TEST(YVariables, Rejections) {
  EXPECT_THROW(compute_y_variables(map_of("ring QQ[x1^±, x2^±]\nx1 -> x2\nx2 -> x1\n")), NotIdempotent);
  EXPECT_THROW(compute_y_variables(map_of("ring QQ[x1^±, x2^±]\nx1 -> x1 + 1\nx2 -> x2\n")),
               InvalidEndomorphism);
  // M is idempotent but the scalar on the fixed direction is 2.
  EXPECT_THROW(compute_y_variables(map_of("ring QQ[x1^±]\nx1 -> 2*x1\n")), NotIdempotent);
}

TEST(QuotientModJ, WorkedExampleE1) {
  auto rep = analyze(map_of(kE1));
  auto q = rep.quotient_ring;
  auto ring = rep.ring;
  EXPECT_EQ(quotient_mod_J(P(ring, "x2"), rep.decomposition, rep.y, q), MixedPoly::one(q));
  EXPECT_EQ(quotient_mod_J(P(ring, "x1*x2"), rep.decomposition, rep.y, q), P(q, "y1"));
  EXPECT_EQ(quotient_mod_J(P(ring, "x1^2*x2^2 - x1^-1*x2^-1"), rep.decomposition, rep.y, q), P(q, "y1^2 - y1^-1"));
}

TEST(QuotientModJ, NormalizerEntersCoefficient) {
  auto rep = analyze(map_of("ring QQ[x1^±, x2^±, x3]\nx1 -> x1\nx2 -> 3\nx3 -> x3\n"));
  auto q = rep.quotient_ring;
  EXPECT_EQ(quotient_mod_J(P(rep.ring, "x2^2*x3 + x1"), rep.decomposition, rep.y, q), P(q, "9*x3 + y1"));
}

TEST(QuotientRing, AvoidsNameClash) {
  auto q = quotient_ring(*ring_of("QQ[a^±, b^±, y1]"), 2);
  EXPECT_EQ(q->n(), 3u);
  EXPECT_EQ(q->d(), 2u);
  EXPECT_NE(q->name(0), "y1");
  EXPECT_EQ(q->name(2), "y1");
}

TEST(TranscendenceDegree, Examples) {
  auto r = ring_of("QQ[x1^±, x2]");
  EXPECT_EQ(transcendence_degree(polys(r, {"x1", "x1 + x1^-1"}), *r), (Trdeg{1, 1}));
  EXPECT_EQ(transcendence_degree(std::vector<MixedPoly>{}, *r), (Trdeg{0, 0}));
  auto r7 = ring_of("QQ[x1^±, x2^±, x3]");
  EXPECT_EQ(transcendence_degree(polys(r7, {"x1", "x3 + x2 - 1"}), *r7), (Trdeg{2, 2}));
  auto r3 = ring_of("QQ[x1, x2, x3]");
  EXPECT_EQ(jacobian_rank(polys(r3, {"x1*x2", "x1^2*x2^2 + 1", "x3"}), *r3), 2u);
  EXPECT_EQ(jacobian_rank(polys(r3, {"x1*x2", "x1^2*x2^2 + 1", "x3"}), *r3, RankMode::Probabilistic), 2u);
  EXPECT_EQ(jacobian_rank(polys(r3, {"x1 + x2", "x2*x3", "x1*x3^2"}), *r3, RankMode::Probabilistic), 3u);
}

TEST(TranscendenceDegree, PositiveCharacteristicIsAnInterval) {
  auto f = ring_of("GF(5)[x1^±, x2, x3]");
  EXPECT_EQ(transcendence_degree(polys(f, {"x1", "x2"}), *f, 1), (Trdeg{1, 3}));
  auto pure = ring_of("GF(5)[x1^±, x2^±]");
  EXPECT_EQ(transcendence_degree(polys(pure, {"x1"}), *pure, 1), (Trdeg{1, 1}));
  EXPECT_THROW(jacobian_rank(polys(f, {"x1"}), *f), std::invalid_argument);
}

TEST(Classify, Table) {
  const Domain q = Domain::rationals();
  EXPECT_EQ(classify(2, 2, 1, {1, 1}, q), Classification(verdict::PureLaurent{1}));
  EXPECT_EQ(classify(3, 1, 1, {2, 2}, q), Classification(verdict::UFDClassified{1, 1, false}));
  EXPECT_EQ(classify(4, 2, 0, {0, 0}, q), Classification(verdict::CoefficientRing{}));
  EXPECT_EQ(classify(3, 2, 2, {3, 3}, q), Classification(verdict::WholeRing{}));
  EXPECT_EQ(classify(3, 2, 1, {2, 2}, q), Classification(verdict::LaurentTensorPoly{1, 1}));
  EXPECT_EQ(classify(5, 1, 1, {3, 3}, q), Classification(verdict::BoundsOnly{1, 5}));
  EXPECT_EQ(classify(3, 0, 0, {1, 1}, q), Classification(verdict::BoundsOnly{0, 3}));
  EXPECT_EQ(classify(2, 0, 0, {1, 1}, q), Classification(verdict::UFDClassified{0, 1, false}));
  EXPECT_EQ(classify(4, 2, 1, {2, 3}, Domain::prime_field(5)), Classification(verdict::BoundsOnly{2, 3}));
  EXPECT_THROW(classify(2, 2, 1, {2, 2}, q), std::invalid_argument);
  EXPECT_THROW(classify(2, 1, 2, {2, 2}, q), std::invalid_argument);
}

TEST(Rationality, Table) {
  const Domain q = Domain::rationals();
  EXPECT_EQ(rationality_verdict(3, 1, 1, {2, 2}, q), Rationality::Rational);
  EXPECT_EQ(rationality_verdict(5, 1, 1, {1, 1}, q), Rationality::Rational);
  EXPECT_EQ(rationality_verdict(5, 1, 1, {3, 3}, q), Rationality::Unknown);
  EXPECT_EQ(rationality_verdict(5, 1, 0, {0, 0}, q), Rationality::Rational);
  EXPECT_EQ(rationality_verdict(5, 3, 1, {2, 2}, q), Rationality::Rational);
  EXPECT_THROW(rationality_verdict(3, 1, 1, {2, 2}, Domain::integers()), std::invalid_argument);
}

TEST(Analyze, WorkedExampleE1) {
  auto rep = analyze(map_of(kE1));
  EXPECT_EQ(rep.r, 1u);
  EXPECT_EQ(rep.trdeg, (Trdeg{1, 1}));
  EXPECT_EQ(rep.decomposition.y, IntMatrix::from_rows({{1, 0}, {1, 1}}));
  EXPECT_EQ(rep.decomposition.t, IntMatrix::from_rows({{1, 0}, {-1, 1}}));
  ASSERT_EQ(rep.generators.size(), 1u);
  EXPECT_EQ(rep.generators[0], P(rep.ring, "x1*x2"));
  EXPECT_EQ(rep.classification, Classification(verdict::PureLaurent{1}));
  EXPECT_EQ(rep.rationality, Rationality::Rational);
  EXPECT_TRUE(rep.certified());
}

TEST(Analyze, WorkedExampleE7) {
  auto rep = analyze(map_of(kE7));
  EXPECT_EQ(rep.r, 1u);
  EXPECT_EQ(rep.trdeg, (Trdeg{2, 2}));
  ASSERT_EQ(rep.generators.size(), 2u);
  EXPECT_EQ(rep.generators[0], P(rep.ring, "x1"));
  EXPECT_EQ(rep.generators[1], P(rep.ring, "x3 + x2 - 1"));
  EXPECT_EQ(rep.classification, Classification(verdict::LaurentTensorPoly{1, 1}));
  EXPECT_TRUE(rep.certified());
}

TEST(Analyze, ExtremeCases) {
  auto ring = ring_of("QQ[x1^±, x2^±, x3]");
  auto id = analyze(Endomorphism::identity(ring));
  EXPECT_EQ(id.classification, Classification(verdict::WholeRing{}));
  auto constant = analyze(standard_projection(ring, {}, {}));
  EXPECT_EQ(constant.classification, Classification(verdict::CoefficientRing{}));
  EXPECT_TRUE(id.certified());
  EXPECT_TRUE(constant.certified());
  auto empty = analyze(Endomorphism::identity(ring_of("QQ[]")));
  EXPECT_EQ(empty.classification, Classification(verdict::CoefficientRing{}));
}

TEST(Analyze, UfdCase) {
  auto rep = analyze(map_of("ring QQ[x1^±, x2, x3]\nx1 -> x1\nx2 -> x2\nx3 -> x2\n"));
  EXPECT_EQ(rep.trdeg, (Trdeg{2, 2}));
  ASSERT_TRUE(std::holds_alternative<verdict::UFDClassified>(rep.classification));
  EXPECT_EQ(std::get<verdict::UFDClassified>(rep.classification).s, 1u);
  EXPECT_EQ(rep.rationality, Rationality::Rational);
}

TEST(Analyze, PolynomialOnlyBoundsAndOpenRationality) {
  auto d0 = analyze(map_of("ring QQ[x1, x2, x3]\nx1 -> x1\nx2 -> x1\nx3 -> x1\n"));
  EXPECT_EQ(d0.classification, Classification(verdict::BoundsOnly{0, 3}));
  auto open = analyze(map_of("ring QQ[x1^±, x2, x3, x4, x5]\nx1 -> x1\nx2 -> x2\nx3 -> x3\nx4 -> x2\nx5 -> x3\n"));
  EXPECT_EQ(open.trdeg, (Trdeg{3, 3}));
  EXPECT_EQ(open.classification, Classification(verdict::BoundsOnly{1, 5}));
  EXPECT_EQ(open.rationality, Rationality::Unknown);
}

TEST(Analyze, IntegersAndPrimeFields) {
  auto z = analyze(map_of("ring ZZ[x1^±, x2^±]\nx1 -> x1\nx2 -> -1\n"));
  EXPECT_EQ(z.rationality, Rationality::NotApplicable);
  EXPECT_EQ(z.classification, Classification(verdict::PureLaurent{1}));
  EXPECT_EQ(z.y[1].normalizer, Coeff(-1));
  auto f = analyze(map_of("ring GF(5)[x1^±, x2^±, x3]\nx1 -> x1\nx2 -> 1\nx3 -> x3 + x2 - 1\n"));
  EXPECT_EQ(f.trdeg, (Trdeg{2, 2}));
  EXPECT_EQ(f.classification, Classification(verdict::LaurentTensorPoly{1, 1}));
  auto g = analyze(map_of("ring GF(5)[x1^±, x2, x3, x4]\nx1 -> x1\nx2 -> x2\nx3 -> x2^2\nx4 -> x2 + x1\n"));
  EXPECT_EQ(g.trdeg, (Trdeg{2, 4}));
  EXPECT_EQ(g.classification, Classification(verdict::BoundsOnly{2, 4}));
  EXPECT_TRUE(g.certified());
}

TEST(Analyze, RejectsNonIdempotent) {
  EXPECT_THROW(analyze(map_of("ring QQ[x1^±, x2]\nx1 -> x1\nx2 -> x2 + 1\n")), NotIdempotent);
}

// The trace identity and fraction-free elimination are independent routes
// to the same rank.
TEST(EngineProperty, TraceMatchesElimination) {
  int compared = 0;
  for (std::size_t n = 1; n <= 4; ++n) {
    for (std::size_t d = 0; d <= n; ++d) {
      for (std::size_t r = 0; r <= d; ++r) {
        for (std::uint64_t s = 0; s < 4; ++s) {
          GeneratorSpec spec{n, d, r, 1000 * n + 100 * d + 10 * r + s, 2, Domain::rationals()};
          auto phi = gen_random_idempotent(spec);
          auto t = idempotent_jacobian_trace(phi);
          ASSERT_TRUE(t.has_value());
          ASSERT_EQ(jacobian_rank(phi.images(), *phi.ring()), *t) << print_problem(phi);
          ++compared;
        }
      }
    }
  }
  EXPECT_GT(compared, 100);
}

TEST(EngineProperty, GeneratedInstancesAnalyzeToRequestedRank) {
  for (std::uint64_t s = 0; s < 60; ++s) {
    const std::size_t n = 2 + s % 3, d = s % (n + 1), r = d ? s % (d + 1) : 0;
    GeneratorSpec spec{n, d, r, s, static_cast<unsigned>(s % 4), s % 2 ? Domain::prime_field(5) : Domain::rationals()};
    auto rep = analyze(gen_random_idempotent(spec));
    ASSERT_EQ(rep.r, r);
    ASSERT_TRUE(rep.certified());
    ASSERT_LE(rep.r, rep.trdeg.lo);
    ASSERT_LE(rep.trdeg.hi, r + n - d);
  }
}
