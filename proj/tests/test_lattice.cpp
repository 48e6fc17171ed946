#include <algorithm>
#include <set>

#include <gtest/gtest.h>

#include "retract/errors.hpp"
#include "retract/generator.hpp"
#include "retract/lattice.hpp"
#include "retract/random.hpp"

using namespace retract;

namespace {

IntVector vec(std::initializer_list<long> xs) {
  IntVector v;
  for (long x : xs) v.emplace_back(x);
  return v;
}

IntMatrix mat(const std::vector<std::vector<long>>& rows) { return IntMatrix::from_rows(rows); }

IntMatrix diag01(std::size_t d, std::size_t r) {
  IntMatrix m(d, d);
  for (std::size_t i = 0; i < r; ++i) m(i, i) = 1;
  return m;
}

// C·D·C⁻¹ with C unimodular and D = diag(1..1, 0..0), shuffled by the same C.
IntMatrix random_idempotent(std::size_t d, std::size_t r, Rng& rng) {
  IntMatrix c = random_unimodular(d, rng, static_cast<int>(2 * d + 2));
  return c * diag01(d, r) * unimodular_inverse(c);
}

}  // namespace

TEST(IntMatrix, DeterminantAndRank) {
  EXPECT_EQ(determinant(mat({{2, 1}, {7, 4}})), 1);
  EXPECT_EQ(determinant(mat({{0, 1}, {1, 0}})), -1);
  EXPECT_EQ(determinant(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 0);
  EXPECT_EQ(rank(mat({{1, 2, 3}, {4, 5, 6}, {7, 8, 9}})), 2u);
  EXPECT_EQ(rank(IntMatrix(3, 3)), 0u);
}

TEST(Lattice, IsIdempotent) {
  EXPECT_TRUE(mat_is_idempotent(IntMatrix::identity(3)));
  EXPECT_TRUE(mat_is_idempotent(IntMatrix(2, 2)));
  EXPECT_TRUE(mat_is_idempotent(mat({{1, 0}, {1, 0}})));
  EXPECT_FALSE(mat_is_idempotent(mat({{0, 1}, {1, 0}})));
  EXPECT_THROW(mat_is_idempotent(IntMatrix(2, 3)), std::invalid_argument);
}

TEST(Lattice, FixedLatticeBasis) {
  EXPECT_EQ(fixed_lattice_basis(mat({{1, 0}, {1, 0}})), std::vector<IntVector>{vec({1, 1})});
  EXPECT_EQ(fixed_lattice_basis(IntMatrix::identity(2)), (std::vector<IntVector>{vec({1, 0}), vec({0, 1})}));
  EXPECT_TRUE(fixed_lattice_basis(IntMatrix(2, 2)).empty());
  EXPECT_THROW(fixed_lattice_basis(mat({{0, 1}, {1, 0}})), NotIdempotent);
}

TEST(Lattice, KernelBasis) {
  EXPECT_EQ(kernel_basis(mat({{1, 0}, {1, 0}})), std::vector<IntVector>{vec({0, 1})});
  EXPECT_TRUE(kernel_basis(IntMatrix::identity(2)).empty());
  EXPECT_EQ(kernel_basis(mat({{1, -2}, {0, 0}})), std::vector<IntVector>{vec({2, 1})});
  EXPECT_THROW(kernel_basis(mat({{2, 0}, {0, 0}})), NotIdempotent);
}

TEST(Lattice, AssembleUnimodular) {
  auto a = assemble_unimodular({vec({1, 1})}, {vec({0, 1})});
  EXPECT_EQ(a.y, mat({{1, 0}, {1, 1}}));
  EXPECT_EQ(a.t, mat({{1, 0}, {-1, 1}}));
  EXPECT_EQ(a.det_sign, 1);
  auto b = assemble_unimodular({vec({1, 0}), vec({0, 1})}, {});
  EXPECT_EQ(b.y, IntMatrix::identity(2));
  EXPECT_EQ(b.t, IntMatrix::identity(2));
  auto c = assemble_unimodular({vec({1, 0})}, {vec({2, 1})});
  EXPECT_EQ(c.y, mat({{1, 2}, {0, 1}}));
  EXPECT_EQ(c.t, mat({{1, -2}, {0, 1}}));
  EXPECT_THROW(assemble_unimodular({vec({2, 0})}, {vec({0, 1})}), CertificateFailure);
}

TEST(Lattice, SolveInLattice) {
  EXPECT_EQ(solve_in_lattice(vec({2, 2}), {vec({1, 1})}), vec({2}));
  EXPECT_FALSE(solve_in_lattice(vec({1, 0}), {vec({1, 1})}));
  EXPECT_EQ(solve_in_lattice(vec({3, 1}), {vec({1, 1}), vec({2, 0})}), vec({1, 1}));
  EXPECT_FALSE(solve_in_lattice(vec({1, 1}), {vec({2, 0}), vec({0, 2})}));
  EXPECT_EQ(solve_in_lattice(vec({0, 0}), {}), IntVector{});
}

TEST(Lattice, HermiteFormIsCanonical) {
  // Two bases of the same lattice reduce to the same HNF.
  auto h1 = hermite_form(mat({{2, 4}, {1, 3}}));
  auto h2 = hermite_form(mat({{1, 3}, {3, 7}}));
  EXPECT_EQ(h1.h, h2.h);
  EXPECT_EQ(h1.transform * mat({{2, 4}, {1, 3}}), h1.h);
}

TEST(Lattice, DecomposeWorkedExample) {
  auto dec = decompose(mat({{1, 0}, {1, 0}}));
  EXPECT_EQ(dec.r, 1u);
  EXPECT_EQ(dec.y, mat({{1, 0}, {1, 1}}));
  EXPECT_EQ(dec.t, mat({{1, 0}, {-1, 1}}));
}

TEST(LatticeProperty, RandomIdempotentDecompositions) {
  Rng rng(2024);
  int count = 0;
  for (std::size_t d = 1; d <= 5; ++d) {
    for (std::size_t r = 0; r <= d; ++r) {
      for (int k = 0; k < 30; ++k, ++count) {
        IntMatrix m = random_idempotent(d, r, rng);
        ASSERT_TRUE(mat_is_idempotent(m));
        auto dec = decompose(m);
        ASSERT_EQ(dec.r, r);
        ASSERT_EQ(dec.fixed_basis.size() + dec.kernel_basis.size(), d);
        ASSERT_EQ(m * dec.y, dec.y * diag01(d, r)) << m.to_string();
        mpz_class det = determinant(dec.y);
        ASSERT_TRUE(det == 1 || det == -1);
        ASSERT_EQ(dec.t * dec.y, IntMatrix::identity(d));
        ASSERT_EQ(dec.y * dec.t, IntMatrix::identity(d));
        for (std::size_t i = 0; i < d; ++i) ASSERT_TRUE(solve_in_lattice(m.column(i), dec.fixed_basis));
      }
    }
  }
  EXPECT_GE(count, 500);
}

TEST(LatticeProperty, MembershipAgreesWithEnumeration) {
  Rng rng(77);
  int checks = 0;
  for (int k = 0; k < 300; ++k) {
    const std::size_t d = static_cast<std::size_t>(rng.uniform(1, 3));
    IntMatrix m = random_idempotent(d, static_cast<std::size_t>(rng.uniform(0, static_cast<long>(d))), rng);
    bool small = true;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j) small = small && abs(m(i, j)) <= 3;
    if (!small) continue;
    auto basis = fixed_lattice_basis(m);
    // Enumerate Σ c_i b_i with c_i in [-9, 9].
    std::set<IntVector> reachable;
    std::vector<long> c(basis.size(), -9);
    while (true) {
      IntVector v(d, 0);
      for (std::size_t i = 0; i < basis.size(); ++i)
        for (std::size_t j = 0; j < d; ++j) v[j] += c[i] * basis[i][j];
      reachable.insert(v);
      std::size_t i = 0;
      while (i < c.size() && c[i] == 9) c[i++] = -9;
      if (i == c.size()) break;
      ++c[i];
    }
    for (int t = 0; t < 20; ++t) {
      IntVector v(d);
      for (auto& x : v) x = rng.uniform(-3, 3);
      bool enumerated = reachable.count(v) > 0;
      // Inside the box every lattice vector has small coordinates, so the
      // enumeration is complete for targets in [-3, 3] when |c_i| <= 9 suffices.
      auto sol = solve_in_lattice(v, basis);
      if (sol) {
        bool in_box = std::all_of(sol->begin(), sol->end(), [](const mpz_class& x) { return abs(x) <= 9; });
        if (!in_box) continue;
      }
      ASSERT_EQ(sol.has_value(), enumerated) << m.to_string();
      ++checks;
    }
  }
  EXPECT_GT(checks, 1000);
}
