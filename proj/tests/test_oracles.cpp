#include "sproots/oracles.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace sproots {
namespace {

TEST(CountSat, Examples) {
  EXPECT_EQ(count_sat_bruteforce(Cnf{3, {}}), 8u);
  EXPECT_EQ(count_sat_bruteforce(Cnf{3, {{{1, false}, {2, false}, {3, false}}}}), 7u);
  EXPECT_EQ(count_sat_bruteforce(Cnf{1, {{{1, false}}, {{1, true}}}}), 0u);
}

TEST(CountSat, GuardRefusesLargeInstances) {
  EXPECT_NO_THROW(count_sat_bruteforce(Cnf{kMaxSatEnumerationVars, {{{1, true}}}}));
  try {
    count_sat_bruteforce(Cnf{25, {}});
    FAIL();
  } catch (const GuardExceeded& e) {
    EXPECT_EQ(e.requested(), 25u);
    EXPECT_EQ(e.limit(), 24u);
  }
  EXPECT_THROW(count_sat_bruteforce(PaddedCnf{Cnf{21, {}}, 2}), GuardExceeded);
}

TEST(CountRoots, Examples) {
  const FieldContext& gf8 = FieldContext::get(3);
  EXPECT_EQ(count_roots_bruteforce(SparsePolynomial(gf8)), 8u);
  for (unsigned n : {1u, 4u, 12u, 16u}) {
    const FieldContext& ctx = FieldContext::get(n);
    EXPECT_EQ(count_roots_bruteforce(SparsePolynomial::constant(ctx.one())), 0u);
    const SparsePolynomial frob = SparsePolynomial::monomial(ctx.one(), BigUint(1) << n) +
                                  SparsePolynomial::variable(ctx);
    EXPECT_EQ(count_roots_bruteforce(frob), std::uint64_t{1} << n);
  }
}

TEST(CountRoots, GuardRefusesDegree17) {
  const FieldContext& ctx = FieldContext::get(17);
  EXPECT_THROW(count_roots_bruteforce(SparsePolynomial(ctx)), GuardExceeded);
}

TEST(CountRoots, AgreesWithDirectSubstitution) {
  CorpusRng rng(50);
  for (unsigned n = 1; n <= 13; ++n) {
    const FieldContext& ctx = FieldContext::get(n);
    for (int trial = 0; trial < 4; ++trial) {
      // products of linear factors give polynomials with many roots
      SparsePolynomial p = SparsePolynomial::constant(rng.nonzero_element(ctx));
      for (int k = 0; k < trial + 1; ++k)
        p = p * (SparsePolynomial::variable(ctx) + SparsePolynomial::constant(rng.element(ctx)));
      p = p + testing::random_poly(rng, ctx, trial, 30);
      const std::uint64_t roots = count_roots_bruteforce(p);
      ASSERT_EQ(roots, testing::reference_root_count(p));
      ASSERT_LE(roots, std::uint64_t{1} << n);
    }
  }
}

TEST(CoordinatePolyOracle, Examples) {
  const FieldContext& gf2 = FieldContext::get(1);
  EXPECT_EQ(coordinate_poly_oracle(gf2, 1), LinearizedPolynomial::identity(gf2));
  const FieldContext& gf4 = FieldContext::get(2);
  EXPECT_EQ(coordinate_poly_oracle(gf4, 2), LinearizedPolynomial(gf4, {gf4.one(), gf4.one()}));
  EXPECT_THROW(coordinate_poly_oracle(gf4, 3), DomainError);
}

TEST(CoordinatePolyOracle, SatisfiesInterpolationConditions) {
  for (unsigned n = 1; n <= 14; ++n) {
    const FieldContext& ctx = FieldContext::get(n);
    for (unsigned i = 1; i <= n; ++i) {
      const LinearizedPolynomial f = coordinate_poly_oracle(ctx, i);
      for (unsigned j = 1; j <= n; ++j) ASSERT_EQ(f(basis(ctx, j)).is_one(), i == j);
    }
  }
}

TEST(MooreDeterminantOracle, Examples) {
  const FieldContext& ctx = FieldContext::get(5);
  const FieldElement a = basis(ctx, 3);
  EXPECT_EQ(moore_determinant_oracle(std::vector{a}), a);
  EXPECT_TRUE(moore_determinant_oracle(std::vector{a, basis(ctx, 2), a}).is_zero());
  // |a a^2; b b^2| = a b^2 + b a^2
  const FieldElement b = basis(ctx, 4);
  EXPECT_EQ(moore_determinant_oracle(std::vector{a, b}), a * b * b + b * a * a);
  EXPECT_THROW(moore_determinant_oracle(std::vector<FieldElement>(7, a)), GuardExceeded);
  EXPECT_THROW(moore_determinant_oracle(std::vector<FieldElement>{}), DomainError);
}

TEST(F2Rank, Examples) {
  const FieldContext& ctx = FieldContext::get(4);
  EXPECT_EQ(f2_rank(std::vector<FieldElement>{}), 0u);
  EXPECT_EQ(f2_rank(std::vector{ctx.zero()}), 0u);
  EXPECT_EQ(f2_rank(std::vector{ctx.element(3), ctx.element(5), ctx.element(6)}), 2u);
  EXPECT_EQ(f2_rank(std::vector{ctx.element(1), ctx.element(2), ctx.element(4), ctx.element(8)}),
            4u);
}

}  // namespace
}  // namespace sproots
