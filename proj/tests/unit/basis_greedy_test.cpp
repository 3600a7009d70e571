#include <gtest/gtest.h>

#include "gcrank/basis_greedy.hpp"
#include "gcrank/error.hpp"
#include "gcrank/hardness.hpp"
#include "gcrank/knapsack.hpp"
#include "test_util.hpp"

namespace gcrank {
namespace {

using testing::ints;

std::array<std::vector<std::size_t>, 3> blocks_after(std::size_t start, std::size_t len) {
  std::array<std::vector<std::size_t>, 3> b;
  for (std::size_t l = 0; l < 3; ++l)
    for (std::size_t i = 0; i < len; ++i) b[l].push_back(start + l * len + i);
  return b;
}

TEST(AdditiveBasis, Examples) {
  EXPECT_TRUE(is_additive_basis(ints({1, 2, 4}), Integer(7)));
  EXPECT_FALSE(is_additive_basis(ints({1, 2, 4}), Integer(8)));
  EXPECT_FALSE(is_additive_basis(ints({2, 3}), Integer(5)));
  EXPECT_TRUE(is_additive_basis(ints({}), Integer(0)));
  EXPECT_TRUE(is_additive_basis(ints({1, 1, 3}), Integer(5)));
}

// Contiguous cover agrees with a subset-sum table.
TEST(AdditiveBasis, MatchesSubsetSumDp) {
  auto rng = make_rng(8);
  for (int t = 0; t < 300; ++t) {
    const auto v = testing::random_vector(rng, static_cast<std::size_t>(uniform_int(rng, 0, 8)), 0, 12);
    std::vector<bool> reach(200, false);
    reach[0] = true;
    for (const auto& x : v) {
      const auto k = x.convert_to<std::size_t>();
      for (std::size_t r = reach.size(); r-- > k;)
        if (reach[r - k]) reach[r] = true;
    }
    std::size_t m = 0;
    while (m + 1 < reach.size() && reach[m + 1]) ++m;
    EXPECT_EQ(contiguous_cover(v), Integer(m));
  }
}

TEST(PowersBasis, Examples) {
  EXPECT_EQ(powers_basis(8), ints({1, 2, 4}));
  EXPECT_EQ(powers_basis(16), ints({1, 2, 4, 8}));
  EXPECT_TRUE(is_additive_basis(powers_basis(8), Integer(4)));
  for (int m = 8; m <= 256; m += 8) EXPECT_TRUE(is_additive_basis(powers_basis(m), 2 * pow2(static_cast<unsigned>(m / 8))));
}

TEST(BasisFill, Examples) {
  const auto c = ints({1, 2, 4, 8});
  const auto b = make_additive_basis(c, {0, 1, 2, 3});
  EXPECT_EQ(basis_fill(b, Integer(5)), (std::vector<std::size_t>{0, 2}));
  EXPECT_TRUE(basis_fill(b, Integer(0)).empty());
  const auto odd = make_additive_basis(ints({3, 5}), {0, 1});
  try {
    basis_fill(odd, Integer(4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNoExactFill);
  }
  EXPECT_EQ(basis_fill(odd, Integer(8)), (std::vector<std::size_t>{0, 1}));
}

TEST(BasisFill, EveryCoveredTargetIsHit) {
  const auto c = ints({9, 1, 2, 3, 7, 5});
  const auto b = make_additive_basis(c, {1, 2, 3, 4, 5});
  for (long long t = 0; t <= 18; ++t) EXPECT_EQ(sum_over(c, basis_fill(b, Integer(t))), t);
}

TEST(GreedyCertificate, SpecLayout) {
  const WeightVector c(ints({5, 6, 8, 1, 2, 4, 1, 2, 4, 1, 2, 4}));
  const auto ct = ProfitVector{std::vector<Integer>(12, Integer(1))};
  const auto cert = greedy_certificate(c, ct, blocks_after(3, 3));
  EXPECT_EQ(sum_over(c.entries(), cert.J), 20);
  EXPECT_EQ(cert.half_weight, 20);
  EXPECT_EQ(sum_over(ct.entries, cert.J), cert.achieved_value);
  EXPECT_GE(Rational(cert.achieved_value), cert.bound_value);
}

TEST(GreedyCertificate, ParallelProfitsGiveZeroW) {
  const WeightVector c(ints({5, 6, 8, 1, 2, 4, 1, 2, 4, 1, 2, 4}));
  const auto cert = greedy_certificate(c, ProfitVector{c.entries()}, blocks_after(3, 3));
  EXPECT_EQ(cert.inv_lambda, 1);
  EXPECT_EQ(cert.w_l1, 0);
  EXPECT_EQ(Rational(cert.achieved_value), cert.bound_value);
  EXPECT_EQ(cert.achieved_value, 20);
  const auto claims = check_claims(cert, c);
  EXPECT_EQ(claims.central_window_mass, 0);
  EXPECT_EQ(claims.claim2_lhs, 0);
  EXPECT_EQ(claims.basis_mass, 0);
  EXPECT_TRUE(claims.claim1_holds);
  EXPECT_TRUE(claims.claim2_holds);
  EXPECT_TRUE(claims.basis_mass_holds);
  EXPECT_FALSE(claims.preconditions_hold);  // |c|_inf = 8 > |c|_1 / 100
}

TEST(GreedyCertificate, Errors) {
  const auto b = blocks_after(3, 3);
  const WeightVector odd(ints({5, 6, 9, 1, 2, 4, 1, 2, 4, 1, 2, 4}));
  const auto ones = ProfitVector{std::vector<Integer>(12, Integer(1))};
  EXPECT_THROW(greedy_certificate(odd, ones, b), Error);
  const WeightVector c(ints({5, 6, 8, 1, 2, 4, 1, 2, 4, 1, 2, 4}));
  EXPECT_THROW(greedy_certificate(c, ProfitVector{std::vector<Integer>(11, Integer(1))}, b), Error);
  auto overlap = b;
  overlap[1][0] = overlap[0][0];
  EXPECT_THROW(greedy_certificate(c, ones, overlap), Error);
}

// Invariants on random small instances, plus the knapsack dominance check.
TEST(GreedyProperty, StructuralInvariants) {
  auto rng = make_rng(99);
  int checked = 0;
  for (int t = 0; t < 300; ++t) {
    const auto m = static_cast<std::size_t>(uniform_int(rng, 1, 8));
    std::vector<Integer> c = testing::random_vector(rng, m, 1, 7);
    for (int l = 0; l < 3; ++l)
      for (long long v : {1, 2, 4}) c.emplace_back(v);
    if (sum(c) % 2 != 0) c.emplace_back(1);
    const WeightVector w(c);
    ProfitVector ct{testing::random_vector(rng, c.size(), 1, 9)};
    const auto cert = greedy_certificate(w, ct, blocks_after(m, 3));
    ++checked;
    EXPECT_EQ(sum_over(c, cert.J), sum(c) / 2);
    // w_i > 0 exactly on the first q sorted items.
    for (std::size_t pos = 0; pos < c.size(); ++pos) {
      const auto i = cert.sorted_order[pos];
      if (pos < cert.q) {
        EXPECT_GE(cert.w[i], 0);
      } else {
        EXPECT_LE(cert.w[i], 0);
      }
      if (cert.threshold_strict) EXPECT_NE(cert.w[i], 0);
    }
    Rational l1 = 0;
    for (std::size_t i = 0; i < c.size(); ++i) {
      EXPECT_EQ(cert.w[i], Rational(ct[i]) - Rational(c[i]) * cert.inv_lambda);
      l1 += abs(cert.w[i]);
    }
    EXPECT_EQ(cert.w_l1, l1);
    const auto claims = check_claims(cert, w);
    EXPECT_TRUE(claims.basis_mass_holds);
    EXPECT_TRUE(claims.fills_exactly);
    if (c.size() <= 18) {
      const auto opt = knapsack_max_exhaustive(KnapsackQuery{c, sum(c) / 2, ct.entries});
      EXPECT_LE(cert.achieved_value, opt.opt_value);
    }
  }
  EXPECT_EQ(checked, 300);
}

TEST(GreedyProperty, PreconditionsGiveCertifiedBound) {
  const auto hi = generate_hard_instance(160, Integer(64), 5, Rational(1, 4), BasisStyle::kTight);
  ASSERT_TRUE(weight_preconditions(hi.instance));
  auto rng = make_rng(6);
  for (int t = 0; t < 10; ++t) {
    ProfitVector ct{testing::random_vector(rng, hi.instance.n(), 1, 1000)};
    const auto cert = greedy_certificate(hi.instance.c(), ct, bases_array(hi.instance.bases()));
    const auto claims = check_claims(cert, hi.instance.c());
    EXPECT_TRUE(claims.preconditions_hold);
    EXPECT_TRUE(claims.claim1_holds);
    EXPECT_TRUE(claims.claim2_holds);
    EXPECT_TRUE(claims.basis_mass_holds);
    EXPECT_TRUE(claims.certified_bound_holds);
    EXPECT_GE(Rational(cert.achieved_value), cert.bound_value);
  }
}

TEST(InstanceConstants, PaperRegimeBeatsOneSixteenth) {
  const auto hi = generate_hard_instance(160, Integer(64), 5, Rational(1, 4), BasisStyle::kTight);
  const auto k = instance_constants(hi.instance.c(), bases_array(hi.instance.bases()));
  ASSERT_TRUE(k.valid);
  EXPECT_LE(k.rho, Rational(1, 100));
  EXPECT_LE(k.beta, Rational(1, 100));
  EXPECT_GT(k.kappa, Rational(1, 16));
}

}  // namespace
}  // namespace gcrank
