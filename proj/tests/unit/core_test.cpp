#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "gcrank/core.hpp"
#include "gcrank/error.hpp"
#include "test_util.hpp"

namespace gcrank {
namespace {

using testing::signed_critical;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no error raised";
  return ErrorCode::kInvalidArgument;
}

TEST(Instance, TwoByTwo) {
  const auto inst = make_instance(make_weights({1, 1}), Rational(1, 4));
  EXPECT_EQ(inst.capacity(), 1);
  EXPECT_EQ(inst.knapsack_capacity(), 1);
  EXPECT_EQ(inst.xstar(), (std::vector<Rational>{Rational(3, 4), Rational(3, 4)}));
}

TEST(Instance, DiagonalMidpointAtZero) {
  const auto inst = make_instance(make_weights({1, 1, 1, 1}), 0);
  EXPECT_EQ(inst.xstar(), std::vector<Rational>(4, Rational(1, 2)));
}

TEST(Instance, OddTotalKeepsBothCapacities) {
  const auto inst = make_instance(make_weights({1, 2}), Rational(1, 8));
  EXPECT_EQ(inst.capacity(), Rational(3, 2));
  EXPECT_EQ(inst.knapsack_capacity(), 1);
}

TEST(Instance, Rejections) {
  EXPECT_EQ(code_of([] { make_instance(make_weights({0, 0}), Rational(1, 4)); }), ErrorCode::kAllZeroWeights);
  EXPECT_EQ(code_of([] { make_instance(make_weights({1}), Rational(1, 2)); }), ErrorCode::kInvalidEpsilon);
  EXPECT_EQ(code_of([] { make_instance(make_weights({1}), Rational(-1, 8)); }), ErrorCode::kInvalidEpsilon);
  EXPECT_EQ(code_of([] { make_instance(make_weights({1, -1}), 0); }), ErrorCode::kNegativeWeight);
}

TEST(NonnegReduce, Examples) {
  EXPECT_EQ(nonneg_reduce(make_profits({3, -2})), make_profits({3, 0}));
  EXPECT_EQ(nonneg_reduce(make_profits({1, 2, 3})), make_profits({1, 2, 3}));
  EXPECT_EQ(nonneg_reduce(make_profits({-1, -1})), make_profits({0, 0}));
}

TEST(IsCritical, Examples) {
  const auto inst = make_instance(make_weights({1, 1}), Rational(1, 4));
  auto r = is_critical(inst, make_profits({1, 1}));
  EXPECT_TRUE(r.is_critical);
  EXPECT_EQ(r.ctilde_at_xstar, Rational(3, 2));
  EXPECT_EQ(r.knapsack_opt, 1);

  r = is_critical(inst, make_profits({1, 0}));
  EXPECT_FALSE(r.is_critical);
  EXPECT_EQ(r.ctilde_at_xstar, Rational(3, 4));
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0}));

  const auto ones = make_instance(make_weights({1, 1, 1, 1}), Rational(1, 8));
  r = is_critical(ones, make_profits({1, 1, 0, 0}));
  EXPECT_FALSE(r.is_critical);
}

TEST(IsCritical, WitnessRespectsCapacity) {
  const auto inst = make_instance(make_weights({3, 5, 2, 7}), Rational(1, 8));
  const auto r = is_critical(inst, make_profits({4, 1, 3, 9}));
  EXPECT_LE(sum_over(inst.c().entries(), r.witness), inst.knapsack_capacity());
  EXPECT_EQ(sum_over(r.ctilde.entries, r.witness), r.knapsack_opt);
}

TEST(IsCritical, RejectsNegativeProfits) {
  const auto inst = make_instance(make_weights({1, 1}), Rational(1, 4));
  EXPECT_EQ(code_of([&] { is_critical(inst, make_profits({1, -1})); }), ErrorCode::kNegativeProfit);
  EXPECT_EQ(code_of([&] { is_critical(inst, make_profits({1})); }), ErrorCode::kLengthMismatch);
}

TEST(IsCritical, WeightVectorIsCriticalAtZero) {
  auto rng = make_rng(5);
  for (int t = 0; t < 100; ++t) {
    const auto c = testing::random_weights(rng, static_cast<std::size_t>(uniform_int(rng, 1, 10)), 20);
    const auto inst = make_instance(c, 0);
    EXPECT_TRUE(is_critical(inst, ProfitVector{c.entries()}).is_critical);
  }
}

TEST(EpsilonStep, Examples) {
  const auto inst = make_instance(make_weights({1, 1}), Rational(1, 4));
  EXPECT_EQ(epsilon_step(inst, make_profits({1, 1})), 0);
  EXPECT_EQ(epsilon_step(inst, make_profits({2, 2})), Rational(1, 4));
  EXPECT_EQ(code_of([&] { epsilon_step(inst, make_profits({0, 0})); }), ErrorCode::kZeroVector);
}

// Positive part of a signed critical vector is critical (n <= 12, exhaustive).
TEST(CoreProperty, NonnegativeReductionKeepsCriticality) {
  auto rng = make_rng(101);
  int signed_hits = 0;
  for (int t = 0; t < 600; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 12));
    const auto c = testing::random_weights(rng, n, 9);
    const auto inst = make_instance(c, Rational(uniform_int(rng, 0, 7), 16));
    ProfitVector ct{testing::random_vector(rng, n, -3, 4)};
    if (!signed_critical(inst, ct.entries)) continue;
    ++signed_hits;
    const auto plus = nonneg_reduce(ct);
    EXPECT_LE(plus.l1(), ct.l1());
    EXPECT_TRUE(is_critical(inst, plus).is_critical);
  }
  EXPECT_GT(signed_hits, 20);
}

TEST(CoreProperty, ScaleInvariance) {
  auto rng = make_rng(202);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 10));
    const auto inst = make_instance(testing::random_weights(rng, n, 15), Rational(uniform_int(rng, 0, 7), 16));
    ProfitVector ct{testing::random_vector(rng, n, 0, 6)};
    const auto k = uniform_int(rng, 2, 9);
    ProfitVector scaled = ct;
    for (auto& x : scaled.entries) x *= k;
    EXPECT_EQ(is_critical(inst, ct).is_critical, is_critical(inst, scaled).is_critical);
  }
}

TEST(CoreProperty, CriticalityMatchesDefinition) {
  auto rng = make_rng(303);
  for (int t = 0; t < 300; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 10));
    const auto inst = make_instance(testing::random_weights(rng, n, 15), Rational(uniform_int(rng, 0, 7), 16));
    ProfitVector ct{testing::random_vector(rng, n, 0, 6)};
    EXPECT_EQ(is_critical(inst, ct).is_critical, signed_critical(inst, ct.entries));
  }
}

// One cut moves eps by at most 1/|ct|_1.
TEST(CoreProperty, EpsilonStepProgressBound) {
  auto rng = make_rng(404);
  int progressed = 0;
  for (int t = 0; t < 500; ++t) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 10));
    const auto inst = make_instance(testing::random_weights(rng, n, 15), Rational(uniform_int(rng, 0, 7), 16));
    ProfitVector ct{testing::random_vector(rng, n, 0, 6)};
    if (ct.is_zero()) continue;
    const Rational next = epsilon_step(inst, ct);
    const auto rep = is_critical(inst, ct);
    const Rational beta = std::max(Rational(rep.knapsack_opt), rep.ctilde_at_xstar);
    EXPECT_EQ((Rational(1, 2) + next) * Rational(ct.l1()), Rational(floor(beta)));
    if (next < inst.eps()) {
      ++progressed;
      EXPECT_GE(Rational(1), Rational(ct.l1()) * (inst.eps() - next));
    }
  }
  EXPECT_GT(progressed, 50);
}

}  // namespace
}  // namespace gcrank
