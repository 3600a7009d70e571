#include <gtest/gtest.h>

#include "gcrank/error.hpp"
#include "gcrank/knapsack.hpp"
#include "test_util.hpp"

namespace gcrank {
namespace {

using testing::brute_force_max;
using testing::ints;

KnapsackQuery query(std::initializer_list<long long> w, long long cap, std::initializer_list<long long> p) {
  return KnapsackQuery{ints(w), Integer(cap), ints(p)};
}

void expect_valid(const KnapsackQuery& q, const KnapsackResult& r) {
  EXPECT_LE(sum_over(q.weights, r.witness), q.capacity);
  EXPECT_EQ(sum_over(q.profits, r.witness), r.opt_value);
}

TEST(Knapsack, SymmetricSingleton) {
  const auto q = query({1, 1}, 1, {1, 1});
  const auto r = knapsack_max(q);
  EXPECT_EQ(r.opt_value, 1);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0}));  // lexicographically smallest
}

TEST(Knapsack, ThreeItems) {
  const auto q = query({2, 3, 4}, 4, {5, 4, 6});
  for (auto m : {KnapsackMethod::kDp, KnapsackMethod::kMeetInTheMiddle, KnapsackMethod::kExhaustive}) {
    const auto r = knapsack_max(q, m);
    EXPECT_EQ(r.opt_value, 6);
    EXPECT_EQ(r.witness, (std::vector<std::size_t>{2}));
    EXPECT_EQ(r.method, m);
  }
}

TEST(Knapsack, PickAnyTwo) { EXPECT_EQ(knapsack_max(query({1, 1, 1, 1}, 2, {1, 1, 1, 1})).opt_value, 2); }

TEST(KnapsackExhaustive, Examples) {
  auto r = knapsack_max_exhaustive(query({2, 2, 3}, 4, {3, 3, 4}));
  EXPECT_EQ(r.opt_value, 6);
  EXPECT_EQ(r.witness, (std::vector<std::size_t>{0, 1}));
  r = knapsack_max_exhaustive(query({5}, 4, {9}));
  EXPECT_EQ(r.opt_value, 0);
  EXPECT_TRUE(r.witness.empty());
}

TEST(KnapsackExhaustive, RejectsLargeInstances) {
  KnapsackQuery q{std::vector<Integer>(26, Integer(1)), Integer(3), std::vector<Integer>(26, Integer(1))};
  EXPECT_THROW(knapsack_max_exhaustive(q), Error);
}

TEST(Knapsack, ZeroWeightItemsAreFree) {
  const auto q = query({0, 5, 0}, 1, {4, 9, 0});
  const auto r = knapsack_max(q);
  EXPECT_EQ(r.opt_value, 4);
  expect_valid(q, r);
}

TEST(Knapsack, CapacityAboveTotalIsClamped) {
  const auto r = knapsack_max(query({1, 2}, 100, {3, 4}));
  EXPECT_EQ(r.opt_value, 7);
}

TEST(Knapsack, RejectsBadInput) {
  EXPECT_THROW(knapsack_max(query({1, 2}, 1, {1, -1})), Error);
  EXPECT_THROW(knapsack_max(query({1, 2}, 1, {1})), Error);
}

TEST(Knapsack, BudgetExceededWhenNothingFits) {
  KnapsackQuery q;
  for (int i = 0; i < 60; ++i) {
    q.weights.push_back(pow2(40) + i);
    q.profits.push_back(Integer(i + 1));
  }
  q.capacity = pow2(44);
  KnapsackBudget b;
  b.max_dp_cells = 1000;
  try {
    knapsack_max(q, std::nullopt, b);
    FAIL() << "expected ResourceBudgetExceeded";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kResourceBudgetExceeded);
  }
}

TEST(Knapsack, HugeProfitsStayExact) {
  KnapsackQuery q{ints({3, 4, 5}), Integer(7), {pow2(100), pow2(100) + 1, pow2(101)}};
  const auto r = knapsack_max(q);
  EXPECT_EQ(r.opt_value, 2 * pow2(100) + 1);
}

// All methods agree with brute force on 1000 random queries with n <= 18.
TEST(KnapsackProperty, MethodsAgree) {
  auto rng = make_rng(2024);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 18));
    KnapsackQuery q{testing::random_vector(rng, n, 0, 50), 0, testing::random_vector(rng, n, 0, 60)};
    q.capacity = uniform_int(rng, 0, 50 * static_cast<std::int64_t>(n) / 2 + 1);
    const Integer truth = brute_force_max(q.weights, q.capacity, q.profits);
    for (auto m : {KnapsackMethod::kDp, KnapsackMethod::kMeetInTheMiddle, KnapsackMethod::kExhaustive}) {
      const auto r = knapsack_max(q, m);
      ASSERT_EQ(r.opt_value, truth) << "method " << method_name(m) << " trial " << trial;
      expect_valid(q, r);
    }
    const auto oracle = knapsack_max_exhaustive(q);
    // Witnesses are the lexicographically smallest optimal set for every method.
    EXPECT_EQ(knapsack_max(q, KnapsackMethod::kDp).witness, oracle.witness);
    EXPECT_EQ(knapsack_max(q, KnapsackMethod::kMeetInTheMiddle).witness, oracle.witness);
  }
}

TEST(KnapsackProperty, Monotone) {
  auto rng = make_rng(77);
  for (int trial = 0; trial < 200; ++trial) {
    const auto n = static_cast<std::size_t>(uniform_int(rng, 1, 12));
    KnapsackQuery q{testing::random_vector(rng, n, 0, 30), Integer(uniform_int(rng, 0, 100)),
                    testing::random_vector(rng, n, 0, 30)};
    const Integer base = knapsack_max(q).opt_value;
    auto bigger = q;
    bigger.capacity += uniform_int(rng, 1, 20);
    EXPECT_GE(knapsack_max(bigger).opt_value, base);
    auto more = q;
    more.weights.emplace_back(uniform_int(rng, 0, 30));
    more.profits.emplace_back(uniform_int(rng, 0, 30));
    EXPECT_GE(knapsack_max(more).opt_value, base);
  }
}

}  // namespace
}  // namespace gcrank
