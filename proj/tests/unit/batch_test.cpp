#include "fastdice/batch.hpp"

#include <set>

#include <gtest/gtest.h>

#include "fastdice/dice_roller.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {
namespace {

TEST(PlanBatch, Examples) {
  EXPECT_EQ(plan_batch(3, 6).n_pow_j, 729u);
  EXPECT_EQ(plan_batch(2, 62).n_pow_j, kMaxRange);
  EXPECT_THROW(plan_batch(10, 19), Overflow);
  EXPECT_THROW(plan_batch(2, 63), Overflow);
  EXPECT_THROW(plan_batch(1, 3), InvalidArgument);
  EXPECT_THROW(plan_batch(3, 0), InvalidArgument);
}

TEST(AutoBatchSize, IntegerLogarithm) {
  EXPECT_EQ(auto_batch_size(3), 39u);
  EXPECT_EQ(auto_batch_size(2), 62u);
  EXPECT_EQ(auto_batch_size(std::uint64_t{1} << 31), 2u);
  EXPECT_EQ(auto_batch_size(kMaxRange), 1u);
  for (std::uint64_t n = 2; n < 2000; n += 3) {
    const unsigned j = auto_batch_size(n);
    EXPECT_NO_THROW(plan_batch(n, j));
    EXPECT_THROW(plan_batch(n, j + 1), Overflow) << n;
  }
}

TEST(BatchUniform, DecomposesMostSignificantFirst) {
  const auto plan = plan_batch(3, 2);
  EXPECT_EQ(decompose_batch(plan, 5), (std::vector<std::uint64_t>{1, 2}));
}

TEST(BatchUniform, BinaryDigitsAreRawBits) {
  ScriptedBitSource source{1, 0, 1};
  EXPECT_EQ(batch_uniform(source, plan_batch(2, 3)), (std::vector<std::uint64_t>{1, 0, 1}));
}

TEST(BatchUniform, DecompositionIsBijective) {
  const auto plan = plan_batch(3, 2);
  std::set<std::vector<std::uint64_t>> seen;
  std::vector<int> marginal_hi(3), marginal_lo(3);
  for (std::uint64_t y = 0; y < 9; ++y) {
    const auto d = decompose_batch(plan, y);
    seen.insert(d);
    ++marginal_hi[d[0]];
    ++marginal_lo[d[1]];
  }
  EXPECT_EQ(seen.size(), 9u);
  for (int k = 0; k < 3; ++k) {
    EXPECT_EQ(marginal_hi[k], 3);
    EXPECT_EQ(marginal_lo[k], 3);
  }
}

TEST(BatchUniform, RoundTripBruteForce) {
  for (auto [n, j] : {std::pair{2ull, 20u}, {3ull, 12u}, {10ull, 6u}, {1000ull, 2u}}) {
    const auto plan = plan_batch(n, j);
    for (std::uint64_t y = 0; y < plan.n_pow_j; y += (plan.n_pow_j > 1000000 ? 7 : 1)) {
      ASSERT_EQ(compose_batch(plan, decompose_batch(plan, y)), y);
    }
  }
}

TEST(BatchUniform, CostIsOneRollOfTheProductRange) {
  const auto plan = plan_batch(7, 5);
  BufferedWordSource a(42), b(42);
  for (int rep = 0; rep < 100; ++rep) {
    const auto before = a.bits_consumed();
    const auto digits = batch_uniform(a, plan);
    const auto roll = fdr_uniform(b, plan.n_pow_j);
    EXPECT_EQ(a.bits_consumed() - before, roll.bits_used);
    EXPECT_EQ(compose_batch(plan, digits), roll.value);
  }
}

TEST(BatchUniform, RejectsBadInputs) {
  const auto plan = plan_batch(3, 2);
  EXPECT_THROW(decompose_batch(plan, 9), InvalidArgument);
  EXPECT_THROW(compose_batch(plan, {1}), InvalidArgument);
  EXPECT_THROW(compose_batch(plan, {1, 3}), InvalidArgument);
}

}  // namespace
}  // namespace fastdice
