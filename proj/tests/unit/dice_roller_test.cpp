#include "fastdice/dice_roller.hpp"

#include <cmath>

#include <gtest/gtest.h>

#include "oracles.hpp"

namespace fastdice {
namespace {

TEST(FdrUniform, FiveRightLeftLeftIsFour) {
  ScriptedBitSource source{1, 0, 0};
  EXPECT_EQ(fdr_uniform(source, 5), (FdrOutcome{4, 3}));
}

TEST(FdrUniform, FiveRejectionBranchRecyclesBits) {
  ScriptedBitSource source{1, 0, 1, 0};
  EXPECT_EQ(fdr_uniform(source, 5), (FdrOutcome{0, 4}));
}

TEST(FdrUniform, PowerOfTwoReadsBinaryDigits) {
  ScriptedBitSource source{1, 0};
  EXPECT_EQ(fdr_uniform(source, 4), (FdrOutcome{2, 2}));
}

TEST(FdrUniform, SingletonDrawsNothing) {
  ScriptedBitSource source{};
  EXPECT_EQ(fdr_uniform(source, 1), (FdrOutcome{0, 0}));
}

TEST(FdrUniform, BitsUsedMatchesSourceCounter) {
  BufferedWordSource source(3);
  for (std::uint64_t n : {2u, 3u, 5u, 7u, 100u, 1000003u}) {
    const auto before = source.bits_consumed();
    const auto out = fdr_uniform(source, n);
    EXPECT_EQ(out.bits_used, source.bits_consumed() - before);
    EXPECT_LT(out.value, n);
  }
}

TEST(FdrUniform, RangeLimits) {
  ScriptedBitSource source{};
  EXPECT_THROW(fdr_uniform(source, 0), InvalidArgument);
  EXPECT_THROW(fdr_uniform(source, kMaxRange + 1), RangeTooLarge);
  BufferedWordSource rng(11);
  for (int i = 0; i < 100; ++i) {
    const auto out = fdr_uniform(rng, kMaxRange);
    EXPECT_EQ(out.bits_used, 62u);
  }
  for (int i = 0; i < 100; ++i) EXPECT_LT(fdr_uniform(rng, kMaxRange - 1).value, kMaxRange - 1);
}

TEST(FdrUniform, PropagatesScriptExhaustion) {
  ScriptedBitSource source{1, 0};
  EXPECT_THROW(fdr_uniform(source, 5), ScriptExhausted);
}

TEST(FdrUniform, StateStaysWithinBounds) {
  BufferedWordSource source(99);
  for (std::uint64_t n = 2; n < 300; ++n) {
    for (int rep = 0; rep < 20; ++rep) {
      fdr_uniform_observed(source, n, [n](const FdrStep& step) {
        ASSERT_LT(step.value, step.range);
        ASSERT_LT(step.range, 2 * n);
      });
    }
  }
}

TEST(FdrUniform, DyadicRangesHaveZeroVariance) {
  BufferedWordSource source(5);
  for (unsigned m = 0; m <= 20; ++m) {
    for (int rep = 0; rep < 200; ++rep) {
      EXPECT_EQ(fdr_uniform(source, std::uint64_t{1} << m).bits_used, m);
    }
  }
}

TEST(FdrUniform, NeverShallowerThanFloorLog2) {
  BufferedWordSource source(17);
  for (std::uint64_t n = 2; n < 5000; n += 7) {
    const auto depth = static_cast<std::uint64_t>(std::floor(std::log2(static_cast<double>(n))));
    EXPECT_GE(fdr_uniform(source, n).bits_used, depth);
  }
}

class FdrEnumeration : public ::testing::TestWithParam<std::uint64_t> {};

TEST_P(FdrEnumeration, PrefixMassIsUniform) {
  const std::uint64_t n = GetParam();
  constexpr int kDepth = 12;
  const auto e = oracle::enumerate_all(kDepth, n, [n](RandomBitSource& s) {
    return fdr_uniform(s, n).value;
  });
  const int block = static_cast<int>(std::floor(std::log2(static_cast<double>(n)))) + 1;
  EXPECT_LE(e.unterminated, std::pow(0.5, kDepth / block));
  for (std::uint64_t k = 0; k < n; ++k) {
    EXPECT_LE(std::abs(e.mass[k] - 1.0 / n), e.unterminated + 1e-15) << "outcome " << k;
  }
}

INSTANTIATE_TEST_SUITE_P(SmallRanges, FdrEnumeration, ::testing::Values(2, 3, 5, 6, 7));

TEST(FdrUniformRange, Singleton) {
  ScriptedBitSource source{};
  EXPECT_EQ(fdr_uniform_range(source, 3, 3), 3);
  EXPECT_EQ(source.bits_consumed(), 0u);
}

TEST(FdrUniformRange, DelegatesToRoller) {
  ScriptedBitSource a{1, 0, 0};
  EXPECT_EQ(fdr_uniform_range(a, 0, 4), 4);
  ScriptedBitSource b{0, 1};
  EXPECT_EQ(fdr_uniform_range(b, 10, 13), 11);
}

TEST(FdrUniformRange, NegativeBounds) {
  ScriptedBitSource source{1, 1};
  EXPECT_EQ(fdr_uniform_range(source, -2, 1), 1);
}

TEST(FdrUniformRange, Errors) {
  ScriptedBitSource source{};
  EXPECT_THROW(fdr_uniform_range(source, 5, 4), EmptyRange);
  EXPECT_THROW(fdr_uniform_range(source, INT64_MIN, INT64_MAX), RangeTooLarge);
}

}  // namespace
}  // namespace fastdice
