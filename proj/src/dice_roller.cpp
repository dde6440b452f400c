#include "fastdice/dice_roller.hpp"

#include <string>

namespace fastdice {

namespace detail {

void check_range(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("range must be at least 1");
  if (n > kMaxRange) {
    throw RangeTooLarge("range " + std::to_string(n) + " exceeds 2^62");
  }
}

}  // namespace detail

std::int64_t fdr_uniform_range(RandomBitSource& source, std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw EmptyRange("empty range: lo > hi");
  // Two's complement difference is exact in uint64 for any lo <= hi.
  const std::uint64_t span = static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo);
  if (span >= kMaxRange) throw RangeTooLarge("range [lo, hi] has more than 2^62 values");
  const auto draw = fdr_uniform(source, span + 1);
  return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + draw.value);
}

}  // namespace fastdice
