#pragma once

#include <cstdint>

#include "fastdice/bit_source.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {

// Largest range accepted by the samplers. Keeping n <= 2^62 guarantees the
// doubled range v < 2n never overflows 64 bits.
inline constexpr std::uint64_t kMaxRange = std::uint64_t{1} << 62;

struct FdrOutcome {
  std::uint64_t value = 0;
  std::uint64_t bits_used = 0;

  friend bool operator==(const FdrOutcome&, const FdrOutcome&) = default;
};

// Snapshot of the roller state right after a bit has been absorbed.
struct FdrStep {
  std::uint64_t range;  // v
  std::uint64_t value;  // c, uniform on [0, v)
};

namespace detail {
struct NoObserver {
  constexpr void operator()(const FdrStep&) const noexcept {}
};
void check_range(std::uint64_t n);
}  // namespace detail

// Fast Dice Roller with a per-iteration observer hook. The observer sees the
// state after doubling and before the accept/reject test.
//
// Loop invariant: value is uniform on [0, range), and range < 2n.
template <class Observer>
FdrOutcome fdr_uniform_observed(RandomBitSource& source, std::uint64_t n, Observer&& observe) {
  detail::check_range(n);
  if (n == 1) return {0, 0};

  std::uint64_t v = 1;
  std::uint64_t c = 0;
  std::uint64_t bits = 0;
  for (;;) {
    v <<= 1;
    c = (c << 1) | source.next_bit();
    ++bits;
    observe(FdrStep{v, c});
    if (v >= n) {
      if (c < n) return {c, bits};
      v -= n;
      c -= n;
    }
  }
}

// Uniform integer on [0, n) from unbiased bits, consuming the optimal
// expected number of flips for a Knuth-Yao generator of the uniform law.
// n == 1 returns immediately without drawing.
inline FdrOutcome fdr_uniform(RandomBitSource& source, std::uint64_t n) {
  return fdr_uniform_observed(source, n, detail::NoObserver{});
}

// Uniform integer on [lo, hi].
std::int64_t fdr_uniform_range(RandomBitSource& source, std::int64_t lo, std::int64_t hi);

}  // namespace fastdice
