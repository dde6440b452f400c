#pragma once

#include <compare>
#include <cstdint>
#include <vector>

#include "fastdice/bit_source.hpp"

namespace fastdice {

// One-indexed permutation of {1, ..., n}.
struct Permutation {
  std::vector<std::uint32_t> values;

  std::size_t size() const noexcept { return values.size(); }
  static Permutation identity(std::size_t n);
  bool is_valid() const;

  friend auto operator<=>(const Permutation&, const Permutation&) = default;
};

// Factorial-base digits stored as (X_n, ..., X_1) with 0 <= X_i < i.
struct LehmerCode {
  std::vector<std::uint32_t> digits;

  std::size_t size() const noexcept { return digits.size(); }
  // X_i for 1 <= i <= size().
  std::uint32_t digit(std::size_t i) const { return digits[digits.size() - i]; }
  std::uint64_t digit_sum() const;

  friend auto operator<=>(const LehmerCode&, const LehmerCode&) = default;
};

// Rank U in [0, n!).
struct Rank {
  std::uint64_t value = 0;
  std::size_t n = 0;

  friend bool operator==(const Rank&, const Rank&) = default;
};

// Permutations whose factorial still fits the sampler range (20! < 2^62).
inline constexpr std::size_t kMaxUnrankedSize = 20;

// n!; throws FactorialOverflow for n > 20.
std::uint64_t factorial(std::size_t n);

// Durstenfeld shuffle of the identity, each step drawing its offset with the
// dice roller.
Permutation fisher_yates(RandomBitSource& source, std::size_t n);

Rank factorial_compose(const LehmerCode& code);
LehmerCode factorial_decompose(const Rank& rank);

// Laisant's selection construction: the X_n-th of the sorted remaining
// values comes first, then the X_{n-1}-th of what is left, and so on.
// Quadratic, but inversion_count(result) == code.digit_sum().
Permutation lehmer_to_permutation_selection(const LehmerCode& code);

// Deterministic Fisher-Yates: iteration i (one-based) swaps position i with
// position i + X_{n-i+1}. Linear time, a different bijection from the
// selection construction.
Permutation lehmer_to_permutation_fy(const LehmerCode& code);

// Draws U uniformly from [0, n!) with a single dice roll and unranks it
// through lehmer_to_permutation_fy. Throws FactorialOverflow for n > 20.
Permutation random_permutation_unranked(RandomBitSource& source, std::size_t n);

// Same draw, unranked through the selection construction.
Permutation random_permutation_selection(RandomBitSource& source, std::size_t n);

// Number of pairs i < j with perm[i] > perm[j] (quadratic count).
std::uint64_t inversion_count(const Permutation& perm);

}  // namespace fastdice
