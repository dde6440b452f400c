#pragma once

#include <cstdint>
#include <vector>

#include "fastdice/bit_source.hpp"

namespace fastdice {

// Exact fraction num/den. Not reduced; 0 <= num <= den and den >= 1 are
// checked by the operations that need them.
struct Rational {
  std::uint64_t num = 0;
  std::uint64_t den = 1;

  double to_double() const noexcept { return static_cast<double>(num) / static_cast<double>(den); }
  friend bool operator==(const Rational&, const Rational&) = default;
};

// Incremental binary expansion of a proper fraction k/n: each step doubles
// the remainder and emits 1 when it reaches n.
class BinaryExpansion {
 public:
  explicit BinaryExpansion(Rational p);

  unsigned next();
  std::uint64_t remainder() const noexcept { return remainder_; }

 private:
  std::uint64_t remainder_;
  std::uint64_t den_;
};

// First `count` bits after the binary point of p. Requires num < den.
std::vector<std::uint8_t> binary_expansion(Rational p, std::size_t count);

// Returns 1 with probability exactly p: walks the expansion of p until a
// flip comes up 1 and returns the expansion bit at that position. Expected
// cost is two flips. p = 0 and p = 1 consume nothing.
unsigned bernoulli_rational(RandomBitSource& source, Rational p);

}  // namespace fastdice
