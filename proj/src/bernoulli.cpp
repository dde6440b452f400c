#include "fastdice/bernoulli.hpp"

#include "fastdice/dice_roller.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {

namespace {

void check_parameter(Rational p) {
  if (p.den == 0) throw InvalidArgument("denominator must be positive");
  if (p.den > kMaxRange) throw RangeTooLarge("denominator exceeds 2^62");
  if (p.num > p.den) throw ImproperFraction("Bernoulli parameter exceeds 1");
}

}  // namespace

BinaryExpansion::BinaryExpansion(Rational p) : remainder_(p.num), den_(p.den) {
  check_parameter(p);
  if (p.num == p.den) throw ImproperFraction("binary expansion needs num < den");
}

unsigned BinaryExpansion::next() {
  remainder_ <<= 1;
  if (remainder_ >= den_) {
    remainder_ -= den_;
    return 1;
  }
  return 0;
}

std::vector<std::uint8_t> binary_expansion(Rational p, std::size_t count) {
  BinaryExpansion expansion(p);
  std::vector<std::uint8_t> bits(count);
  for (auto& b : bits) b = static_cast<std::uint8_t>(expansion.next());
  return bits;
}

unsigned bernoulli_rational(RandomBitSource& source, Rational p) {
  check_parameter(p);
  if (p.num == 0) return 0;
  if (p.num == p.den) return 1;

  BinaryExpansion expansion(p);
  unsigned bit;
  do {
    bit = expansion.next();
  } while (source.next_bit() == 0);
  return bit;
}

}  // namespace fastdice
