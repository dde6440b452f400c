#include "fastdice/permutation.hpp"

#include <numeric>
#include <string>
#include <utility>

#include "fastdice/dice_roller.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {

namespace {

void check_code(const LehmerCode& code) {
  const std::size_t n = code.size();
  for (std::size_t i = 1; i <= n; ++i) {
    if (code.digit(i) >= i) {
      throw DigitOutOfRange("Lehmer digit X_" + std::to_string(i) + " = " +
                            std::to_string(code.digit(i)) + " must be < " + std::to_string(i));
    }
  }
}

}  // namespace

Permutation Permutation::identity(std::size_t n) {
  Permutation p;
  p.values.resize(n);
  std::iota(p.values.begin(), p.values.end(), 1u);
  return p;
}

bool Permutation::is_valid() const {
  std::vector<bool> seen(values.size() + 1, false);
  for (auto v : values) {
    if (v == 0 || v > values.size() || seen[v]) return false;
    seen[v] = true;
  }
  return true;
}

std::uint64_t LehmerCode::digit_sum() const {
  return std::accumulate(digits.begin(), digits.end(), std::uint64_t{0});
}

std::uint64_t factorial(std::size_t n) {
  if (n > kMaxUnrankedSize) {
    throw FactorialOverflow(std::to_string(n) + "! does not fit the 64-bit sampling range");
  }
  std::uint64_t f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= i;
  return f;
}

Permutation fisher_yates(RandomBitSource& source, std::size_t n) {
  auto perm = Permutation::identity(n);
  auto& t = perm.values;
  for (std::size_t i = 0; i < n; ++i) {
    const auto offset = fdr_uniform(source, n - i).value;
    std::swap(t[i], t[i + offset]);
  }
  return perm;
}

Rank factorial_compose(const LehmerCode& code) {
  check_code(code);
  const std::size_t n = code.size();
  (void)factorial(n);
  // Horner form of sum X_i (i-1)!, from X_n down.
  std::uint64_t u = 0;
  for (std::size_t i = n; i >= 1; --i) u = u * i + code.digit(i);
  return {u, n};
}

LehmerCode factorial_decompose(const Rank& rank) {
  if (rank.value >= factorial(rank.n)) {
    throw RankOutOfRange("rank " + std::to_string(rank.value) + " is not below " +
                         std::to_string(rank.n) + "!");
  }
  LehmerCode code;
  code.digits.resize(rank.n);
  std::uint64_t u = rank.value;
  for (std::size_t i = 1; i <= rank.n; ++i) {
    code.digits[rank.n - i] = static_cast<std::uint32_t>(u % i);
    u /= i;
  }
  return code;
}

Permutation lehmer_to_permutation_selection(const LehmerCode& code) {
  check_code(code);
  auto remaining = Permutation::identity(code.size()).values;
  Permutation perm;
  perm.values.reserve(code.size());
  for (auto x : code.digits) {
    perm.values.push_back(remaining[x]);
    remaining.erase(remaining.begin() + x);
  }
  return perm;
}

Permutation lehmer_to_permutation_fy(const LehmerCode& code) {
  check_code(code);
  auto perm = Permutation::identity(code.size());
  auto& t = perm.values;
  for (std::size_t i = 0; i < t.size(); ++i) std::swap(t[i], t[i + code.digits[i]]);
  return perm;
}

namespace {

LehmerCode draw_code(RandomBitSource& source, std::size_t n) {
  const auto u = fdr_uniform(source, factorial(n)).value;
  return factorial_decompose({u, n});
}

}  // namespace

Permutation random_permutation_unranked(RandomBitSource& source, std::size_t n) {
  return lehmer_to_permutation_fy(draw_code(source, n));
}

Permutation random_permutation_selection(RandomBitSource& source, std::size_t n) {
  return lehmer_to_permutation_selection(draw_code(source, n));
}

std::uint64_t inversion_count(const Permutation& perm) {
  const auto& t = perm.values;
  std::uint64_t count = 0;
  for (std::size_t i = 0; i < t.size(); ++i) {
    for (std::size_t j = i + 1; j < t.size(); ++j) count += t[i] > t[j];
  }
  return count;
}

}  // namespace fastdice
