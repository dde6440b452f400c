#include "fastdice/batch.hpp"

#include <string>

#include "fastdice/dice_roller.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {

BatchPlan plan_batch(std::uint64_t n, unsigned j) {
  if (n < 2) throw InvalidArgument("batch range must be at least 2");
  if (j < 1) throw InvalidArgument("batch size must be at least 1");
  std::uint64_t p = 1;
  for (unsigned i = 0; i < j; ++i) {
    if (p > kMaxRange / n) {
      throw Overflow(std::to_string(n) + "^" + std::to_string(j) + " exceeds 2^62");
    }
    p *= n;
  }
  return {n, j, p};
}

unsigned auto_batch_size(std::uint64_t n) {
  if (n < 2) throw InvalidArgument("batch range must be at least 2");
  if (n > kMaxRange) throw RangeTooLarge("batch range exceeds 2^62");
  unsigned j = 0;
  std::uint64_t p = 1;
  while (j < 64 && p <= kMaxRange / n) {
    p *= n;
    ++j;
  }
  return j;
}

std::vector<std::uint64_t> decompose_batch(const BatchPlan& plan, std::uint64_t y) {
  if (y >= plan.n_pow_j) throw InvalidArgument("batch value out of range");
  std::vector<std::uint64_t> digits(plan.j);
  for (auto it = digits.rbegin(); it != digits.rend(); ++it) {
    *it = y % plan.n;
    y /= plan.n;
  }
  return digits;
}

std::uint64_t compose_batch(const BatchPlan& plan, const std::vector<std::uint64_t>& digits) {
  if (digits.size() != plan.j) throw InvalidArgument("digit count does not match batch size");
  std::uint64_t y = 0;
  for (auto d : digits) {
    if (d >= plan.n) throw InvalidArgument("batch digit out of range");
    y = y * plan.n + d;
  }
  return y;
}

std::vector<std::uint64_t> batch_uniform(RandomBitSource& source, const BatchPlan& plan) {
  return decompose_batch(plan, fdr_uniform(source, plan.n_pow_j).value);
}

}  // namespace fastdice
