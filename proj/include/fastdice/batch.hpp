#pragma once

#include <cstdint>
#include <vector>

#include "fastdice/bit_source.hpp"

namespace fastdice {

// j uniforms of range n drawn as one uniform of range n^j.
struct BatchPlan {
  std::uint64_t n = 2;
  unsigned j = 1;
  std::uint64_t n_pow_j = 2;

  friend bool operator==(const BatchPlan&, const BatchPlan&) = default;
};

// Throws Overflow when n^j > 2^62.
BatchPlan plan_batch(std::uint64_t n, unsigned j);

// Largest j with n^j <= 2^62, capped at 64.
unsigned auto_batch_size(std::uint64_t n);

// Base-n digits of y, most significant first (X_j, ..., X_1).
std::vector<std::uint64_t> decompose_batch(const BatchPlan& plan, std::uint64_t y);

// Inverse of decompose_batch.
std::uint64_t compose_batch(const BatchPlan& plan, const std::vector<std::uint64_t>& digits);

std::vector<std::uint64_t> batch_uniform(RandomBitSource& source, const BatchPlan& plan);

}  // namespace fastdice
