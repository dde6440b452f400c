#pragma once

#include <cstdint>
#include <span>

#include "fastdice/bit_source.hpp"

namespace fastdice {

struct ChiSquare {
  double statistic = 0;
  unsigned degrees_of_freedom = 0;
  double p_value = 1;
};

// Pearson goodness-of-fit of `observed` against expected[i] (same length).
ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected);

// Upper quantile of the chi-square law: the statistic exceeded with
// probability alpha.
double chi_square_critical(unsigned degrees_of_freedom, double alpha);

// Empirical bit consumption of the dice roller next to its exact expectation.
struct BenchReport {
  std::uint64_t n = 1;
  unsigned batch = 1;
  std::uint64_t count = 0;        // variates produced
  std::uint64_t total_bits = 0;   // source counter delta
  double mean_bits_per_variate = 0;
  double theoretical = 0;         // u_n, or u_{n^j} / j in batch mode
  double abs_deviation = 0;
  ChiSquare uniformity;           // over min(n, kBenchMaxBins) bins
};

inline constexpr std::uint64_t kBenchMaxBins = 1024;

// Draws `count` variates of range n, `batch` at a time (a trailing partial
// batch is drawn in full and truncated).
BenchReport run_bench(RandomBitSource& source, std::uint64_t n, std::uint64_t count,
                      unsigned batch = 1);

}  // namespace fastdice
