#include "fastdice/bench.hpp"

#include <cmath>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "fastdice/batch.hpp"
#include "fastdice/cost.hpp"
#include "fastdice/dice_roller.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {

__extension__ using uint128 = unsigned __int128;

ChiSquare chi_square(std::span<const std::uint64_t> observed, std::span<const double> expected) {
  if (observed.size() != expected.size()) {
    throw InvalidArgument("observed and expected counts differ in length");
  }
  ChiSquare out;
  for (std::size_t i = 0; i < observed.size(); ++i) {
    if (expected[i] <= 0) throw InvalidArgument("expected counts must be positive");
    const double d = static_cast<double>(observed[i]) - expected[i];
    out.statistic += d * d / expected[i];
  }
  out.degrees_of_freedom = observed.empty() ? 0 : static_cast<unsigned>(observed.size() - 1);
  if (out.degrees_of_freedom > 0) {
    boost::math::chi_squared dist(out.degrees_of_freedom);
    out.p_value = boost::math::cdf(boost::math::complement(dist, out.statistic));
  }
  return out;
}

double chi_square_critical(unsigned degrees_of_freedom, double alpha) {
  if (degrees_of_freedom == 0) throw InvalidArgument("chi-square needs positive degrees of freedom");
  boost::math::chi_squared dist(degrees_of_freedom);
  return boost::math::quantile(boost::math::complement(dist, alpha));
}

BenchReport run_bench(RandomBitSource& source, std::uint64_t n, std::uint64_t count,
                      unsigned batch) {
  if (n == 0) throw InvalidArgument("range must be at least 1");
  if (batch == 0) throw InvalidArgument("batch size must be at least 1");
  if (n > kMaxRange) throw RangeTooLarge("range exceeds 2^62");

  const std::uint64_t bins = std::min(n, kBenchMaxBins);
  std::vector<std::uint64_t> histogram(bins, 0);
  const auto record = [&](std::uint64_t value) {
    const auto bin = static_cast<std::uint64_t>(static_cast<uint128>(value) * bins / n);
    ++histogram[bin];
  };

  const std::uint64_t start = source.bits_consumed();
  BenchReport report;
  report.n = n;
  report.batch = batch;
  report.count = count;

  if (batch == 1 || n == 1) {
    report.batch = 1;
    for (std::uint64_t i = 0; i < count; ++i) record(fdr_uniform(source, n).value);
    report.theoretical = static_cast<double>(exact_cost(n).value());
  } else {
    const auto plan = plan_batch(n, batch);
    std::uint64_t produced = 0;
    while (produced < count) {
      for (auto x : batch_uniform(source, plan)) {
        if (produced == count) break;
        record(x);
        ++produced;
      }
    }
    report.theoretical = batch_cost(n, batch);
  }

  report.total_bits = source.bits_consumed() - start;
  report.mean_bits_per_variate =
      count == 0 ? 0.0 : static_cast<double>(report.total_bits) / static_cast<double>(count);
  report.abs_deviation = count == 0 ? 0.0 : std::abs(report.mean_bits_per_variate - report.theoretical);

  if (count > 0 && bins > 1) {
    // Bin b holds the values v with floor(v * bins / n) == b.
    std::vector<double> expected(bins);
    const auto lower = [&](std::uint64_t b) {
      const auto num = static_cast<uint128>(b) * n;
      return static_cast<std::uint64_t>((num + bins - 1) / bins);
    };
    for (std::uint64_t b = 0; b < bins; ++b) {
      const double width = static_cast<double>(lower(b + 1) - lower(b));
      expected[b] = static_cast<double>(count) * width / static_cast<double>(n);
    }
    report.uniformity = chi_square(histogram, expected);
  }
  return report;
}

}  // namespace fastdice
