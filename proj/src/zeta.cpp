#include <array>
#include <algorithm>
#include <cmath>
#include <limits>

#include "fastdice/cost.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {

namespace {

constexpr unsigned kMaxCorrections = 15;

// B_{2k} / (2k)! for k = 1..15.
constexpr std::array<long double, kMaxCorrections> kBernoulliOverFactorial = [] {
  constexpr std::array<long double, kMaxCorrections> bernoulli{
      1.0L / 6,
      -1.0L / 30,
      1.0L / 42,
      -1.0L / 30,
      5.0L / 66,
      -691.0L / 2730,
      7.0L / 6,
      -3617.0L / 510,
      43867.0L / 798,
      -174611.0L / 330,
      854513.0L / 138,
      -236364091.0L / 2730,
      8553103.0L / 6,
      -23749461029.0L / 870,
      8615841276005.0L / 14322,
  };
  std::array<long double, kMaxCorrections> out{};
  long double fact = 1.0L;
  for (unsigned k = 1; k <= kMaxCorrections; ++k) {
    fact *= static_cast<long double>(2 * k - 1) * (2 * k);
    out[k - 1] = bernoulli[k - 1] / fact;
  }
  return out;
}();

using cplx = std::complex<double>;

struct Partial {
  cplx value;
  double remainder_bound;
};

// Euler-Maclaurin with N direct terms and up to M corrections, stopping
// early once the remainder bound |T_{k+1}| |s + 2k + 1| / (Re s + 2k + 1)
// drops to target_error.
Partial euler_maclaurin(cplx s, unsigned terms, unsigned corrections, double target_error) {
  const double big_n = terms;
  cplx sum{0.0, 0.0};
  for (unsigned k = 1; k < terms; ++k) sum += std::exp(-s * std::log(static_cast<double>(k)));

  const cplx n_pow = std::exp(-s * std::log(big_n));  // N^-s
  sum += big_n * n_pow / (s - 1.0) + 0.5 * n_pow;

  // T_k = B_2k/(2k)! * s(s+1)...(s+2k-2) * N^(-s-2k+1)
  cplx rising = s;
  cplx power = n_pow / big_n;
  double bound = std::numeric_limits<double>::infinity();
  for (unsigned k = 1; k <= corrections; ++k) {
    sum += static_cast<double>(kBernoulliOverFactorial[k - 1]) * rising * power;
    rising *= (s + (2.0 * k - 1.0)) * (s + 2.0 * k);
    power /= big_n * big_n;
    if (k < kMaxCorrections) {
      const double next = std::abs(static_cast<double>(kBernoulliOverFactorial[k]) * rising * power);
      const double shift = 2.0 * k + 1.0;
      bound = next * std::abs(s + shift) / (s.real() + shift);
    } else {
      bound = std::numeric_limits<double>::infinity();
    }
    if (bound <= target_error) break;
  }
  return {sum, bound};
}

}  // namespace

std::complex<double> zeta_euler_maclaurin(std::complex<double> s, unsigned terms,
                                          unsigned corrections) {
  if (s == cplx{1.0, 0.0}) throw PoleAtOne("zeta has a pole at s = 1");
  if (terms < 1) throw InvalidArgument("Euler-Maclaurin needs at least one term");
  if (corrections > kMaxCorrections) {
    throw InvalidArgument("at most 15 Bernoulli corrections are tabulated");
  }
  return euler_maclaurin(s, terms, corrections, 0.0).value;
}

std::complex<double> zeta_complex(std::complex<double> s, double target_error) {
  if (s == cplx{1.0, 0.0}) throw PoleAtOne("zeta has a pole at s = 1");
  if (!(s.real() > 0.0)) throw InvalidArgument("zeta_complex needs Re(s) > 0");
  if (!(target_error > 0.0)) throw InvalidArgument("target error must be positive");

  // The correction terms shrink roughly like (|s| / 2 pi N)^2 per step, so
  // start with N comparable to |s| and grow it if the bound is not met.
  unsigned terms = static_cast<unsigned>(std::max(16.0, std::ceil(std::abs(s)) + 1.0));
  Partial best{};
  for (int attempt = 0; attempt < 12; ++attempt, terms *= 2) {
    best = euler_maclaurin(s, terms, kMaxCorrections - 1, target_error);
    if (best.remainder_bound <= target_error) return best.value;
  }
  return best.value;
}

}  // namespace fastdice
