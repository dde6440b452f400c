#pragma once

#include <complex>
#include <cstdint>
#include <optional>

#include <boost/multiprecision/cpp_int.hpp>

#include "fastdice/bernoulli.hpp"

namespace fastdice {

using BigRational = boost::multiprecision::cpp_rational;

// Knuth-Yao cost functional nu(p) = sum_{k>=0} {2^k p} / 2^k.
//
// The fractional parts {2^k p} are tracked exactly as residues of k*2^j
// modulo den. If the residue sequence cycles within `precision_bits` terms
// the periodic tail is summed in closed form; otherwise the sum is truncated
// there, with a tail below 2^(1 - precision_bits).
double nu(Rational p, int precision_bits = 64);

// Expected flips u_n of the dice roller for range n, split as n = 2^a * m
// with m odd: the first a residues 2^k mod n are 2^k themselves and
// contribute a bits, the rest reduce to the purely periodic sum of m.
struct ExactCost {
  std::uint64_t n = 1;
  unsigned dyadic_bits = 0;   // a
  std::uint64_t odd_part = 1; // m

  // u_n in long double; exact up to rounding when the period of 2 mod m is
  // at most 128, otherwise truncated with a tail below m * 2^-127.
  long double value() const;

  // u_n as an exact rational. Cost is linear in the period of 2 mod m.
  BigRational rational() const;
};

ExactCost exact_cost(std::uint64_t n);

// u_n = sum_k (2^k mod n) / 2^k as an exact rational, computed directly from
// the eventually periodic residue sequence of n (pre-period and period found
// by cycle detection) without splitting off the power of two.
BigRational eventually_periodic_cost(std::uint64_t n);

// Multiplicative order of 2 modulo an odd m (1 for m == 1).
std::uint64_t order_of_two(std::uint64_t odd_modulus);

// t_n = u_n - log2 n, in [0, 2]; zero exactly for powers of two.
double toll(std::uint64_t n);

// Per-variate cost u_{n^j} / j of drawing j at a time. Throws Overflow when
// n^j > 2^62.
double batch_cost(std::uint64_t n, unsigned j);

// Riemann zeta by Euler-Maclaurin summation with `terms` direct terms and
// `corrections` Bernoulli corrections (B_2 .. B_{2*corrections}, at most 15).
std::complex<double> zeta_euler_maclaurin(std::complex<double> s, unsigned terms,
                                          unsigned corrections);

// Riemann zeta for Re(s) > 0, s != 1, choosing the truncation so that the
// Euler-Maclaurin remainder bound is at most target_error.
std::complex<double> zeta_complex(std::complex<double> s, double target_error = 1e-13);

struct AsymptoticParams {
  unsigned k_terms = 12;
};

// 1/2 + 1/ln 2 - gamma/ln 2.
double asymptotic_constant();

// Periodic fluctuation P(t) truncated to |k| <= k_terms, conjugate terms
// paired as 2 Re[zeta(1 + i chi_k) / (1 + i chi_k) e^{-2 pi i k t}] with
// chi_k = 2 pi k / ln 2.
double fluctuation(double log2_x, unsigned k_terms);

// The same truncated series summed over k = -K..K, k != 0, without pairing.
// Its imaginary part vanishes up to rounding.
std::complex<double> fluctuation_unpaired(double log2_x, unsigned k_terms);

// log2 n + constant + P(log2 n).
double asymptotic_cost(std::uint64_t n, const AsymptoticParams& params = {});

struct CostBreakdown {
  std::uint64_t n = 1;
  double exact_cost = 0;
  double log2n = 0;
  double toll = 0;
  std::optional<double> asymptotic;
};

CostBreakdown cost_breakdown(std::uint64_t n, std::optional<AsymptoticParams> params = {});

}  // namespace fastdice
