#include "fastdice/cost.hpp"

#include <bit>
#include <cmath>
#include <numbers>
#include <string>
#include <unordered_map>
#include <vector>

#include "fastdice/batch.hpp"
#include "fastdice/errors.hpp"

namespace fastdice {

__extension__ using uint128 = unsigned __int128;

namespace {

using boost::multiprecision::cpp_int;

// 2r mod m for r < m, without overflowing when m > 2^63.
constexpr std::uint64_t double_mod(std::uint64_t r, std::uint64_t m) noexcept {
  return r >= m - r ? r - (m - r) : r + r;
}

// sum_j r_j 2^(len-1-j) for the residues r_0..r_{len-1}. Positions are
// filled from the least significant end with a running carry, so the cost is
// linear in len.
cpp_int weighted_residue_sum(const std::vector<std::uint64_t>& residues) {
  const std::size_t len = residues.size();
  std::vector<std::uint64_t> limbs((len + 63) / 64, 0);
  uint128 carry = 0;
  for (std::size_t pos = 0; pos < len; ++pos) {
    carry += residues[len - 1 - pos];
    if (carry & 1) limbs[pos / 64] |= std::uint64_t{1} << (pos % 64);
    carry >>= 1;
  }
  cpp_int low;
  if (!limbs.empty()) {
    boost::multiprecision::import_bits(low, limbs.begin(), limbs.end(), 64, false);
  }
  cpp_int high = static_cast<std::uint64_t>(carry >> 64);
  high <<= 64;
  high += static_cast<std::uint64_t>(carry);
  return low + (high << len);
}

cpp_int pow2(std::uint64_t e) { return cpp_int(1) << e; }

}  // namespace

double nu(Rational p, int precision_bits) {
  if (p.den == 0) throw InvalidArgument("denominator must be positive");
  if (p.num > p.den) throw ImproperFraction("nu is defined on [0, 1]");
  if (precision_bits < 1) throw InvalidArgument("precision_bits must be positive");
  if (p.num == 0 || p.num == p.den) return 0.0;

  // residue r_k = 2^k * num mod den, so {2^k p} = r_k / den.
  std::unordered_map<std::uint64_t, int> first_seen;
  std::vector<long double> partial{0.0L};  // partial[k] = sum_{i<k} r_i / 2^i
  std::uint64_t r = p.num;
  for (int k = 0; k < precision_bits; ++k) {
    if (auto it = first_seen.find(r); it != first_seen.end()) {
      const int start = it->second;
      const int period = k - start;
      const long double head = partial[start];
      const long double cycle = partial[k] - partial[start];
      const long double total = head + cycle / (1.0L - std::ldexp(1.0L, -period));
      return static_cast<double>(total / static_cast<long double>(p.den));
    }
    first_seen.emplace(r, k);
    partial.push_back(partial.back() + std::ldexp(static_cast<long double>(r), -k));
    r = double_mod(r, p.den);
  }
  return static_cast<double>(partial.back() / static_cast<long double>(p.den));
}

ExactCost exact_cost(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("range must be at least 1");
  const auto a = static_cast<unsigned>(std::countr_zero(n));
  return {n, a, n >> a};
}

long double ExactCost::value() const {
  constexpr int kTerms = 128;
  const std::uint64_t m = odd_part;
  long double sum = 0.0L;
  std::uint64_t r = 1 % m;
  for (int j = 0; j < kTerms; ++j) {
    sum += std::ldexp(static_cast<long double>(r), -j);
    r = double_mod(r, m);
    if (r == 1 % m) {
      // Purely periodic with period j + 1.
      sum /= 1.0L - std::ldexp(1.0L, -(j + 1));
      break;
    }
  }
  return static_cast<long double>(dyadic_bits) + sum;
}

std::uint64_t order_of_two(std::uint64_t odd_modulus) {
  if (odd_modulus == 0 || odd_modulus % 2 == 0) {
    throw InvalidArgument("order_of_two needs an odd modulus");
  }
  if (odd_modulus == 1) return 1;
  std::uint64_t order = 1;
  for (std::uint64_t r = 2 % odd_modulus; r != 1; r = double_mod(r, odd_modulus)) ++order;
  return order;
}

BigRational ExactCost::rational() const {
  // u_m = sum_j r_j / 2^j over the period L, closed as 2A / (2^L - 1).
  const std::uint64_t period = order_of_two(odd_part);
  std::vector<std::uint64_t> residues;
  residues.reserve(period);
  std::uint64_t r = 1 % odd_part;
  for (std::uint64_t j = 0; j < period; ++j) {
    residues.push_back(r);
    r = double_mod(r, odd_part);
  }
  const cpp_int a = weighted_residue_sum(residues);
  return BigRational(2 * a, pow2(period) - 1) + BigRational(dyadic_bits);
}

BigRational eventually_periodic_cost(std::uint64_t n) {
  if (n == 0) throw InvalidArgument("range must be at least 1");
  const auto step = [n](std::uint64_t r) { return double_mod(r, n); };
  const std::uint64_t start = 1 % n;

  // Brent's cycle detection on r -> 2r mod n.
  std::uint64_t power = 1, period = 1;
  std::uint64_t tortoise = start, hare = step(start);
  while (tortoise != hare) {
    if (power == period) {
      tortoise = hare;
      power *= 2;
      period = 0;
    }
    hare = step(hare);
    ++period;
  }
  std::uint64_t pre_period = 0;
  tortoise = hare = start;
  for (std::uint64_t i = 0; i < period; ++i) hare = step(hare);
  while (tortoise != hare) {
    tortoise = step(tortoise);
    hare = step(hare);
    ++pre_period;
  }

  std::vector<std::uint64_t> head, cycle;
  std::uint64_t r = start;
  for (std::uint64_t k = 0; k < pre_period; ++k, r = step(r)) head.push_back(r);
  for (std::uint64_t k = 0; k < period; ++k, r = step(r)) cycle.push_back(r);

  // sum_{k<mu} r_k 2^-k = 2B / 2^mu;  tail = 2^-mu * 2A / (2^lambda - 1).
  const cpp_int b = weighted_residue_sum(head);
  const cpp_int a = weighted_residue_sum(cycle);
  const cpp_int scale = pow2(pre_period);
  return BigRational(2 * b, scale) + BigRational(2 * a, scale * (pow2(period) - 1));
}

double toll(std::uint64_t n) {
  const auto u = exact_cost(n).value();
  return static_cast<double>(u - std::log2(static_cast<long double>(n)));
}

double batch_cost(std::uint64_t n, unsigned j) {
  const auto plan = plan_batch(n, j);
  return static_cast<double>(exact_cost(plan.n_pow_j).value() / j);
}

double asymptotic_constant() {
  using std::numbers::egamma;
  using std::numbers::ln2;
  return 0.5 + 1.0 / ln2 - egamma / ln2;
}

namespace {

std::complex<double> fluctuation_term(int k, double log2_x) {
  const double chi = 2.0 * std::numbers::pi * k / std::numbers::ln2;
  const std::complex<double> s{1.0, chi};
  const std::complex<double> phase = std::polar(1.0, -2.0 * std::numbers::pi * k * log2_x);
  return zeta_complex(s) / s * phase;
}

}  // namespace

double fluctuation(double log2_x, unsigned k_terms) {
  // zeta(conj s) = conj zeta(s), so the -k term is the conjugate of the +k term.
  double sum = 0.0;
  for (unsigned k = 1; k <= k_terms; ++k) {
    sum += 2.0 * fluctuation_term(static_cast<int>(k), log2_x).real();
  }
  return -sum / std::numbers::ln2;
}

std::complex<double> fluctuation_unpaired(double log2_x, unsigned k_terms) {
  std::complex<double> sum{0.0, 0.0};
  for (int k = -static_cast<int>(k_terms); k <= static_cast<int>(k_terms); ++k) {
    if (k != 0) sum += fluctuation_term(k, log2_x);
  }
  return -sum / std::numbers::ln2;
}

double asymptotic_cost(std::uint64_t n, const AsymptoticParams& params) {
  if (n < 2) throw InvalidArgument("asymptotic cost needs n >= 2");
  const double t = std::log2(static_cast<double>(n));
  return t + asymptotic_constant() + fluctuation(t, params.k_terms);
}

CostBreakdown cost_breakdown(std::uint64_t n, std::optional<AsymptoticParams> params) {
  CostBreakdown row;
  row.n = n;
  row.exact_cost = static_cast<double>(exact_cost(n).value());
  row.log2n = std::log2(static_cast<double>(n));
  row.toll = toll(n);
  if (params && n >= 2) row.asymptotic = asymptotic_cost(n, *params);
  return row;
}

}  // namespace fastdice
