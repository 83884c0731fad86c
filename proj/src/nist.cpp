#include "ecga/nist.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdint>
#include <cstdlib>

#include "ecga/error.hpp"
#include "ecga/special_functions.hpp"

namespace ecga::nist {

using special::erfc;
using special::igamc;
using special::normal_cdf;

namespace {

void require_nonempty(const BitString& bits, const char* test) {
  if (bits.empty()) throw Error(ErrorCode::EmptyBitString, std::string(test) + " needs input bits");
}

// Occurrences of every b-bit pattern over the n overlapping windows of the
// cyclically extended sequence.
std::vector<std::size_t> cyclic_pattern_counts(const BitString& bits, unsigned b) {
  std::vector<std::size_t> counts(std::size_t{1} << b, 0);
  if (b == 0) {
    counts[0] = bits.size();
    return counts;
  }
  const std::size_t n = bits.size();
  const std::uint32_t mask = (std::uint32_t{1} << b) - 1;
  std::uint32_t window = 0;
  for (unsigned j = 0; j + 1 < b; ++j) window = (window << 1) | bits[j % n];
  for (std::size_t i = 0; i < n; ++i) {
    window = ((window << 1) | bits[(i + b - 1) % n]) & mask;
    ++counts[window];
  }
  return counts;
}

double psi_squared(const BitString& bits, int m) {
  if (m <= 0) return 0.0;
  const auto counts = cyclic_pattern_counts(bits, static_cast<unsigned>(m));
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (std::size_t c : counts) sum += static_cast<double>(c) * static_cast<double>(c);
  return sum * std::ldexp(1.0, m) / n - n;
}

double phi_statistic(const BitString& bits, unsigned b) {
  if (b == 0) return 0.0;
  const auto counts = cyclic_pattern_counts(bits, b);
  const double n = static_cast<double>(bits.size());
  double sum = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    sum += p * std::log(p);
  }
  return sum;
}

unsigned floor_log2(std::size_t n) {
  unsigned r = 0;
  while (n >>= 1) ++r;
  return r;
}

}  // namespace

double frequency_monobit(const BitString& bits) {
  require_nonempty(bits, "frequency");
  long long sum = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) sum += bits[i] ? 1 : -1;
  const double s_obs = std::fabs(static_cast<double>(sum)) / std::sqrt(static_cast<double>(bits.size()));
  return erfc(s_obs / std::sqrt(2.0));
}

double block_frequency(const BitString& bits, std::size_t block_len) {
  require_nonempty(bits, "block frequency");
  if (block_len == 0 || bits.size() < block_len) {
    throw Error(ErrorCode::SequenceTooShort, "block frequency needs at least one full block");
  }
  const std::size_t blocks = bits.size() / block_len;
  double chi2 = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t ones = 0;
    for (std::size_t j = 0; j < block_len; ++j) ones += bits[i * block_len + j];
    const double pi = static_cast<double>(ones) / static_cast<double>(block_len) - 0.5;
    chi2 += pi * pi;
  }
  chi2 *= 4.0 * static_cast<double>(block_len);
  return igamc(static_cast<double>(blocks) / 2.0, chi2 / 2.0);
}

double cumulative_sums(const BitString& bits, bool reverse) {
  require_nonempty(bits, "cumulative sums");
  const long long n = static_cast<long long>(bits.size());
  long long s = 0, z = 0;
  for (long long i = 0; i < n; ++i) {
    const std::size_t idx = static_cast<std::size_t>(reverse ? n - 1 - i : i);
    s += bits[idx] ? 1 : -1;
    z = std::max(z, std::llabs(s));
  }
  // Integer bounds follow the reference implementation (C truncating division).
  const double sqrt_n = std::sqrt(static_cast<double>(n));
  const double zd = static_cast<double>(z);
  double sum1 = 0.0;
  for (long long k = (-n / z + 1) / 4; k <= (n / z - 1) / 4; ++k) {
    sum1 += normal_cdf(static_cast<double>(4 * k + 1) * zd / sqrt_n);
    sum1 -= normal_cdf(static_cast<double>(4 * k - 1) * zd / sqrt_n);
  }
  double sum2 = 0.0;
  for (long long k = (-n / z - 3) / 4; k <= (n / z - 1) / 4; ++k) {
    sum2 += normal_cdf(static_cast<double>(4 * k + 3) * zd / sqrt_n);
    sum2 -= normal_cdf(static_cast<double>(4 * k + 1) * zd / sqrt_n);
  }
  return std::clamp(1.0 - sum1 + sum2, 0.0, 1.0);
}

double runs(const BitString& bits) {
  require_nonempty(bits, "runs");
  const std::size_t n = bits.size();
  std::size_t ones = 0;
  for (std::size_t i = 0; i < n; ++i) ones += bits[i];
  const double nd = static_cast<double>(n);
  const double pi = static_cast<double>(ones) / nd;
  // Frequency prerequisite: a heavily biased input fails outright.
  if (std::fabs(pi - 0.5) >= 2.0 / std::sqrt(nd)) return 0.0;
  std::size_t v_obs = 1;
  for (std::size_t i = 0; i + 1 < n; ++i) v_obs += bits[i] != bits[i + 1];
  const double num = std::fabs(static_cast<double>(v_obs) - 2.0 * nd * pi * (1.0 - pi));
  const double den = 2.0 * std::sqrt(2.0 * nd) * pi * (1.0 - pi);
  return erfc(num / den);
}

double longest_run_of_ones(const BitString& bits) {
  const std::size_t n = bits.size();
  if (n < 128) throw Error(ErrorCode::SequenceTooShort, "longest run needs at least 128 bits");

  std::size_t block_len;
  std::vector<std::size_t> classes;  // V[0..K]
  std::vector<double> pi;
  if (n < 6272) {
    block_len = 8;
    classes = {1, 2, 3, 4};
    pi = {0.21484375, 0.3671875, 0.23046875, 0.1875};
  } else if (n < 750000) {
    block_len = 128;
    classes = {4, 5, 6, 7, 8, 9};
    pi = {0.1174035788, 0.242955959, 0.249363483, 0.17517706, 0.102701071, 0.112398847};
  } else {
    block_len = 10000;
    classes = {10, 11, 12, 13, 14, 15, 16};
    pi = {0.0882, 0.2092, 0.2483, 0.1933, 0.1208, 0.0675, 0.0727};
  }
  const std::size_t k_classes = classes.size();
  const std::size_t blocks = n / block_len;
  std::vector<std::size_t> nu(k_classes, 0);
  for (std::size_t i = 0; i < blocks; ++i) {
    std::size_t run = 0, longest = 0;
    for (std::size_t j = 0; j < block_len; ++j) {
      if (bits[i * block_len + j]) {
        longest = std::max(longest, ++run);
      } else {
        run = 0;
      }
    }
    if (longest <= classes.front()) {
      ++nu.front();
    } else if (longest >= classes.back()) {
      ++nu.back();
    } else {
      ++nu[longest - classes.front()];
    }
  }
  double chi2 = 0.0;
  for (std::size_t i = 0; i < k_classes; ++i) {
    const double expected = static_cast<double>(blocks) * pi[i];
    const double d = static_cast<double>(nu[i]) - expected;
    chi2 += d * d / expected;
  }
  return igamc(static_cast<double>(k_classes - 1) / 2.0, chi2 / 2.0);
}

double approximate_entropy(const BitString& bits, unsigned block_len) {
  require_nonempty(bits, "approximate entropy");
  if (block_len < 1 || block_len > 24) throw Error(ErrorCode::InvalidConfig, "ApEn block length out of range");
  const double apen = phi_statistic(bits, block_len) - phi_statistic(bits, block_len + 1);
  const double chi2 = 2.0 * static_cast<double>(bits.size()) * (std::log(2.0) - apen);
  return igamc(std::ldexp(1.0, static_cast<int>(block_len) - 1), chi2 / 2.0);
}

std::pair<double, double> serial(const BitString& bits, unsigned block_len) {
  require_nonempty(bits, "serial");
  if (block_len < 2 || block_len > 24) throw Error(ErrorCode::InvalidConfig, "serial block length out of range");
  const int m = static_cast<int>(block_len);
  const double psim0 = psi_squared(bits, m);
  const double psim1 = psi_squared(bits, m - 1);
  const double psim2 = psi_squared(bits, m - 2);
  const double del1 = psim0 - psim1;
  const double del2 = psim0 - 2.0 * psim1 + psim2;
  return {igamc(std::ldexp(1.0, m - 2), del1 / 2.0), igamc(std::ldexp(1.0, m - 3), del2 / 2.0)};
}

std::vector<TestResult> nist_subset(const BitString& bits, const NistConfig& cfg) {
  const std::size_t n = bits.size();
  const unsigned lg = floor_log2(std::max<std::size_t>(n, 1));
  std::vector<TestResult> out;

  auto skip = [&](std::string name, std::string why) {
    out.push_back(TestResult{std::move(name), std::nullopt, "", std::move(why)});
  };
  auto done = [&](std::string name, double p, std::string param = "") {
    out.push_back(TestResult{std::move(name), p, std::move(param), ""});
  };

  const bool base_ok = n >= 100;
  const std::string short_msg = "needs at least 100 bits";

  if (base_ok) done("Frequency Monobit", frequency_monobit(bits)); else skip("Frequency Monobit", short_msg);

  const std::size_t block_m = std::min(cfg.block_M, n / 100);
  if (base_ok && block_m >= 20) {
    done("Block Frequency", block_frequency(bits, block_m), "M=" + std::to_string(block_m));
  } else {
    skip("Block Frequency", "needs 20 <= M <= n/100");
  }

  if (base_ok) {
    done("Cusum Forward", cumulative_sums(bits, false));
    done("Cusum Reverse", cumulative_sums(bits, true));
    done("Runs", runs(bits));
  } else {
    skip("Cusum Forward", short_msg);
    skip("Cusum Reverse", short_msg);
    skip("Runs", short_msg);
  }

  if (n >= 128) done("Longest Runs", longest_run_of_ones(bits)); else skip("Longest Runs", "needs at least 128 bits");

  // m < floor(log2 n) - 5
  const int aet_cap = static_cast<int>(lg) - 6;
  const int aet_m = std::min(static_cast<int>(cfg.aet_m), aet_cap);
  if (base_ok && aet_m >= 1) {
    done("Approximate Entropy", approximate_entropy(bits, static_cast<unsigned>(aet_m)),
         "m=" + std::to_string(aet_m));
  } else {
    skip("Approximate Entropy", "needs 1 <= m < floor(log2 n) - 5");
  }

  // 2 < m < floor(log2 n) - 2
  const int serial_cap = static_cast<int>(lg) - 3;
  const int serial_m = std::min(static_cast<int>(cfg.serial_m), serial_cap);
  if (base_ok && serial_m >= 3) {
    const auto [p1, p2] = serial(bits, static_cast<unsigned>(serial_m));
    done("Serial 1", p1, "m=" + std::to_string(serial_m));
    done("Serial 2", p2, "m=" + std::to_string(serial_m));
  } else {
    skip("Serial 1", "needs 2 < m < floor(log2 n) - 2");
    skip("Serial 2", "needs 2 < m < floor(log2 n) - 2");
  }
  return out;
}

ProportionResult proportion(std::size_t passes, std::size_t sample_count, double lambda) {
  if (sample_count == 0) throw Error(ErrorCode::InvalidConfig, "proportion needs N >= 1");
  if (passes > sample_count) throw Error(ErrorCode::InvalidConfig, "passes exceed sample count");
  if (!(lambda > 0.0 && lambda < 1.0)) throw Error(ErrorCode::InvalidConfig, "lambda must be in (0, 1)");
  const double p_hat = 1.0 - lambda;
  const double margin = 3.0 * std::sqrt(lambda * (1.0 - lambda) / static_cast<double>(sample_count));
  ProportionResult r;
  r.proportion = static_cast<double>(passes) / static_cast<double>(sample_count);
  r.lower_bound = p_hat - margin;
  r.upper_bound = p_hat + margin;
  r.pass = r.proportion >= r.lower_bound;
  return r;
}

}  // namespace ecga::nist
