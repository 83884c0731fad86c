#pragma once

// In-process subset of NIST SP 800-22 rev. 1a: Frequency (Monobit), Block
// Frequency, Cumulative Sums (forward/reverse), Runs, Longest Run of Ones,
// Approximate Entropy and Serial. The rest of the battery is meant to be run
// by the reference STS on bits exported with `ecga export-bits`.

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ecga/bitstring.hpp"

namespace ecga::nist {

struct NistConfig {
  double lambda = 0.01;       // significance level
  std::size_t block_M = 128;  // block frequency block length
  unsigned aet_m = 10;        // approximate entropy block length
  unsigned serial_m = 16;     // serial block length
};

struct TestResult {
  std::string name;
  std::optional<double> p_value;  // empty when skipped
  std::string parameter;          // effective block length, e.g. "M=128", or ""
  std::string skip_reason;

  [[nodiscard]] bool skipped() const noexcept { return !p_value.has_value(); }
  [[nodiscard]] bool passed(double lambda) const noexcept { return p_value && *p_value >= lambda; }
};

// Single tests. They compute the statistic for whatever length they are
// given (the published worked examples use 10-bit inputs); the size minima
// are applied by nist_subset.
[[nodiscard]] double frequency_monobit(const BitString& bits);
[[nodiscard]] double block_frequency(const BitString& bits, std::size_t block_len);
[[nodiscard]] double cumulative_sums(const BitString& bits, bool reverse);
[[nodiscard]] double runs(const BitString& bits);
/// Block length (8, 128 or 10^4) is chosen from |bits| as SP 800-22 tabulates;
/// needs |bits| >= 128.
[[nodiscard]] double longest_run_of_ones(const BitString& bits);
[[nodiscard]] double approximate_entropy(const BitString& bits, unsigned block_len);
/// {P-value 1, P-value 2}.
[[nodiscard]] std::pair<double, double> serial(const BitString& bits, unsigned block_len);

/// Runs every implemented test in a fixed order, shrinking block parameters
/// to fit short inputs and marking a test skipped when its minimum length is
/// not met.
[[nodiscard]] std::vector<TestResult> nist_subset(const BitString& bits, const NistConfig& cfg = {});

struct ProportionResult {
  double proportion = 0.0;
  double lower_bound = 0.0;
  double upper_bound = 0.0;
  bool pass = false;  // proportion >= lower_bound
};

/// Acceptance band (1 - lambda) +/- 3 sqrt(lambda (1 - lambda) / N) on the
/// fraction of N sequences that passed.
[[nodiscard]] ProportionResult proportion(std::size_t passes, std::size_t sample_count, double lambda);

}  // namespace ecga::nist
