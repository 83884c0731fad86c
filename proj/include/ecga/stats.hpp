#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "ecga/sequence.hpp"

namespace ecga::stats {

/// Shannon entropy in bits of the empirical symbol distribution, with
/// 0 log 0 = 0. Zero for an empty sequence.
[[nodiscard]] double entropy(const Sequence& s);
/// Same, from a histogram whose counts sum to `total`.
[[nodiscard]] double entropy_from_counts(std::span<const std::size_t> counts, std::size_t total);

/// Smallest T >= 1 with s[i] = s[i+T] wherever both exist; equals
/// |s| - (longest proper border) via the prefix function, O(|s|).
[[nodiscard]] std::size_t period(std::span<const Sequence::Symbol> s);
[[nodiscard]] inline std::size_t period(const Sequence& s) { return period(s.symbols()); }

/// Same as period() but reuses `scratch` for the prefix-function table.
[[nodiscard]] std::size_t period(std::span<const Sequence::Symbol> s, std::vector<std::size_t>& scratch);

struct HurstOptions {
  std::size_t min_window = 16;
  std::size_t grid_points = 12;
};

/// One point of the R/S regression.
struct RescaledRangePoint {
  std::size_t window = 0;
  double mean_rs = 0.0;
  std::size_t blocks_used = 0;
};

struct HurstEstimate {
  double exponent = 0.0;
  std::vector<RescaledRangePoint> points;
};

/// Rescaled-range estimate of the Hurst exponent: window sizes on a
/// log-spaced grid over [min_window, |s|/4]; per window n the sequence is cut
/// into floor(|s|/n) blocks and R/S (range of mean-adjusted partial sums over
/// population standard deviation) is averaged over blocks with S > 0. The
/// exponent is the least-squares slope of ln(R/S) on ln(n).
/// Throws SequenceTooShort for |s| < 64 and DegenerateSeries when fewer than
/// two window sizes have a non-degenerate block.
[[nodiscard]] HurstEstimate hurst_rs_detail(std::span<const double> series, const HurstOptions& opts = {});
[[nodiscard]] double hurst_rs(const Sequence& s, const HurstOptions& opts = {});

/// Pearson product-moment correlation. Throws LengthMismatch or
/// ConstantSequence.
[[nodiscard]] double pearson(std::span<const double> a, std::span<const double> b);
[[nodiscard]] double pearson(const Sequence& a, const Sequence& b);

/// Number-of-bit-change rate, in percent: 100 * Hamming distance between the
/// m-bit encodings over m * |a|. Throws LengthMismatch (length or m differ).
[[nodiscard]] double nbcr(const Sequence& a, const Sequence& b);

[[nodiscard]] std::vector<double> as_doubles(const Sequence& s);

}  // namespace ecga::stats
