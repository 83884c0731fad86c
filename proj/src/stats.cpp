#include "ecga/stats.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

#include "ecga/error.hpp"

namespace ecga::stats {

double entropy_from_counts(std::span<const std::size_t> counts, std::size_t total) {
  if (total == 0) return 0.0;
  const double n = static_cast<double>(total);
  double h = 0.0;
  for (std::size_t c : counts) {
    if (c == 0) continue;
    const double p = static_cast<double>(c) / n;
    h -= p * std::log2(p);
  }
  return h;
}

double entropy(const Sequence& s) { return entropy_from_counts(s.histogram(), s.size()); }

std::size_t period(std::span<const Sequence::Symbol> s, std::vector<std::size_t>& pi) {
  const std::size_t n = s.size();
  if (n == 0) return 0;
  pi.assign(n, 0);
  for (std::size_t i = 1; i < n; ++i) {
    std::size_t k = pi[i - 1];
    while (k > 0 && s[i] != s[k]) k = pi[k - 1];
    if (s[i] == s[k]) ++k;
    pi[i] = k;
  }
  return n - pi[n - 1];
}

std::size_t period(std::span<const Sequence::Symbol> s) {
  std::vector<std::size_t> scratch;
  return period(s, scratch);
}

std::vector<double> as_doubles(const Sequence& s) { return {s.symbols().begin(), s.symbols().end()}; }

namespace {

std::vector<std::size_t> window_grid(std::size_t lo, std::size_t hi, std::size_t points) {
  std::vector<std::size_t> grid;
  if (points < 2 || hi <= lo) {
    grid.push_back(lo);
    if (hi > lo) grid.push_back(hi);
    return grid;
  }
  const double a = std::log(static_cast<double>(lo));
  const double b = std::log(static_cast<double>(hi));
  for (std::size_t i = 0; i < points; ++i) {
    const double t = static_cast<double>(i) / static_cast<double>(points - 1);
    const auto n = static_cast<std::size_t>(std::llround(std::exp(a + t * (b - a))));
    if (grid.empty() || grid.back() != n) grid.push_back(n);
  }
  return grid;
}

// Mean R/S over the non-degenerate blocks of size n; blocks_used = 0 when all
// blocks have zero variance.
RescaledRangePoint rescaled_range(std::span<const double> x, std::size_t n) {
  RescaledRangePoint pt{n, 0.0, 0};
  const std::size_t blocks = x.size() / n;
  double sum_rs = 0.0;
  for (std::size_t blk = 0; blk < blocks; ++blk) {
    const auto seg = x.subspan(blk * n, n);
    const double mean = std::accumulate(seg.begin(), seg.end(), 0.0) / static_cast<double>(n);
    double z = 0.0, zmin = 0.0, zmax = 0.0, ss = 0.0;
    for (double v : seg) {
      const double d = v - mean;
      z += d;
      zmin = std::min(zmin, z);
      zmax = std::max(zmax, z);
      ss += d * d;
    }
    const double sd = std::sqrt(ss / static_cast<double>(n));
    if (sd <= 0.0) continue;
    sum_rs += (zmax - zmin) / sd;
    ++pt.blocks_used;
  }
  if (pt.blocks_used > 0) pt.mean_rs = sum_rs / static_cast<double>(pt.blocks_used);
  return pt;
}

}  // namespace

HurstEstimate hurst_rs_detail(std::span<const double> series, const HurstOptions& opts) {
  if (series.size() < 64) throw Error(ErrorCode::SequenceTooShort, "Hurst estimation needs >= 64 samples");
  const std::size_t lo = std::max<std::size_t>(opts.min_window, 2);
  const std::size_t hi = std::max(lo, series.size() / 4);

  HurstEstimate est;
  for (std::size_t n : window_grid(lo, hi, opts.grid_points)) {
    RescaledRangePoint pt = rescaled_range(series, n);
    if (pt.blocks_used > 0 && pt.mean_rs > 0.0) est.points.push_back(pt);
  }
  if (est.points.size() < 2) {
    throw Error(ErrorCode::DegenerateSeries, "no variance at enough window sizes for R/S regression");
  }

  double sx = 0.0, sy = 0.0;
  for (const auto& pt : est.points) {
    sx += std::log(static_cast<double>(pt.window));
    sy += std::log(pt.mean_rs);
  }
  const double k = static_cast<double>(est.points.size());
  const double mx = sx / k, my = sy / k;
  double sxy = 0.0, sxx = 0.0;
  for (const auto& pt : est.points) {
    const double dx = std::log(static_cast<double>(pt.window)) - mx;
    sxy += dx * (std::log(pt.mean_rs) - my);
    sxx += dx * dx;
  }
  est.exponent = sxy / sxx;
  return est;
}

double hurst_rs(const Sequence& s, const HurstOptions& opts) {
  const auto x = as_doubles(s);
  return hurst_rs_detail(x, opts).exponent;
}

double pearson(std::span<const double> a, std::span<const double> b) {
  if (a.size() != b.size()) throw Error(ErrorCode::LengthMismatch, "pearson needs equal lengths");
  if (a.empty()) throw Error(ErrorCode::ConstantSequence, "pearson of empty sequences");
  const double n = static_cast<double>(a.size());
  const double ma = std::accumulate(a.begin(), a.end(), 0.0) / n;
  const double mb = std::accumulate(b.begin(), b.end(), 0.0) / n;
  double sab = 0.0, saa = 0.0, sbb = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const double da = a[i] - ma, db = b[i] - mb;
    sab += da * db;
    saa += da * da;
    sbb += db * db;
  }
  if (saa == 0.0 || sbb == 0.0) throw Error(ErrorCode::ConstantSequence, "pearson of a constant sequence");
  return std::clamp(sab / (std::sqrt(saa) * std::sqrt(sbb)), -1.0, 1.0);
}

double pearson(const Sequence& a, const Sequence& b) {
  const auto x = as_doubles(a), y = as_doubles(b);
  return pearson(x, y);
}

double nbcr(const Sequence& a, const Sequence& b) {
  if (a.size() != b.size() || a.bits_per_symbol() != b.bits_per_symbol()) {
    throw Error(ErrorCode::LengthMismatch, "nbcr needs sequences of equal length and width");
  }
  if (a.empty()) return 0.0;
  std::size_t distance = 0;
  for (std::size_t i = 0; i < a.size(); ++i) distance += static_cast<std::size_t>(std::popcount(a[i] ^ b[i]));
  return 100.0 * static_cast<double>(distance) /
         (static_cast<double>(a.bits_per_symbol()) * static_cast<double>(a.size()));
}

}  // namespace ecga::stats
