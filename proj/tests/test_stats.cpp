#include <gtest/gtest.h>

#include <cmath>

#include "ecga/error.hpp"
#include "ecga/rng.hpp"
#include "ecga/stats.hpp"

namespace {

using namespace ecga;
using namespace ecga::stats;

std::size_t brute_force_period(const std::vector<Sequence::Symbol>& s) {
  for (std::size_t t = 1; t < s.size(); ++t) {
    bool ok = true;
    for (std::size_t i = 0; i + t < s.size() && ok; ++i) ok = s[i] == s[i + t];
    if (ok) return t;
  }
  return s.size();
}

TEST(Entropy, Examples) {
  EXPECT_EQ(entropy(Sequence(std::vector<Sequence::Symbol>(50, 7), 8)), 0.0);
  EXPECT_EQ(entropy(Sequence({0, 0, 1, 1}, 1)), 1.0);
  Sequence all(8);
  for (unsigned i = 0; i < 256; ++i) all.push_back(i);
  EXPECT_DOUBLE_EQ(entropy(all), 8.0);
  EXPECT_EQ(entropy(Sequence(8)), 0.0);
}

TEST(Period, Examples) {
  EXPECT_EQ(period(Sequence({5, 5, 5}, 8)), 1U);
  EXPECT_EQ(period(Sequence({1, 2, 3, 1, 2}, 8)), 3U);
  EXPECT_EQ(period(Sequence({9, 8, 7, 6}, 8)), 4U);
  EXPECT_EQ(period(Sequence(8)), 0U);
}

TEST(Period, MatchesBruteForce) {
  Xoshiro256ss rng(1234);
  std::vector<std::size_t> scratch;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t len = 1 + rng.below(64);
    const std::size_t alphabet = 1 + rng.below(3);
    const std::size_t base = 1 + rng.below(len);
    std::vector<Sequence::Symbol> s(len);
    // Repeating a random block makes short periods common.
    for (std::size_t i = 0; i < len; ++i) {
      s[i] = i < base ? static_cast<Sequence::Symbol>(rng.below(alphabet)) : s[i - base];
    }
    if (rng.below(4) == 0) s[rng.below(len)] = static_cast<Sequence::Symbol>(rng.below(alphabet));
    EXPECT_EQ(period(s, scratch), brute_force_period(s));
  }
}

TEST(Hurst, RampIsPersistent) {
  Sequence ramp(16);
  for (unsigned i = 0; i < 4096; ++i) ramp.push_back(i);
  EXPECT_GT(hurst_rs(ramp), 0.9);
}

TEST(Hurst, UniformNoiseNearHalf) {
  Xoshiro256ss rng(2024);
  Sequence s(8);
  for (int i = 0; i < 100000; ++i) s.push_back(static_cast<Sequence::Symbol>(rng.below(256)));
  const double h = hurst_rs(s);
  EXPECT_GE(h, 0.45);
  EXPECT_LE(h, 0.58);
}

TEST(Hurst, Errors) {
  std::vector<double> short_series(63, 1.0);
  EXPECT_THROW((void)hurst_rs_detail(short_series), Error);
  std::vector<double> flat(1000, 3.0);
  try {
    (void)hurst_rs_detail(flat);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::DegenerateSeries);
  }
}

TEST(Hurst, GridIsLogSpaced) {
  std::vector<double> x(4096);
  Xoshiro256ss rng(6);
  for (auto& v : x) v = static_cast<double>(rng.below(1000));
  const auto est = hurst_rs_detail(x);
  ASSERT_GE(est.points.size(), 2U);
  EXPECT_EQ(est.points.front().window, 16U);
  EXPECT_EQ(est.points.back().window, 1024U);
  for (std::size_t i = 1; i < est.points.size(); ++i) EXPECT_GT(est.points[i].window, est.points[i - 1].window);
}

TEST(Pearson, Examples) {
  Xoshiro256ss rng(3);
  Sequence a(8), b(8);
  for (int i = 0; i < 500; ++i) {
    const auto v = static_cast<Sequence::Symbol>(rng.below(256));
    a.push_back(v);
    b.push_back(255 - v);
  }
  EXPECT_DOUBLE_EQ(pearson(a, a), 1.0);
  EXPECT_DOUBLE_EQ(pearson(a, b), -1.0);
  EXPECT_THROW((void)pearson(a, Sequence({1, 2}, 8)), Error);
  EXPECT_THROW((void)pearson(a, Sequence(std::vector<Sequence::Symbol>(500, 4), 8)), Error);
}

TEST(Nbcr, Examples) {
  const Sequence a({0x00, 0xFF, 0xA5}, 8);
  const Sequence c({0xFF, 0x00, 0x5A}, 8);
  EXPECT_EQ(nbcr(a, a), 0.0);
  EXPECT_EQ(nbcr(a, c), 100.0);
  EXPECT_NEAR(nbcr(Sequence({0x0F}, 8), Sequence({0x00}, 8)), 50.0, 1e-12);
  EXPECT_THROW((void)nbcr(a, Sequence({1}, 8)), Error);
}

}  // namespace
