#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <span>

namespace ecga {

/// xoshiro256** 1.0 (Blackman & Vigna), state seeded from a 64-bit value by
/// four successive splitmix64 outputs. All derived draws (bounded integers,
/// shuffles) are implemented here so that a seed yields the same stream on
/// every platform and standard library.
class Xoshiro256ss {
 public:
  using result_type = std::uint64_t;

  explicit Xoshiro256ss(std::uint64_t seed) noexcept;

  static constexpr result_type min() noexcept { return 0; }
  static constexpr result_type max() noexcept { return std::numeric_limits<result_type>::max(); }

  result_type operator()() noexcept;

  /// Uniform integer in [0, bound) by rejection on the top of the 64-bit range.
  /// bound must be >= 1.
  std::uint64_t below(std::uint64_t bound) noexcept;

  /// Fisher-Yates, drawing j = below(i + 1) for i = size-1 down to 1.
  template <typename T>
  void shuffle(std::span<T> items) noexcept {
    for (std::size_t i = items.size(); i > 1; --i) {
      const std::size_t j = static_cast<std::size_t>(below(i));
      using std::swap;
      swap(items[i - 1], items[j]);
    }
  }

  [[nodiscard]] const std::array<std::uint64_t, 4>& state() const noexcept { return s_; }

 private:
  std::array<std::uint64_t, 4> s_{};
};

/// One step of splitmix64 (Steele, Lea & Flood); advances `state`.
std::uint64_t splitmix64(std::uint64_t& state) noexcept;

}  // namespace ecga
