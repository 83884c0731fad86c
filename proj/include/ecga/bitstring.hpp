#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecga {

/// Ordered sequence of bits, stored one bit per byte (each 0 or 1).
class BitString {
 public:
  BitString() = default;
  /// Copies `bits`; every entry must be 0 or 1.
  explicit BitString(std::vector<std::uint8_t> bits);

  /// Parses a string of '0'/'1' characters.
  [[nodiscard]] static BitString from_string(std::string_view text);
  /// MSB-first expansion of bytes: 8 bits per byte.
  [[nodiscard]] static BitString from_bytes(std::span<const std::uint8_t> bytes);

  [[nodiscard]] std::size_t size() const noexcept { return bits_.size(); }
  [[nodiscard]] bool empty() const noexcept { return bits_.empty(); }
  [[nodiscard]] std::uint8_t operator[](std::size_t i) const noexcept { return bits_[i]; }
  [[nodiscard]] std::span<const std::uint8_t> bits() const noexcept { return bits_; }

  /// First n bits (n clamped to size()).
  [[nodiscard]] BitString prefix(std::size_t n) const;
  [[nodiscard]] std::string to_string() const;
  /// Packs MSB-first; a trailing partial byte is zero-padded on the right.
  [[nodiscard]] std::vector<std::uint8_t> to_bytes() const;

  void push_back(std::uint8_t bit) { bits_.push_back(bit & 1U); }
  void append(const BitString& other);
  void reserve(std::size_t n) { bits_.reserve(n); }

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

}  // namespace ecga
