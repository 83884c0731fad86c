#pragma once

// Per-point binary material: SHA-256 digests of the image and curve
// parameters, minimal binary encodings of coordinates, three-way bit
// interleaving, concatenation and the XOR mask stream.

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ecga/bitstring.hpp"
#include "ecga/field_ec.hpp"
#include "ecga/image.hpp"

namespace ecga {

using Sha256Bytes = std::array<std::uint8_t, 32>;

/// FIPS 180-4 SHA-256.
[[nodiscard]] Sha256Bytes sha256(std::span<const std::uint8_t> data);

class HashDigest {
 public:
  explicit HashDigest(const Sha256Bytes& bytes);

  [[nodiscard]] const Sha256Bytes& bytes() const noexcept { return bytes_; }
  /// Always 256 bits, MSB of byte 0 first.
  [[nodiscard]] const BitString& bits() const noexcept { return bits_; }

  friend bool operator==(const HashDigest& lhs, const HashDigest& rhs) {
    return lhs.bytes_ == rhs.bytes_;
  }

 private:
  Sha256Bytes bytes_;
  BitString bits_;
};

/// MSB-first minimal binary form of x; to_bits(0) is the single bit "0".
[[nodiscard]] BitString to_bits(const ec::BigInt& x);

/// Minimal big-endian byte encoding; 0 encodes as one 0x00 byte.
[[nodiscard]] std::vector<std::uint8_t> to_be_bytes(const ec::BigInt& x);

/// SHA-256 over the raw row-major pixel bytes; container headers play no part.
/// Throws EmptyImage for a zero-area image.
[[nodiscard]] HashDigest hash_image(const ImageBuffer& image);

/// SHA-256 over to_be_bytes(x).
[[nodiscard]] HashDigest hash_integer(const ec::BigInt& x);

/// h1[0], mid[0], h2[0], h1[1], mid[1], h2[1], ... over the common prefix
/// length min(|h1|, |mid|, |h2|). Throws EmptyBitString if any input is empty.
[[nodiscard]] BitString interleave3(const BitString& h1, const BitString& mid, const BitString& h2);

[[nodiscard]] BitString concat(const BitString& x, const BitString& y);

/// Bitwise XOR; throws LengthMismatch unless |x| = |z|.
[[nodiscard]] BitString xor_mask(const BitString& x, const BitString& z);

/// Counter-mode expansion of a seed into an unbounded bit stream:
/// block c is SHA-256(seed || c as 8-byte big-endian), c = 0, 1, 2, ...
/// Bits are handed out MSB-first and consumed continuously across calls.
/// Single-owner mutable state; not safe for concurrent use.
class MaskExpander {
 public:
  /// Throws InvalidConfig if the seed is shorter than 32 bytes.
  explicit MaskExpander(std::vector<std::uint8_t> seed);

  [[nodiscard]] BitString next_bits(std::size_t n);
  [[nodiscard]] std::uint64_t counter() const noexcept { return counter_; }

 private:
  void refill();

  std::vector<std::uint8_t> seed_;
  std::uint64_t counter_ = 0;
  Sha256Bytes block_{};
  std::size_t block_pos_ = 256;  // bits consumed from block_
};

/// Free-function spelling of MaskExpander::next_bits.
[[nodiscard]] inline BitString mask_bits(MaskExpander& expander, std::size_t n) {
  return expander.next_bits(n);
}

}  // namespace ecga
