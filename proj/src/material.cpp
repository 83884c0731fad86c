#include "ecga/material.hpp"

#include <algorithm>

#include <openssl/evp.h>

#include "ecga/error.hpp"

namespace ecga {

Sha256Bytes sha256(std::span<const std::uint8_t> data) {
  Sha256Bytes out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(), nullptr) != 1 ||
      len != out.size()) {
    throw Error(ErrorCode::IoError, "SHA-256 computation failed");
  }
  return out;
}

HashDigest::HashDigest(const Sha256Bytes& bytes)
    : bytes_(bytes), bits_(BitString::from_bytes(bytes)) {}

BitString to_bits(const ec::BigInt& x) {
  if (x < 0) throw Error(ErrorCode::InvalidConfig, "to_bits needs a non-negative integer");
  if (x == 0) return BitString::from_string("0");
  const std::size_t u = ec::bit_length(x);
  std::vector<std::uint8_t> bits(u);
  for (std::size_t i = 0; i < u; ++i) {
    bits[i] = boost::multiprecision::bit_test(x, static_cast<unsigned>(u - 1 - i)) ? 1 : 0;
  }
  return BitString(std::move(bits));
}

std::vector<std::uint8_t> to_be_bytes(const ec::BigInt& x) {
  if (x < 0) throw Error(ErrorCode::InvalidConfig, "to_be_bytes needs a non-negative integer");
  if (x == 0) return {0};
  std::vector<std::uint8_t> out;
  boost::multiprecision::export_bits(x, std::back_inserter(out), 8, true);
  return out;
}

HashDigest hash_image(const ImageBuffer& image) {
  if (image.empty() || image.pixels.empty()) throw Error(ErrorCode::EmptyImage, "image has no pixels");
  if (image.pixels.size() != image.width * image.height) {
    throw Error(ErrorCode::CorruptImage, "pixel count does not match width*height");
  }
  return HashDigest(sha256(image.pixels));
}

HashDigest hash_integer(const ec::BigInt& x) { return HashDigest(sha256(to_be_bytes(x))); }

BitString interleave3(const BitString& h1, const BitString& mid, const BitString& h2) {
  if (h1.empty() || mid.empty() || h2.empty()) {
    throw Error(ErrorCode::EmptyBitString, "interleave3 inputs must be non-empty");
  }
  const std::size_t len = std::min({h1.size(), mid.size(), h2.size()});
  BitString out;
  out.reserve(3 * len);
  for (std::size_t i = 0; i < len; ++i) {
    out.push_back(h1[i]);
    out.push_back(mid[i]);
    out.push_back(h2[i]);
  }
  return out;
}

BitString concat(const BitString& x, const BitString& y) {
  BitString out;
  out.reserve(x.size() + y.size());
  out.append(x);
  out.append(y);
  return out;
}

BitString xor_mask(const BitString& x, const BitString& z) {
  if (x.size() != z.size()) {
    throw Error(ErrorCode::LengthMismatch, "xor_mask lengths " + std::to_string(x.size()) + " and " +
                                               std::to_string(z.size()));
  }
  std::vector<std::uint8_t> bits(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) bits[i] = x[i] ^ z[i];
  return BitString(std::move(bits));
}

MaskExpander::MaskExpander(std::vector<std::uint8_t> seed) : seed_(std::move(seed)) {
  if (seed_.size() < 32) throw Error(ErrorCode::InvalidConfig, "mask seed must be at least 32 bytes");
}

void MaskExpander::refill() {
  std::vector<std::uint8_t> msg(seed_);
  for (int shift = 56; shift >= 0; shift -= 8) {
    msg.push_back(static_cast<std::uint8_t>(counter_ >> shift));
  }
  block_ = sha256(msg);
  ++counter_;
  block_pos_ = 0;
}

BitString MaskExpander::next_bits(std::size_t n) {
  BitString out;
  out.reserve(n);
  while (out.size() < n) {
    if (block_pos_ == 256) refill();
    const std::uint8_t byte = block_[block_pos_ / 8];
    out.push_back((byte >> (7 - block_pos_ % 8)) & 1U);
    ++block_pos_;
  }
  return out;
}

}  // namespace ecga
