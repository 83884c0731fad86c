#include <gtest/gtest.h>

#include <string>

#include "ecga/cli/file_io.hpp"
#include "ecga/error.hpp"
#include "ecga/material.hpp"
#include "ecga/rng.hpp"

namespace {

using namespace ecga;

std::string hex_of(std::string_view text) {
  const auto d = sha256(std::span(reinterpret_cast<const std::uint8_t*>(text.data()), text.size()));
  return cli::to_hex(d);
}

TEST(Sha256, FipsVectors) {
  EXPECT_EQ(hex_of(""), "e3b0c44298fc1c149afbf4c8996fb92427ae41e4649b934ca495991b7852b855");
  EXPECT_EQ(hex_of("a"), "ca978112ca1bbdcafac231b39a23dc4da786eff8147c4e72b9807785afee48bb");
  EXPECT_EQ(hex_of("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
  EXPECT_EQ(hex_of("abcdbcdecdefdefgefghfghighijhijkijkljklmklmnlmnomnopnopq"),
            "248d6a61d20638b8e5c026930c3e6039a33ce45964ff2167f6ecedd419db06c1");
}

TEST(HashDigest, BitsAreMsbFirst) {
  const HashDigest d(sha256(std::vector<std::uint8_t>{'a'}));
  ASSERT_EQ(d.bits().size(), 256U);
  EXPECT_EQ(d.bits().prefix(8).to_string(), "11001010");  // 0xca
}

TEST(HashImage, PixelsOnly) {
  ImageBuffer img{2, 2, {0, 1, 2, 3}};
  EXPECT_EQ(cli::to_hex(hash_image(img).bytes()),
            "054edec1d0211f624fed0cbca9d4f9400b0e491c43742af2c5b0abebf0c990d8");
  EXPECT_THROW((void)hash_image(ImageBuffer{}), Error);
  EXPECT_THROW((void)hash_image(ImageBuffer{3, 2, {1, 2}}), Error);
}

TEST(IntegerEncoding, MinimalForms) {
  EXPECT_EQ(to_bits(0).to_string(), "0");
  EXPECT_EQ(to_bits(1).to_string(), "1");
  EXPECT_EQ(to_bits(10).to_string(), "1010");
  EXPECT_EQ(to_be_bytes(0), std::vector<std::uint8_t>{0});
  EXPECT_EQ(to_be_bytes(256), (std::vector<std::uint8_t>{1, 0}));
  EXPECT_EQ(cli::to_hex(hash_integer(256).bytes()),
            "47dc540c94ceb704a23875c11273e16bb0b8a87aed84de911f2133568115f254");
}

TEST(Interleave, RoundRobinOverCommonPrefix) {
  const auto h1 = BitString::from_string("111");
  const auto mid = BitString::from_string("00");
  const auto h2 = BitString::from_string("1010");
  EXPECT_EQ(interleave3(h1, mid, h2).to_string(), "101100");
  EXPECT_THROW((void)interleave3(BitString{}, mid, h2), Error);
}

TEST(Xor, InvolutionProperty) {
  Xoshiro256ss rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng.below(300);
    BitString x, z;
    for (std::size_t i = 0; i < n; ++i) {
      x.push_back(static_cast<std::uint8_t>(rng() & 1));
      z.push_back(static_cast<std::uint8_t>(rng() & 1));
    }
    EXPECT_EQ(xor_mask(xor_mask(x, z), z), x);
    EXPECT_EQ(xor_mask(x, x), BitString(std::vector<std::uint8_t>(n, 0)));
  }
  EXPECT_THROW((void)xor_mask(BitString::from_string("01"), BitString::from_string("0")), Error);
}

TEST(Concat, Appends) {
  EXPECT_EQ(concat(BitString::from_string("10"), BitString::from_string("011")).to_string(), "10011");
}

TEST(MaskExpander, CounterModeStream) {
  std::vector<std::uint8_t> seed(32);
  for (std::size_t i = 0; i < 32; ++i) seed[i] = static_cast<std::uint8_t>(i);
  MaskExpander m(seed);
  (void)m.next_bits(250);
  // Bits 250..261 straddle the first and second SHA-256 blocks.
  EXPECT_EQ(m.next_bits(12).to_string(), "010000011000");
  EXPECT_EQ(m.counter(), 2U);

  MaskExpander a(seed), b(seed);
  BitString pieces = a.next_bits(3);
  pieces.append(a.next_bits(500));
  EXPECT_EQ(pieces, b.next_bits(503));
  EXPECT_THROW(MaskExpander(std::vector<std::uint8_t>(31)), Error);
}

}  // namespace
