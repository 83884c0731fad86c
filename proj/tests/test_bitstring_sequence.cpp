#include <gtest/gtest.h>

#include "ecga/bitstring.hpp"
#include "ecga/error.hpp"
#include "ecga/sequence.hpp"

namespace {

using namespace ecga;

TEST(BitString, BytesRoundTrip) {
  const std::vector<std::uint8_t> bytes{0xA5, 0x01};
  const auto b = BitString::from_bytes(bytes);
  EXPECT_EQ(b.to_string(), "1010010100000001");
  EXPECT_EQ(b.to_bytes(), bytes);
  EXPECT_EQ(BitString::from_string("1").to_bytes(), std::vector<std::uint8_t>{0x80});
  EXPECT_EQ(b.prefix(3).to_string(), "101");
  EXPECT_EQ(b.prefix(99).size(), 16U);
  EXPECT_THROW((void)BitString::from_string("012"), Error);
  EXPECT_THROW(BitString(std::vector<std::uint8_t>{2}), Error);
}

TEST(Sequence, RangeAndEncoding) {
  Sequence s({1, 2, 3}, 2);
  EXPECT_EQ(s.alphabet_size(), 4U);
  EXPECT_EQ(s.to_bits().to_string(), "011011");
  EXPECT_EQ(s.histogram(), (std::vector<std::size_t>{0, 1, 1, 1}));
  EXPECT_THROW(Sequence({4}, 2), Error);
  EXPECT_THROW(s.push_back(4), Error);
  EXPECT_THROW(Sequence(17), Error);
  EXPECT_THROW(s.append(Sequence(3)), Error);

  const std::vector<std::uint8_t> bytes{0, 255, 7};
  const auto bs = Sequence::from_bytes(bytes);
  EXPECT_EQ(bs.bits_per_symbol(), 8U);
  EXPECT_EQ(bs.to_bytes(), bytes);
  EXPECT_THROW((void)Sequence(9).to_bytes(), Error);
}

TEST(Sequence, Truncate) {
  Sequence s({1, 2, 3, 0}, 2);
  s.truncate(2);
  EXPECT_EQ(s, Sequence({1, 2}, 2));
  s.truncate(5);
  EXPECT_EQ(s.size(), 2U);
}

}  // namespace
