#include <gtest/gtest.h>

#include <string>

#include "ecga/error.hpp"
#include "ecga/image.hpp"
#include "ecga/material.hpp"

namespace {

using namespace ecga;

std::vector<std::uint8_t> bytes(const std::string& s) { return {s.begin(), s.end()}; }

ErrorCode code_of(const std::string& text) {
  try {
    (void)parse_pgm(bytes(text));
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "parse succeeded";
  return ErrorCode::IoError;
}

TEST(Pgm, BinaryTwoByTwo) {
  std::string text = "P5\n2 2\n255\n";
  text += std::string{'\0', '\1', '\2', '\3'};
  const auto img = parse_pgm(bytes(text));
  EXPECT_EQ(img, (ImageBuffer{2, 2, {0, 1, 2, 3}}));
}

TEST(Pgm, AsciiWithComments) {
  const auto img = parse_pgm(bytes("P2\n# a comment\n3 1 # trailing\n255\n0 128\n# mid\n255\n"));
  EXPECT_EQ(img, (ImageBuffer{3, 1, {0, 128, 255}}));
}

TEST(Pgm, EncodingsAgree) {
  const ImageBuffer img{3, 2, {9, 8, 7, 200, 100, 0}};
  const auto p5 = parse_pgm(encode_pgm_p5(img));
  const auto p2 = parse_pgm(encode_pgm_p2(img));
  EXPECT_EQ(p5, img);
  EXPECT_EQ(p2, img);
  EXPECT_EQ(hash_image(p5), hash_image(p2));
}

TEST(Pgm, Errors) {
  EXPECT_EQ(code_of("P6\n1 1\n255\nx"), ErrorCode::UnsupportedFormat);
  EXPECT_EQ(code_of("P5\n1 1\n65535\nxx"), ErrorCode::UnsupportedDepth);
  EXPECT_EQ(code_of("P5\n2 2\n255\nabc"), ErrorCode::CorruptImage);
  EXPECT_EQ(code_of("P2\n2 1\n255\n1"), ErrorCode::CorruptImage);
  EXPECT_EQ(code_of("P2\n1 1\n255\n256"), ErrorCode::CorruptImage);
  EXPECT_EQ(code_of("P5\n2"), ErrorCode::CorruptImage);
  EXPECT_EQ(code_of("P5\n0 2\n255\n"), ErrorCode::CorruptImage);
}

TEST(Pgm, MissingFile) { EXPECT_THROW((void)read_pgm("/nonexistent/dir/x.pgm"), Error); }

}  // namespace
