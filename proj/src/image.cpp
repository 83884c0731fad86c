#include "ecga/image.hpp"

#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <string>

#include "ecga/error.hpp"

namespace ecga {

namespace {

class PgmCursor {
 public:
  explicit PgmCursor(std::span<const std::uint8_t> data) : data_(data) {}

  void skip_space_and_comments() {
    while (pos_ < data_.size()) {
      const auto c = data_[pos_];
      if (c == '#') {
        while (pos_ < data_.size() && data_[pos_] != '\n' && data_[pos_] != '\r') ++pos_;
      } else if (std::isspace(c)) {
        ++pos_;
      } else {
        break;
      }
    }
  }

  // Returns false at end of data.
  bool read_uint(std::size_t& out) {
    skip_space_and_comments();
    if (pos_ >= data_.size()) return false;
    if (!std::isdigit(data_[pos_])) throw Error(ErrorCode::CorruptImage, "expected a decimal number");
    std::size_t v = 0;
    while (pos_ < data_.size() && std::isdigit(data_[pos_])) {
      if (v > std::numeric_limits<std::size_t>::max() / 10) {
        throw Error(ErrorCode::CorruptImage, "number too large");
      }
      v = v * 10 + (data_[pos_] - '0');
      ++pos_;
    }
    out = v;
    return true;
  }

  std::size_t pos() const noexcept { return pos_; }
  void advance() noexcept { ++pos_; }
  bool at_end() const noexcept { return pos_ >= data_.size(); }
  std::uint8_t peek() const noexcept { return data_[pos_]; }

 private:
  std::span<const std::uint8_t> data_;
  std::size_t pos_ = 0;
};

}  // namespace

ImageBuffer parse_pgm(std::span<const std::uint8_t> data) {
  if (data.size() < 2 || data[0] != 'P' || (data[1] != '5' && data[1] != '2')) {
    throw Error(ErrorCode::UnsupportedFormat, "not a PGM P5/P2 stream");
  }
  const bool binary = data[1] == '5';
  PgmCursor cur(data.subspan(2));

  std::size_t width = 0, height = 0, maxval = 0;
  if (!cur.read_uint(width) || !cur.read_uint(height) || !cur.read_uint(maxval)) {
    throw Error(ErrorCode::CorruptImage, "truncated PGM header");
  }
  if (maxval != 255) {
    throw Error(ErrorCode::UnsupportedDepth, "maxval " + std::to_string(maxval) + " (need 255)");
  }
  if (width == 0 || height == 0) throw Error(ErrorCode::CorruptImage, "zero image dimension");
  if (height > std::numeric_limits<std::size_t>::max() / width) {
    throw Error(ErrorCode::CorruptImage, "image dimensions overflow");
  }

  ImageBuffer img;
  img.width = width;
  img.height = height;
  const std::size_t count = width * height;

  if (binary) {
    // Exactly one whitespace byte separates maxval from the raster.
    if (cur.at_end() || !std::isspace(cur.peek())) {
      throw Error(ErrorCode::CorruptImage, "missing separator before raster");
    }
    cur.advance();
    const std::size_t start = 2 + cur.pos();
    if (data.size() - start < count) throw Error(ErrorCode::CorruptImage, "truncated raster");
    img.pixels.assign(data.begin() + static_cast<std::ptrdiff_t>(start),
                      data.begin() + static_cast<std::ptrdiff_t>(start + count));
  } else {
    img.pixels.reserve(count);
    for (std::size_t i = 0; i < count; ++i) {
      std::size_t v = 0;
      if (!cur.read_uint(v)) throw Error(ErrorCode::CorruptImage, "truncated ASCII raster");
      if (v > 255) throw Error(ErrorCode::CorruptImage, "sample exceeds maxval");
      img.pixels.push_back(static_cast<std::uint8_t>(v));
    }
  }
  return img;
}

ImageBuffer read_pgm(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::IoError, "cannot open image " + path.string());
  std::vector<std::uint8_t> data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  return parse_pgm(data);
}

std::vector<std::uint8_t> encode_pgm_p5(const ImageBuffer& image) {
  const std::string header =
      "P5\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  std::vector<std::uint8_t> out(header.begin(), header.end());
  out.insert(out.end(), image.pixels.begin(), image.pixels.end());
  return out;
}

std::vector<std::uint8_t> encode_pgm_p2(const ImageBuffer& image) {
  std::string text =
      "P2\n" + std::to_string(image.width) + " " + std::to_string(image.height) + "\n255\n";
  for (std::size_t r = 0; r < image.height; ++r) {
    for (std::size_t c = 0; c < image.width; ++c) {
      if (c != 0) text += ' ';
      text += std::to_string(image.pixels[r * image.width + c]);
    }
    text += '\n';
  }
  return {text.begin(), text.end()};
}

}  // namespace ecga
