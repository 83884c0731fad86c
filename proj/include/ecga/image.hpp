#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

namespace ecga {

/// 8-bit grayscale image, row-major: pixel (row, col) is pixels[row * width + col].
struct ImageBuffer {
  std::size_t width = 0;   // s
  std::size_t height = 0;  // r
  std::vector<std::uint8_t> pixels;

  [[nodiscard]] bool empty() const noexcept { return width == 0 || height == 0; }
  friend bool operator==(const ImageBuffer&, const ImageBuffer&) = default;
};

/// Parses PGM P5 (binary) or P2 (ASCII) with maxval 255. '#' comments in the
/// header (and, for P2, between samples) are skipped.
/// Errors: UnsupportedFormat (magic), UnsupportedDepth (maxval != 255),
/// CorruptImage (bad header, missing or out-of-range samples).
[[nodiscard]] ImageBuffer parse_pgm(std::span<const std::uint8_t> data);
[[nodiscard]] ImageBuffer read_pgm(const std::filesystem::path& path);

/// Binary P5 encoding.
[[nodiscard]] std::vector<std::uint8_t> encode_pgm_p5(const ImageBuffer& image);
/// ASCII P2 encoding, one row per line.
[[nodiscard]] std::vector<std::uint8_t> encode_pgm_p2(const ImageBuffer& image);

}  // namespace ecga
