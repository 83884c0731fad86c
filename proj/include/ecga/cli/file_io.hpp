#pragma once

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ecga::cli {

/// Whole file as bytes; IoError if it cannot be opened or read.
[[nodiscard]] std::vector<std::uint8_t> read_file(const std::filesystem::path& path);

/// Writes to a sibling temporary file and renames it over `path`, so readers
/// never observe a partial file.
void write_file_atomic(const std::filesystem::path& path, std::span<const std::uint8_t> data);
void write_file_atomic(const std::filesystem::path& path, std::string_view text);

[[nodiscard]] std::string to_hex(std::span<const std::uint8_t> bytes);
/// Even-length hex, either case; InvalidConfig otherwise.
[[nodiscard]] std::vector<std::uint8_t> from_hex(std::string_view hex);

/// Lower-case hex SHA-256 of `data`.
[[nodiscard]] std::string sha256_hex(std::span<const std::uint8_t> data);

}  // namespace ecga::cli
