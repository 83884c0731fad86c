#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "ecga/field_ec.hpp"

namespace ecga::ec {

/// Parses a non-negative integer written in decimal or, with a 0x/0X prefix,
/// hexadecimal. Surrounding whitespace is ignored.
[[nodiscard]] BigInt parse_bigint(std::string_view text);

/// Built-in curves: "p256" and "p521" (the NIST prime curves).
[[nodiscard]] CurveParams curve_by_name(std::string_view name);
[[nodiscard]] std::vector<std::string> builtin_curve_names();

/// Loads a custom curve from a JSON file:
///   {"name": "...", "p": "...", "a": "...", "b": "...", "gx": "...", "gy": "..."}
/// Integer fields are strings, decimal or 0x-prefixed hex.
[[nodiscard]] CurveParams load_curve_file(const std::filesystem::path& path);

/// Resolves a --curve argument: a built-in name, then an existing file path,
/// then "<dir>/<spec>.json" under $ECGA_CURVE_DIR.
[[nodiscard]] CurveParams resolve_curve(std::string_view spec);

}  // namespace ecga::ec
