#pragma once

// Image-dependent initial sequence: points kG on the curve are turned into
// bits by interleaving their coordinates with the image/curve digests,
// masked, split into m-bit symbols and combined affinely.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ecga/field_ec.hpp"
#include "ecga/image.hpp"
#include "ecga/material.hpp"
#include "ecga/sequence.hpp"

namespace ecga {

/// (phi, psi, varphi): coefficients of
///   out_i = phi*d_i + psi*d_{i+1} + varphi  (mod 2^m).
/// Any values >= 1 are accepted; they are reduced mod 2^m where used.
struct Triplet {
  std::uint64_t phi = 1;
  std::uint64_t psi = 0;
  std::uint64_t varphi = 0;

  friend bool operator==(const Triplet&, const Triplet&) = default;
};

struct GenerationConfig {
  ImageBuffer image;
  ec::CurveParams curve;
  Triplet triplet;
  std::vector<std::uint8_t> bz_seed;  // at least 32 bytes
  unsigned m = 8;
  std::size_t target_length = 0;  // L

  /// Throws InvalidConfig (or EmptyImage) on violation of: triplet entries
  /// >= 1, |bz_seed| >= 32, 1 <= m <= 16, L >= 2^m.
  void validate() const;
};

/// H_I, H_p, H_a, H_b for one configuration.
struct KeyDigests {
  HashDigest image;
  HashDigest p;
  HashDigest a;
  HashDigest b;
};

[[nodiscard]] KeyDigests key_digests(const GenerationConfig& cfg);

/// Seed of the mask expander: bz_seed || SHA-256(H_I || H_p || H_a || H_b ||
/// SHA-256(Gx) || SHA-256(Gy) || phi || psi || varphi || m), where the
/// triplet entries are reduced mod 2^m and written as 8-byte big-endian and m
/// as one byte. Every key parameter therefore reaches every mask bit.
[[nodiscard]] std::vector<std::uint8_t> derive_mask_seed(const GenerationConfig& cfg,
                                                         const KeyDigests& digests);

/// Splits b into floor(|b|/m) consecutive m-bit MSB-first symbols; the
/// |b| mod m trailing bits are dropped.
[[nodiscard]] Sequence decimalize(const BitString& b, unsigned m);

/// Masked material of one point (before decimalize):
///   interleave3(H_a, B(x), H_b) || interleave3(H_I, B(y), H_p), each
/// interleave cut to min(bits(coord), 256) rounds, XORed with the next
/// |material| bits of `mask`.
[[nodiscard]] BitString point_material(const ec::AffinePoint& pt, const KeyDigests& digests,
                                       MaskExpander& mask);

struct DeltaResult {
  Sequence delta;            // exactly L + 1 symbols
  std::size_t n_points = 0;  // smallest n whose per-point symbols reach L + 1
};

[[nodiscard]] DeltaResult assemble_delta(const GenerationConfig& cfg);

/// out_i = (phi*d_i + psi*d_{i+1} + varphi) mod 2^m for i < |d| - 1.
/// Throws SequenceTooShort for |d| < 2.
[[nodiscard]] Sequence affine_combine(const Sequence& d, const Triplet& triplet);

/// affine_combine(assemble_delta(cfg)); exactly L symbols.
[[nodiscard]] Sequence generate_initial(const GenerationConfig& cfg);

}  // namespace ecga
