#include "ecga/idprng.hpp"

#include <algorithm>
#include <string>

#include "ecga/error.hpp"

namespace ecga {

namespace {

constexpr std::size_t kDigestBits = 256;

void append_u64_be(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 56; shift >= 0; shift -= 8) out.push_back(static_cast<std::uint8_t>(v >> shift));
}

std::uint64_t reduce_mod_2m(std::uint64_t v, unsigned m) { return v & ((std::uint64_t{1} << m) - 1); }

}  // namespace

void GenerationConfig::validate() const {
  if (image.empty() || image.pixels.empty()) throw Error(ErrorCode::EmptyImage, "generation needs an image");
  if (triplet.phi < 1 || triplet.psi < 1 || triplet.varphi < 1) {
    throw Error(ErrorCode::InvalidConfig, "phi, psi and varphi must be positive integers");
  }
  if (bz_seed.size() < 32) throw Error(ErrorCode::InvalidConfig, "bz_seed must carry at least 256 bits");
  if (m < 1 || m > 16) throw Error(ErrorCode::InvalidConfig, "m must be in [1, 16]");
  if (target_length < (std::size_t{1} << m)) {
    throw Error(ErrorCode::InvalidConfig,
                "target length must be at least 2^m = " + std::to_string(std::size_t{1} << m));
  }
}

KeyDigests key_digests(const GenerationConfig& cfg) {
  return KeyDigests{hash_image(cfg.image), hash_integer(cfg.curve.p()),
                    hash_integer(cfg.curve.a().value()), hash_integer(cfg.curve.b().value())};
}

std::vector<std::uint8_t> derive_mask_seed(const GenerationConfig& cfg, const KeyDigests& digests) {
  std::vector<std::uint8_t> key_material;
  for (const HashDigest* d : {&digests.image, &digests.p, &digests.a, &digests.b}) {
    key_material.insert(key_material.end(), d->bytes().begin(), d->bytes().end());
  }
  const auto& g = cfg.curve.generator();
  for (const ec::BigInt* coord : {&g.x().value(), &g.y().value()}) {
    const auto h = hash_integer(*coord);
    key_material.insert(key_material.end(), h.bytes().begin(), h.bytes().end());
  }
  append_u64_be(key_material, reduce_mod_2m(cfg.triplet.phi, cfg.m));
  append_u64_be(key_material, reduce_mod_2m(cfg.triplet.psi, cfg.m));
  append_u64_be(key_material, reduce_mod_2m(cfg.triplet.varphi, cfg.m));
  key_material.push_back(static_cast<std::uint8_t>(cfg.m));

  std::vector<std::uint8_t> seed(cfg.bz_seed);
  const auto key = sha256(key_material);
  seed.insert(seed.end(), key.begin(), key.end());
  return seed;
}

Sequence decimalize(const BitString& b, unsigned m) {
  Sequence out(m);
  const std::size_t t = b.size() / m;
  auto& symbols = out.mutable_symbols();
  symbols.reserve(t);
  for (std::size_t seg = 0; seg < t; ++seg) {
    Sequence::Symbol v = 0;
    for (unsigned j = 0; j < m; ++j) v = (v << 1) | b[seg * m + j];
    symbols.push_back(v);
  }
  return out;
}

BitString point_material(const ec::AffinePoint& pt, const KeyDigests& digests, MaskExpander& mask) {
  const BitString bx = to_bits(pt.x().value());
  const BitString by = to_bits(pt.y().value());
  const std::size_t lx = std::min(bx.size(), kDigestBits);
  const std::size_t ly = std::min(by.size(), kDigestBits);

  const BitString x_part = interleave3(digests.a.bits().prefix(lx), bx.prefix(lx), digests.b.bits().prefix(lx));
  const BitString y_part =
      interleave3(digests.image.bits().prefix(ly), by.prefix(ly), digests.p.bits().prefix(ly));
  const BitString joined = concat(x_part, y_part);
  return xor_mask(joined, mask_bits(mask, joined.size()));
}

DeltaResult assemble_delta(const GenerationConfig& cfg) {
  cfg.validate();
  const KeyDigests digests = key_digests(cfg);
  MaskExpander mask(derive_mask_seed(cfg, digests));
  ec::PointWalker walker(cfg.curve);

  const std::size_t needed = cfg.target_length + 1;
  DeltaResult result{Sequence(cfg.m), 0};
  while (result.delta.size() < needed) {
    const ec::AffinePoint& pt = walker.next();
    result.delta.append(decimalize(point_material(pt, digests, mask), cfg.m));
    ++result.n_points;
  }
  result.delta.truncate(needed);
  return result;
}

Sequence affine_combine(const Sequence& d, const Triplet& triplet) {
  if (d.size() < 2) throw Error(ErrorCode::SequenceTooShort, "affine_combine needs at least 2 symbols");
  const unsigned m = d.bits_per_symbol();
  const std::uint64_t mask = (std::uint64_t{1} << m) - 1;
  const std::uint64_t phi = triplet.phi & mask;
  const std::uint64_t psi = triplet.psi & mask;
  const std::uint64_t varphi = triplet.varphi & mask;

  Sequence out(m);
  auto& symbols = out.mutable_symbols();
  symbols.reserve(d.size() - 1);
  for (std::size_t i = 0; i + 1 < d.size(); ++i) {
    symbols.push_back(static_cast<Sequence::Symbol>((phi * d[i] + psi * d[i + 1] + varphi) & mask));
  }
  return out;
}

Sequence generate_initial(const GenerationConfig& cfg) {
  return affine_combine(assemble_delta(cfg).delta, cfg.triplet);
}

}  // namespace ecga
