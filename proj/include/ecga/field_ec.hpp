#pragma once

// Prime-field arithmetic and the affine group law on short Weierstrass
// curves y^2 = x^3 + ax + b over GF(p).
//
// Every value type here is immutable once built; the operations are pure and
// may be called from any number of threads.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ecga::ec {

using BigInt = boost::multiprecision::cpp_int;

/// Returns z in [1, p) with x*z = 1 (mod p), by the extended Euclidean
/// algorithm. Throws InverseOfZero when x = 0 (mod p) and NotInvertible when
/// gcd(x, p) != 1 (only possible for composite test moduli).
[[nodiscard]] BigInt mod_inv(const BigInt& x, const BigInt& p);

class FieldElement {
 public:
  /// `value` is reduced into [0, p); negative values wrap.
  FieldElement(const BigInt& value, std::shared_ptr<const BigInt> modulus);

  [[nodiscard]] const BigInt& value() const noexcept { return value_; }
  [[nodiscard]] const BigInt& modulus() const noexcept { return *modulus_; }
  [[nodiscard]] const std::shared_ptr<const BigInt>& modulus_handle() const noexcept {
    return modulus_;
  }
  [[nodiscard]] bool is_zero() const noexcept { return value_ == 0; }

  [[nodiscard]] FieldElement inverse() const;

  friend FieldElement operator+(const FieldElement& lhs, const FieldElement& rhs);
  friend FieldElement operator-(const FieldElement& lhs, const FieldElement& rhs);
  friend FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs);
  friend FieldElement operator-(const FieldElement& x);
  friend bool operator==(const FieldElement& lhs, const FieldElement& rhs);

 private:
  BigInt value_;
  std::shared_ptr<const BigInt> modulus_;
};

/// A point on a curve: either finite (x, y) or the point at infinity.
class AffinePoint {
 public:
  [[nodiscard]] static AffinePoint infinity() { return AffinePoint{}; }
  [[nodiscard]] static AffinePoint finite(FieldElement x, FieldElement y);

  [[nodiscard]] bool is_infinity() const noexcept { return !coords_.has_value(); }
  /// Precondition: !is_infinity().
  [[nodiscard]] const FieldElement& x() const;
  [[nodiscard]] const FieldElement& y() const;

  friend bool operator==(const AffinePoint& lhs, const AffinePoint& rhs);

 private:
  AffinePoint() = default;
  struct Coords {
    FieldElement x;
    FieldElement y;
  };
  std::optional<Coords> coords_;
};

class CurveParams {
 public:
  /// Validates p > 3, 0 <= a, b, gx, gy < p, non-singularity
  /// (4a^3 + 27b^2 != 0 mod p) and that G lies on the curve.
  /// Primality of p is the caller's responsibility.
  [[nodiscard]] static CurveParams create(std::string name, const BigInt& p, const BigInt& a,
                                          const BigInt& b, const BigInt& gx, const BigInt& gy);

  [[nodiscard]] const std::string& name() const noexcept { return name_; }
  [[nodiscard]] const BigInt& p() const noexcept { return *modulus_; }
  [[nodiscard]] const FieldElement& a() const noexcept { return a_; }
  [[nodiscard]] const FieldElement& b() const noexcept { return b_; }
  [[nodiscard]] const AffinePoint& generator() const noexcept { return generator_; }
  [[nodiscard]] const std::shared_ptr<const BigInt>& modulus_handle() const noexcept {
    return modulus_;
  }

  [[nodiscard]] FieldElement element(const BigInt& v) const { return {v, modulus_}; }
  [[nodiscard]] AffinePoint point(const BigInt& x, const BigInt& y) const;

  /// True for infinity and for finite points satisfying the curve equation
  /// over this curve's field.
  [[nodiscard]] bool on_curve(const AffinePoint& pt) const;

 private:
  CurveParams(std::string name, std::shared_ptr<const BigInt> modulus, FieldElement a,
              FieldElement b, AffinePoint generator);

  std::string name_;
  std::shared_ptr<const BigInt> modulus_;
  FieldElement a_;
  FieldElement b_;
  AffinePoint generator_;
};

/// The full group law: identity, inverse pair, tangent (doubling) and chord.
/// Throws OffCurvePoint if either input is not on `curve`.
[[nodiscard]] AffinePoint point_add(const AffinePoint& lhs, const AffinePoint& rhs,
                                    const CurveParams& curve);

/// [G, 2G, ..., nG] by cumulative addition G_k = G_{k-1} + G.
/// Throws OrderExhausted if some kG is the point at infinity.
[[nodiscard]] std::vector<AffinePoint> point_stream(const CurveParams& curve, std::size_t n);

/// Incremental form of point_stream, for callers that do not know n upfront.
class PointWalker {
 public:
  explicit PointWalker(const CurveParams& curve);

  /// Returns G_k for k = 1, 2, ... on successive calls.
  [[nodiscard]] const AffinePoint& next();
  [[nodiscard]] std::size_t index() const noexcept { return index_; }

 private:
  const CurveParams* curve_;
  AffinePoint current_;
  std::size_t index_ = 0;
};

/// Minimal number of bits needed to write x (0 for x = 0).
[[nodiscard]] std::size_t bit_length(const BigInt& x);

}  // namespace ecga::ec
