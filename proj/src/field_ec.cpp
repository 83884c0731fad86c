#include "ecga/field_ec.hpp"

#include <utility>

#include <boost/multiprecision/integer.hpp>

#include "ecga/error.hpp"

namespace ecga::ec {

namespace {

BigInt reduce(const BigInt& v, const BigInt& p) {
  BigInt r = v % p;
  if (r < 0) r += p;
  return r;
}

void require_same_field(const FieldElement& lhs, const FieldElement& rhs) {
  if (lhs.modulus_handle() != rhs.modulus_handle() && lhs.modulus() != rhs.modulus()) {
    throw Error(ErrorCode::ModulusMismatch, "field elements belong to different fields");
  }
}

}  // namespace

BigInt mod_inv(const BigInt& x, const BigInt& p) {
  if (p < 2) throw Error(ErrorCode::InvalidConfig, "modulus must be at least 2");
  BigInt a = reduce(x, p);
  if (a == 0) throw Error(ErrorCode::InverseOfZero, "0 has no multiplicative inverse");

  // Invariant: old_s * a = old_r (mod p) and s * a = r (mod p).
  BigInt old_r = a, r = p;
  BigInt old_s = 1, s = 0;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = std::move(r);
    r = std::move(tmp);
    tmp = old_s - q * s;
    old_s = std::move(s);
    s = std::move(tmp);
  }
  if (old_r != 1) throw Error(ErrorCode::NotInvertible, "argument shares a factor with the modulus");
  return reduce(old_s, p);
}

std::size_t bit_length(const BigInt& x) {
  if (x <= 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(x)) + 1;
}

// ---- FieldElement ---------------------------------------------------------

FieldElement::FieldElement(const BigInt& value, std::shared_ptr<const BigInt> modulus)
    : value_(reduce(value, *modulus)), modulus_(std::move(modulus)) {}

FieldElement FieldElement::inverse() const { return {mod_inv(value_, *modulus_), modulus_}; }

FieldElement operator+(const FieldElement& lhs, const FieldElement& rhs) {
  require_same_field(lhs, rhs);
  BigInt v = lhs.value_ + rhs.value_;
  if (v >= *lhs.modulus_) v -= *lhs.modulus_;
  return {v, lhs.modulus_};
}

FieldElement operator-(const FieldElement& lhs, const FieldElement& rhs) {
  require_same_field(lhs, rhs);
  BigInt v = lhs.value_ - rhs.value_;
  if (v < 0) v += *lhs.modulus_;
  return {v, lhs.modulus_};
}

FieldElement operator*(const FieldElement& lhs, const FieldElement& rhs) {
  require_same_field(lhs, rhs);
  return {lhs.value_ * rhs.value_, lhs.modulus_};
}

FieldElement operator-(const FieldElement& x) { return {x.value_ == 0 ? BigInt(0) : *x.modulus_ - x.value_, x.modulus_}; }

bool operator==(const FieldElement& lhs, const FieldElement& rhs) {
  return lhs.value_ == rhs.value_ && lhs.modulus() == rhs.modulus();
}

// ---- AffinePoint ----------------------------------------------------------

AffinePoint AffinePoint::finite(FieldElement x, FieldElement y) {
  require_same_field(x, y);
  AffinePoint pt;
  pt.coords_.emplace(Coords{std::move(x), std::move(y)});
  return pt;
}

const FieldElement& AffinePoint::x() const {
  if (!coords_) throw Error(ErrorCode::OffCurvePoint, "point at infinity has no coordinates");
  return coords_->x;
}

const FieldElement& AffinePoint::y() const {
  if (!coords_) throw Error(ErrorCode::OffCurvePoint, "point at infinity has no coordinates");
  return coords_->y;
}

bool operator==(const AffinePoint& lhs, const AffinePoint& rhs) {
  if (lhs.is_infinity() || rhs.is_infinity()) return lhs.is_infinity() == rhs.is_infinity();
  return lhs.coords_->x == rhs.coords_->x && lhs.coords_->y == rhs.coords_->y;
}

// ---- CurveParams ----------------------------------------------------------

CurveParams::CurveParams(std::string name, std::shared_ptr<const BigInt> modulus, FieldElement a,
                         FieldElement b, AffinePoint generator)
    : name_(std::move(name)),
      modulus_(std::move(modulus)),
      a_(std::move(a)),
      b_(std::move(b)),
      generator_(std::move(generator)) {}

CurveParams CurveParams::create(std::string name, const BigInt& p, const BigInt& a, const BigInt& b,
                                const BigInt& gx, const BigInt& gy) {
  if (p <= 3) throw Error(ErrorCode::InvalidConfig, "curve prime must exceed 3");
  for (const BigInt* v : {&a, &b, &gx, &gy}) {
    if (*v < 0 || *v >= p) {
      throw Error(ErrorCode::InvalidConfig, "curve parameters must lie in [0, p)");
    }
  }
  auto modulus = std::make_shared<const BigInt>(p);
  FieldElement fa(a, modulus), fb(b, modulus);
  const FieldElement four(4, modulus), twenty_seven(27, modulus);
  const FieldElement disc = four * fa * fa * fa + twenty_seven * fb * fb;
  if (disc.is_zero()) throw Error(ErrorCode::SingularCurve, "4a^3 + 27b^2 = 0 (mod p)");

  CurveParams curve(std::move(name), modulus, std::move(fa), std::move(fb), AffinePoint::infinity());
  AffinePoint g = AffinePoint::finite(FieldElement(gx, modulus), FieldElement(gy, modulus));
  if (!curve.on_curve(g)) throw Error(ErrorCode::OffCurvePoint, "base point is not on the curve");
  curve.generator_ = std::move(g);
  return curve;
}

AffinePoint CurveParams::point(const BigInt& x, const BigInt& y) const {
  return AffinePoint::finite(element(x), element(y));
}

bool CurveParams::on_curve(const AffinePoint& pt) const {
  if (pt.is_infinity()) return true;
  if (pt.x().modulus() != *modulus_) return false;
  const FieldElement& x = pt.x();
  const FieldElement& y = pt.y();
  return y * y == x * x * x + a_ * x + b_;
}

// ---- group law ------------------------------------------------------------

AffinePoint point_add(const AffinePoint& lhs, const AffinePoint& rhs, const CurveParams& curve) {
  if (!curve.on_curve(lhs) || !curve.on_curve(rhs)) {
    throw Error(ErrorCode::OffCurvePoint, "point_add input is not on curve " + curve.name());
  }
  if (lhs.is_infinity()) return rhs;
  if (rhs.is_infinity()) return lhs;

  const FieldElement& x1 = lhs.x();
  const FieldElement& y1 = lhs.y();
  const FieldElement& x2 = rhs.x();
  const FieldElement& y2 = rhs.y();

  FieldElement lambda = curve.element(0);
  if (x1 == x2) {
    // Either Q = -P (including the y = 0 tangent case) or Q = P.
    if ((y1 + y2).is_zero()) return AffinePoint::infinity();
    const FieldElement three = curve.element(3);
    const FieldElement two = curve.element(2);
    lambda = three * x1 * x1 + curve.a();
    lambda = lambda * (two * y1).inverse();
  } else {
    lambda = (y2 - y1) * (x2 - x1).inverse();
  }
  FieldElement x3 = lambda * lambda - x1 - x2;
  FieldElement y3 = lambda * (x1 - x3) - y1;
  return AffinePoint::finite(std::move(x3), std::move(y3));
}

PointWalker::PointWalker(const CurveParams& curve)
    : curve_(&curve), current_(AffinePoint::infinity()) {}

const AffinePoint& PointWalker::next() {
  current_ = point_add(current_, curve_->generator(), *curve_);
  ++index_;
  if (current_.is_infinity()) {
    throw Error(ErrorCode::OrderExhausted,
                std::to_string(index_) + "*G is the point at infinity on " + curve_->name());
  }
  return current_;
}

std::vector<AffinePoint> point_stream(const CurveParams& curve, std::size_t n) {
  if (n == 0) throw Error(ErrorCode::InvalidConfig, "point_stream needs n >= 1");
  std::vector<AffinePoint> out;
  out.reserve(n);
  PointWalker walker(curve);
  for (std::size_t k = 0; k < n; ++k) out.push_back(walker.next());
  return out;
}

}  // namespace ecga::ec
