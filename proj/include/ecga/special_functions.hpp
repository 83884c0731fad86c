#pragma once

namespace ecga::special {

/// Complementary error function.
[[nodiscard]] double erfc(double x);

/// Regularized upper incomplete gamma Q(a, x) = Gamma(a, x) / Gamma(a),
/// a > 0, x >= 0 (igamc in the NIST STS sources). Q(a, 0) = 1.
[[nodiscard]] double igamc(double a, double x);

/// Standard normal CDF.
[[nodiscard]] double normal_cdf(double x);

}  // namespace ecga::special
