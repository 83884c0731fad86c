#include "ecga/special_functions.hpp"

#include <cmath>
#include <string>

#include <boost/math/special_functions/gamma.hpp>

#include "ecga/error.hpp"

namespace ecga::special {

double erfc(double x) { return std::erfc(x); }

double igamc(double a, double x) {
  if (!(a > 0.0) || std::isnan(x)) {
    throw Error(ErrorCode::InvalidConfig, "igamc needs a > 0 (got " + std::to_string(a) + ")");
  }
  if (x <= 0.0) return 1.0;
  return boost::math::gamma_q(a, x);
}

double normal_cdf(double x) { return 0.5 * std::erfc(-x / std::sqrt(2.0)); }

}  // namespace ecga::special
