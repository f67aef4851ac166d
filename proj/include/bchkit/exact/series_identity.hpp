#ifndef BCHKIT_EXACT_SERIES_IDENTITY_HPP
#define BCHKIT_EXACT_SERIES_IDENTITY_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

namespace bchkit {

/// Partial sum 1 - sum_{n=1}^{terms} (1-x)^n / (n(n+1)) next to the closed
/// form x ln(x) / (x - 1). Used as a test oracle on 0 < x < 2.
inline std::pair<double, double> log_series_identity_check(double x, int terms) {
  if (!(x > 0.0 && x < 2.0))
    throw std::domain_error("log_series_identity_check: x must lie in (0, 2)");
  if (terms < 1) throw std::invalid_argument("log_series_identity_check: terms must be >= 1");

  double const y = 1.0 - x;
  double partial = 1.0;
  double power = 1.0;
  for (int n = 1; n <= terms; ++n) {
    power *= y;
    partial -= power / (static_cast<double>(n) * static_cast<double>(n + 1));
  }
  // ln(x)/(x-1) = log1p(-y)/(-y), which tends to 1 as y -> 0.
  double reference = y == 0.0 ? 1.0 : x * std::log1p(-y) / (-y);
  return {partial, reference};
}

} // namespace bchkit

#endif
