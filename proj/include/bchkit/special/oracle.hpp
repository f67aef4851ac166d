#ifndef BCHKIT_SPECIAL_ORACLE_HPP
#define BCHKIT_SPECIAL_ORACLE_HPP

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace bchkit {

struct GaussLegendre {
  std::vector<double> nodes;   ///< on [0, 1]
  std::vector<double> weights; ///< sum to 1
};

/// n-point Gauss-Legendre rule mapped to [0, 1]; roots by Newton iteration on
/// the three-term recurrence, carried in long double.
inline GaussLegendre gauss_legendre(int n) {
  if (n < 1) throw std::invalid_argument("gauss_legendre: need at least one node");
  GaussLegendre rule{std::vector<double>(n), std::vector<double>(n)};
  for (int i = 0; i < (n + 1) / 2; ++i) {
    long double x = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    long double dp = 0;
    for (int iter = 0; iter < 100; ++iter) {
      long double p0 = 1, p1 = x;
      for (int k = 2; k <= n; ++k) {
        long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      if (n == 1) p0 = 1;
      dp = n * (x * p1 - p0) / (x * x - 1);
      long double step = p1 / dp;
      x -= step;
      if (std::abs(step) < 1e-19L) break;
    }
    long double p0 = 1, p1 = x;
    for (int k = 2; k <= n; ++k) {
      long double p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1);
    long double w = 2 / ((1 - x * x) * dp * dp);
    rule.nodes[i] = static_cast<double>((1 - x) / 2);
    rule.nodes[n - 1 - i] = static_cast<double>((1 + x) / 2);
    rule.weights[i] = rule.weights[n - 1 - i] = static_cast<double>(w / 2);
  }
  return rule;
}

/// Largest |1 - e^(v - t u)| over t in [0, 1] and the endpoint attaining it.
inline std::pair<double, int> integral_oracle_ratio(double u, double v) {
  double at0 = std::abs(std::expm1(v));
  double at1 = std::abs(std::expm1(v - u));
  return at0 >= at1 ? std::pair{at0, 0} : std::pair{at1, 1};
}

/// f(u, v) = ((e^v - 1)/v) int_0^1 sum_{n=1}^{terms} (1 - e^v e^{-tu})^(n-1) / (n(n+1)) dt
/// by Gauss-Legendre quadrature of the truncated series.
inline double f_integral_oracle(double u, double v, int quadrature_nodes, int series_terms) {
  if (!std::isfinite(u) || !std::isfinite(v))
    throw std::domain_error("f_integral_oracle: non-finite input");
  if (series_terms < 1) throw std::invalid_argument("f_integral_oracle: need at least one term");
  for (int t = 0; t <= 1; ++t) {
    double r = std::abs(std::expm1(v - t * u));
    if (!(r < 1))
      throw std::domain_error("f_integral_oracle: series diverges at t=" + std::to_string(t) +
                              " (|1 - e^v e^-tu| = " + std::to_string(r) + ")");
  }
  double prefactor = std::abs(v) < 1e-12 ? 1.0 : std::expm1(v) / v;
  auto rule = gauss_legendre(quadrature_nodes);
  double total = 0;
  for (std::size_t q = 0; q < rule.nodes.size(); ++q) {
    double x = -std::expm1(v - rule.nodes[q] * u);
    double sum = 0;
    for (int n = series_terms; n >= 1; --n) sum = sum * x + 1.0 / (double(n) * (n + 1));
    total += rule.weights[q] * sum;
  }
  return prefactor * total;
}

} // namespace bchkit

#endif
