#ifndef BCHKIT_SPECIAL_F_EVAL_HPP
#define BCHKIT_SPECIAL_F_EVAL_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/math/special_functions/expm1.hpp>

#include "bchkit/exact/f_taylor.hpp"
#include "bchkit/precision.hpp"

namespace bchkit {

enum class FBranch { generic, u_zero, v_zero, diagonal, antidiagonal, origin_series, rescaled_large };

inline char const *to_string(FBranch b) {
  switch (b) {
  case FBranch::generic: return "generic";
  case FBranch::u_zero: return "u_zero";
  case FBranch::v_zero: return "v_zero";
  case FBranch::diagonal: return "diagonal";
  case FBranch::antidiagonal: return "antidiagonal";
  case FBranch::origin_series: return "origin_series";
  case FBranch::rescaled_large: return "rescaled_large";
  }
  return "?";
}

struct PrecisionPolicy {
  double series_radius = 0.25;
  int series_degree = 30;
  double line_snap = 1e-7;
  /// Points closer than this to a limit line use 50-digit arithmetic.
  double extended_annulus = 1e-3;
  double rescale_threshold = 30;
};

struct ClosedFormEvaluation {
  double value = 0;
  FBranch branch = FBranch::generic;
  /// True when the extended working precision was used.
  bool extended = false;
};

namespace detail {

/// Taylor coefficients of f as doubles, ordered by total degree, computed once
/// per degree.
inline std::vector<std::vector<double>> const &f_taylor_doubles(int degree) {
  static std::mutex mutex;
  static std::vector<std::vector<std::vector<double>>> cache;
  std::lock_guard lock(mutex);
  if (cache.size() <= static_cast<std::size_t>(degree)) cache.resize(degree + 1);
  auto &slot = cache[degree];
  if (slot.empty()) {
    auto series = f_taylor(degree);
    slot.resize(static_cast<std::size_t>(degree) + 1);
    for (int d = 0; d <= degree; ++d)
      for (int i = 0; i <= d; ++i) slot[d].push_back(rational_to<double>(series.coefficient(i, d - i)));
  }
  return slot;
}

inline double f_series(double u, double v, int degree) {
  auto const &blocks = f_taylor_doubles(degree);
  long double acc = 0;
  for (int d = degree; d >= 0; --d) {
    long double block = 0, up = 1;
    std::vector<long double> vp(static_cast<std::size_t>(d) + 1, 1.0L);
    for (int k = 1; k <= d; ++k) vp[k] = vp[k - 1] * v;
    for (int i = 0; i <= d; ++i) {
      block += blocks[d][i] * up * vp[d - i];
      up *= u;
    }
    acc += block;
  }
  return static_cast<double>(acc);
}

/// (1 - e^-x)/x.
inline double g_fn(double x) { return x == 0 ? 1.0 : -std::expm1(-x) / x; }

/// f(u, v) near u = 0 through second order in u, from
/// f = (G(v) - G(u)) / (e^-v - e^-u) with G(x) = (1 - e^-x)/x.
inline double f_axis(double u, double v) {
  double a = (-std::expm1(-v) - v) / v;
  double b = std::expm1(-v);
  double f0 = a / b;
  double f1 = (0.5 - f0) / b;
  double f2 = (-1.0 / 6.0 - f1 + 0.5 * f0) / b;
  return f0 + u * (f1 + u * f2);
}

/// f on u = m - d, v = m + d with |d| tiny: even in d.
inline double f_diagonal(double m, double d) {
  double p = std::expm1(m) - m;
  double f0 = p / (m * m);
  double q = std::expm1(m) / 6.0 + 0.5;
  double f2 = (f0 - q) / (m * m);
  return f0 + d * d * f2;
}

/// f on u = m - d, v = m + d with |m| tiny.
inline double f_antidiagonal(double m, double d) {
  double sh = std::sinh(d), ch = std::cosh(d);
  double n0 = d * (1.0 - ch) / sh;
  double f0 = -n0 / (d * d);
  double f1 = (sh - d) / (d * d * sh);
  double n2 = d / (2.0 * sh);
  double f2 = -(n2 + n0 / (d * d)) / (d * d);
  return f0 + m * (f1 + m * f2);
}

/// Double-precision closed form away from the limit lines. Picks between
///   f = (G(v) - G(u)) / (e^-v - e^-u)
/// which only cancels near u = v, and the midpoint form
///   f = (d (e^m - cosh d)/sinh d - m) / (m^2 - d^2),  u = m - d, v = m + d
/// which only cancels near the axes.
inline double f_closed_double(double u, double v) {
  if (std::abs(u - v) >= std::min(std::abs(u), std::abs(v)))
    return (g_fn(v) - g_fn(u)) / (std::exp(-v) - std::exp(-u));
  double m = 0.5 * (u + v), d = 0.5 * (v - u);
  double ratio = d / std::sinh(d);
  double num = ratio * (std::exp(m) - std::cosh(d)) - m;
  return num / ((m - d) * (m + d));
}

/// Generic closed form in 50-digit arithmetic.
inline double f_closed_extended(double u_in, double v_in) {
  using boost::math::expm1;
  ExtendedReal u(u_in), v(v_in);
  ExtendedReal num = u * exp(u) * expm1(v) - v * exp(v) * expm1(u);
  ExtendedReal den = u * v * (exp(u) - exp(v));
  return static_cast<double>(num / den);
}

} // namespace detail

/// f(u, v) with [X,Y] = uX + vY + cI, Z = X + Y + f [X,Y].
inline ClosedFormEvaluation f_eval(double u, double v, PrecisionPolicy const &policy = {}) {
  if (!std::isfinite(u) || !std::isfinite(v))
    throw std::domain_error("f_eval: non-finite input");
  if (std::max(std::abs(u), std::abs(v)) < policy.series_radius)
    return {detail::f_series(u, v, policy.series_degree), FBranch::origin_series, false};

  double const to_u = std::abs(u), to_v = std::abs(v);
  double const to_diag = std::abs(u - v), to_anti = std::abs(u + v);
  double const m = 0.5 * (u + v), d = 0.5 * (v - u);
  if (to_u < policy.line_snap) return {detail::f_axis(u, v), FBranch::u_zero, false};
  if (to_v < policy.line_snap) return {detail::f_axis(v, u), FBranch::v_zero, false};
  if (to_diag < policy.line_snap) return {detail::f_diagonal(m, d), FBranch::diagonal, false};
  if (to_anti < policy.line_snap) return {detail::f_antidiagonal(m, d), FBranch::antidiagonal, false};

  FBranch generic =
      std::max(u, v) > policy.rescale_threshold ? FBranch::rescaled_large : FBranch::generic;
  double nearest = std::min({to_u, to_v, to_diag, to_anti});
  if (nearest <= policy.extended_annulus) return {detail::f_closed_extended(u, v), generic, true};
  return {detail::f_closed_double(u, v), generic, false};
}

/// Experimental: generic closed form for complex u, v with the limit values
/// substituted on u = 0, v = 0 and u = v. No branch analysis is attempted.
inline std::complex<double> f_eval_complex(std::complex<double> u, std::complex<double> v) {
  using C = std::complex<double>;
  if (u == C(0) && v == C(0)) return 0.5;
  auto axis = [](C w) { return (w * std::exp(w) - std::exp(w) + 1.0) / (w * (std::exp(w) - 1.0)); };
  if (u == C(0)) return axis(v);
  if (v == C(0)) return axis(u);
  if (u == v) return (std::exp(u) - 1.0 - u) / (u * u);
  return ((u - v) * std::exp(u + v) - (u * std::exp(u) - v * std::exp(v))) /
         (u * v * (std::exp(u) - std::exp(v)));
}

} // namespace bchkit

#endif
