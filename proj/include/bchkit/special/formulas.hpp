#ifndef BCHKIT_SPECIAL_FORMULAS_HPP
#define BCHKIT_SPECIAL_FORMULAS_HPP

#include <cmath>
#include <stdexcept>
#include <utility>

#include "bchkit/special/f_eval.hpp"
#include "bchkit/special/reduce.hpp"

namespace bchkit {

/// Reduced form of Z(sX, tY) = sX + tY + st f(ut, sv) [X,Y].
inline NumericElement z_scaled(double s, double t, SpecialParams const &p,
                               PrecisionPolicy const &policy = {}) {
  double k = s * t * f_eval(p.u * t, s * p.v, policy).value;
  return {s + k * p.u, t + k * p.v, k * p.c};
}

/// (alpha, beta) with e^X Y e^-X = Y + alpha [X,Y] and
/// e^Y X e^-Y = X + beta [X,Y]: alpha = (e^v - 1)/v, beta = (e^-u - 1)/u.
inline std::pair<double, double> braiding_coefficients(SpecialParams const &p) {
  if (!std::isfinite(p.u) || !std::isfinite(p.v))
    throw std::domain_error("braiding_coefficients: non-finite input");
  double alpha = p.v == 0 ? 1.0 : std::expm1(p.v) / p.v;
  double beta = p.u == 0 ? -1.0 : std::expm1(-p.u) / p.u;
  return {alpha, beta};
}

/// Right side of ln(e^X e^{(u/v)X + Y}) =
///   X + (uX + vY)/(1 - e^-v) + c I (e^-v - 1 + v)/(v (1 - e^-v)).
inline NumericElement shifted_rhs(SpecialParams const &p) {
  if (p.v == 0) throw std::domain_error("shifted_rhs: v = 0 leaves (u/v)X undefined");
  double one_minus = -std::expm1(-p.v);
  double tail; // e^-v - 1 + v
  if (std::abs(p.v) < 0.1) {
    double term = p.v * p.v / 2, sum = 0;
    for (int k = 3; k < 30 && term != 0; ++k) {
      sum += term;
      term *= -p.v / k;
    }
    tail = sum;
  } else {
    tail = std::expm1(-p.v) + p.v;
  }
  return {1.0 + p.u / one_minus, p.v / one_minus, p.c * tail / (p.v * one_minus)};
}

} // namespace bchkit

#endif
