#ifndef BCHKIT_EXACT_F_TAYLOR_HPP
#define BCHKIT_EXACT_F_TAYLOR_HPP

#include <array>
#include <stdexcept>

#include "bchkit/exact/truncated_series.hpp"

namespace bchkit {

/// Numerator (u-v)e^(u+v) - (u e^u - v e^v) of f, exact through max_degree.
inline TruncatedSeries2 f_numerator_series(int max_degree) {
  auto u = TruncatedSeries2::u(max_degree);
  auto v = TruncatedSeries2::v(max_degree);
  auto eu = series_exp(u);
  auto ev = series_exp(v);
  auto euv = series_exp(u + v);
  return (u - v) * euv - (u * eu - v * ev);
}

/// Denominator u v (e^u - e^v) of f, exact through max_degree.
inline TruncatedSeries2 f_denominator_series(int max_degree) {
  auto u = TruncatedSeries2::u(max_degree);
  auto v = TruncatedSeries2::v(max_degree);
  return u * v * (series_exp(u) - series_exp(v));
}

/// The linear forms u, v and u - v; each divides both the numerator and the
/// denominator of f.
inline std::array<LinearForm, 3> f_removable_factors() {
  return {LinearForm{1, 0}, LinearForm{0, 1}, LinearForm{1, -1}};
}

/// Exact Taylor expansion of f(u,v) about the origin through total degree
/// `degree`.
inline TruncatedSeries2 f_taylor(int degree) {
  if (degree < 0) throw std::invalid_argument("f_taylor: degree must be non-negative");
  int const work = degree + 3;
  auto factors = f_removable_factors();
  return divide_after_factoring(f_numerator_series(work), f_denominator_series(work), factors);
}

} // namespace bchkit

#endif
