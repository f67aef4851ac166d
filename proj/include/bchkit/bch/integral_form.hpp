#ifndef BCHKIT_BCH_INTEGRAL_FORM_HPP
#define BCHKIT_BCH_INTEGRAL_FORM_HPP

#include <map>
#include <vector>

#include "bchkit/bch/lie_series.hpp"
#include "bchkit/config.hpp"

namespace bchkit {

namespace detail {

/// Polynomial in the integration variable t, coefficient k for t^k.
using TPoly = std::vector<BigRational>;

inline void accumulate(TPoly &into, TPoly const &from, int shift, BigRational const &scale) {
  if (into.size() < from.size() + static_cast<std::size_t>(shift))
    into.resize(from.size() + static_cast<std::size_t>(shift), BigRational(0));
  for (std::size_t k = 0; k < from.size(); ++k)
    if (!from[k].is_zero()) into[k + static_cast<std::size_t>(shift)] += from[k] * scale;
}

} // namespace detail

/// BCH series from the integral representation
///   Z = X + Y - int_0^1 dt sum_n (I - e^{L_X} e^{t L_Y})^n / (n(n+1)) Y.
///
/// The operator A = I - e^{L_X} e^{t L_Y} = -sum_{a+b>=1} t^b/(a! b!) L_X^a L_Y^b
/// is applied repeatedly to Y, each application prefixing X^a Y^b to every
/// right-nested word and multiplying its t-polynomial by -t^b/(a! b!). A^n Y
/// only has words of length >= n+1, so the n-sum stops at n = order.
inline LieSeries integral_form_expand(int order) {
  require_order_in_range(order, "integral_form_expand");
  auto const inv_fact = inverse_factorials(order);

  LieSeries series(order);
  series.add(LieWord(Letter::X), 1);
  series.add(LieWord(Letter::Y), 1);

  std::map<LieWord, detail::TPoly> current;
  current[LieWord(Letter::Y)] = detail::TPoly{BigRational(1)};

  for (int n = 1; n <= order && !current.empty(); ++n) {
    std::map<LieWord, detail::TPoly> next;
    for (auto const &[word, poly] : current) {
      int const room = order - word.length();
      for (int a = 0; a <= room; ++a)
        for (int b = 0; a + b <= room; ++b) {
          if (a + b == 0) continue;
          LieWord w = word.prefixed(Letter::Y, b).prefixed(Letter::X, a);
          if (w.denotes_zero()) continue;
          detail::accumulate(next[w], poly, b, -(inv_fact[a] * inv_fact[b]));
        }
    }
    current = std::move(next);

    BigRational const weight = BigRational(-1) / BigRational(n * (n + 1));
    for (auto const &[word, poly] : current) {
      BigRational integral(0);
      for (std::size_t k = 0; k < poly.size(); ++k)
        if (!poly[k].is_zero()) integral += poly[k] / BigRational(static_cast<long>(k + 1));
      series.add(word, weight * integral);
    }
  }
  return series;
}

} // namespace bchkit

#endif
