#ifndef BCHKIT_BCH_DYNKIN_HPP
#define BCHKIT_BCH_DYNKIN_HPP

#include <vector>

#include "bchkit/bch/lie_series.hpp"
#include "bchkit/config.hpp"

namespace bchkit {

/// BCH series of ln(e^X e^Y) through `order` in Dynkin's word-sum form.
///
/// In the free associative algebra ln(e^X e^Y) = sum_k (-1)^(k-1)/k W^k with
/// W = e^X e^Y - 1, so the coefficient of a word w is a sum over ways of
/// cutting w into k nonempty blocks X^p Y^q, each weighted 1/(p! q!). The
/// right-nested bracketing of the degree-n part equals n times that part
/// (Dynkin-Specht-Wever), hence the Lie coefficient of w is that sum over n.
///
/// Words sharing a prefix share their partial block sums, so the words are
/// enumerated depth-first over the prefix tree.
inline LieSeries dynkin_expand(int order) {
  require_order_in_range(order, "dynkin_expand");
  auto const inv_fact = inverse_factorials(order);

  LieSeries series(order);
  // sums[j][k]: total weight of cutting the first j letters into k blocks.
  std::vector<std::vector<BigRational>> sums(
      static_cast<std::size_t>(order) + 1,
      std::vector<BigRational>(static_cast<std::size_t>(order) + 1, BigRational(0)));
  sums[0][0] = 1;
  std::vector<Letter> prefix;
  prefix.reserve(static_cast<std::size_t>(order));

  auto extend = [&](auto &&self) -> void {
    int const j = static_cast<int>(prefix.size());
    auto &row = sums[j];
    for (auto &entry : row) entry = 0;

    // Trailing block prefix[i..j) must read X^p Y^q; walk i leftwards.
    int p = 0, q = 0;
    bool seen_x = false;
    for (int i = j - 1; i >= 0; --i) {
      if (prefix[i] == Letter::Y) {
        if (seen_x) break;
        ++q;
      } else {
        seen_x = true;
        ++p;
      }
      BigRational const weight = inv_fact[p] * inv_fact[q];
      auto const &from = sums[i];
      for (int k = 1; k <= j; ++k)
        if (!from[k - 1].is_zero()) row[k] += from[k - 1] * weight;
    }

    BigRational coeff(0);
    for (int k = 1; k <= j; ++k) {
      if (row[k].is_zero()) continue;
      BigRational term = row[k] / BigRational(k);
      if (k % 2 == 0) coeff -= term;
      else coeff += term;
    }
    if (!coeff.is_zero()) {
      LieWord word;
      for (Letter l : prefix) word = word.appended(l);
      series.add(word, coeff / BigRational(j));
    }

    if (j == order) return;
    for (Letter next : {Letter::X, Letter::Y}) {
      prefix.push_back(next);
      self(self);
      prefix.pop_back();
    }
  };

  for (Letter first : {Letter::X, Letter::Y}) {
    prefix.push_back(first);
    extend(extend);
    prefix.pop_back();
  }
  return series;
}

} // namespace bchkit

#endif
