#ifndef BCHKIT_BCH_LIE_SERIES_HPP
#define BCHKIT_BCH_LIE_SERIES_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "bchkit/bch/lie_word.hpp"
#include "bchkit/exact/big_rational.hpp"

namespace bchkit {

/// Rational combination of right-nested brackets through a fixed order.
///
/// Terms are kept in a light canonical form: words ending in a repeated
/// letter are dropped (they denote zero), and words ending in "YX" are stored
/// as the negated "XY" word by antisymmetry of the innermost bracket. This is
/// not a basis; two series can denote the same Lie element with different
/// word coefficients.
class LieSeries {
public:
  using Terms = std::map<LieWord, BigRational>;

  explicit LieSeries(int max_order = 1) : max_order_(max_order) {
    if (max_order < 1 || max_order > LieWord::max_length)
      throw std::invalid_argument("LieSeries: max_order out of range");
  }

  int max_order() const { return max_order_; }
  Terms const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(LieWord word, BigRational const &coeff) {
    if (word.empty()) throw std::invalid_argument("LieSeries: empty word");
    if (word.length() > max_order_)
      throw std::invalid_argument("LieSeries: word " + word.to_string() + " exceeds max_order");
    if (coeff.is_zero() || word.denotes_zero()) return;
    BigRational c = coeff;
    if (word.length() >= 2 && word.last() == Letter::X) {
      word = word.with_last_pair_swapped();
      c = -c;
    }
    auto [it, inserted] = terms_.try_emplace(word, c);
    if (!inserted) {
      it->second += c;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  BigRational coefficient(LieWord const &word) const {
    auto it = terms_.find(word);
    return it == terms_.end() ? BigRational(0) : it->second;
  }
  BigRational coefficient(std::string_view word) const {
    return coefficient(LieWord::parse(word));
  }

  /// Homogeneous part made of length-n words.
  LieSeries part(int n) const {
    LieSeries out(max_order_);
    for (auto const &[w, c] : terms_)
      if (w.length() == n) out.terms_.emplace(w, c);
    return out;
  }

  /// Image under Y -> 0: only words free of Y survive.
  LieSeries without(Letter letter) const {
    LieSeries out(max_order_);
    for (auto const &[w, c] : terms_)
      if (!w.contains(letter)) out.terms_.emplace(w, c);
    return out;
  }

  LieSeries truncated(int order) const {
    LieSeries out(order);
    for (auto const &[w, c] : terms_)
      if (w.length() <= order) out.terms_.emplace(w, c);
    return out;
  }

  LieSeries &operator+=(LieSeries const &o) {
    for (auto const &[w, c] : o.terms_) add(w, c);
    return *this;
  }

  friend bool operator==(LieSeries const &, LieSeries const &) = default;

  std::string to_string() const {
    std::string out;
    for (auto const &[w, c] : terms_) {
      if (!out.empty()) out += " + ";
      out += "(" + c.to_string() + ")" + w.to_string();
    }
    return out.empty() ? "0" : out;
  }

private:
  int max_order_;
  Terms terms_;
};

} // namespace bchkit

#endif
