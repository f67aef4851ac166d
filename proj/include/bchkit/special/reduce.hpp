#ifndef BCHKIT_SPECIAL_REDUCE_HPP
#define BCHKIT_SPECIAL_REDUCE_HPP

#include <optional>
#include <string>

#include "bchkit/bch/dynkin.hpp"
#include "bchkit/bch/lie_series.hpp"
#include "bchkit/exact/f_taylor.hpp"
#include "bchkit/exact/multi_poly.hpp"

namespace bchkit {

/// [X,Y] = uX + vY + cI.
struct SpecialParams {
  double u = 0;
  double v = 0;
  double c = 0;
};

/// pX X + pY Y + pI I.
template <class Coeff> struct ReducedElement {
  Coeff pX{};
  Coeff pY{};
  Coeff pI{};

  ReducedElement &operator+=(ReducedElement const &o) {
    pX += o.pX;
    pY += o.pY;
    pI += o.pI;
    return *this;
  }
  ReducedElement &operator-=(ReducedElement const &o) {
    pX -= o.pX;
    pY -= o.pY;
    pI -= o.pI;
    return *this;
  }
  friend ReducedElement operator+(ReducedElement a, ReducedElement const &b) { return a += b; }
  friend ReducedElement operator-(ReducedElement a, ReducedElement const &b) { return a -= b; }
  template <class S> friend ReducedElement operator*(S const &s, ReducedElement a) {
    a.pX = a.pX * s;
    a.pY = a.pY * s;
    a.pI = a.pI * s;
    return a;
  }
  friend bool operator==(ReducedElement const &, ReducedElement const &) = default;
};

using SymbolicElement = ReducedElement<MultiPoly>;
using NumericElement = ReducedElement<double>;

/// Bracket of two reduced elements: only the X, Y parts matter and
/// [aX + bY, a'X + b'Y] = (ab' - ba')(uX + vY + cI).
template <class Coeff>
ReducedElement<Coeff> reduced_bracket(ReducedElement<Coeff> const &a, ReducedElement<Coeff> const &b,
                                      Coeff const &u, Coeff const &v, Coeff const &c) {
  Coeff det = a.pX * b.pY - a.pY * b.pX;
  return {det * u, det * v, det * c};
}

inline SymbolicElement symbolic_bracket(SymbolicElement const &a, SymbolicElement const &b) {
  return reduced_bracket(a, b, MultiPoly::u(), MultiPoly::v(), MultiPoly::c());
}

namespace detail {

/// Scalar s with word = s [X,Y] (or the letter itself for length 1):
/// s = v^(#X) (-u)^(#Y) over the leading length-2 letters, negated for a
/// trailing "YX" and zero for a doubled ending. Returned as (sign, #X, #Y).
struct WordFactor {
  int sign;
  int xs;
  int ys;
};

inline WordFactor word_factor(LieWord const &word) {
  int const n = word.length();
  if (word.denotes_zero()) return {0, 0, 0};
  int sign = word.at(n - 2) == Letter::X ? 1 : -1;
  int xs = 0, ys = 0;
  for (int i = 0; i < n - 2; ++i) {
    if (word.at(i) == Letter::X) ++xs;
    else ++ys;
  }
  if (ys % 2 == 1) sign = -sign;
  return {sign, xs, ys};
}

} // namespace detail

inline SymbolicElement reduce_word(LieWord const &word) {
  if (word.empty()) throw std::invalid_argument("reduce_word: empty word");
  if (word.length() == 1)
    return word.at(0) == Letter::X ? SymbolicElement{1, 0, 0} : SymbolicElement{0, 1, 0};
  auto f = detail::word_factor(word);
  if (f.sign == 0) return {};
  BigRational s(f.sign);
  return {MultiPoly::monomial({f.ys + 1, f.xs, 0}, s), MultiPoly::monomial({f.ys, f.xs + 1, 0}, s),
          MultiPoly::monomial({f.ys, f.xs, 1}, s)};
}

inline NumericElement reduce_word(LieWord const &word, SpecialParams const &p) {
  if (word.empty()) throw std::invalid_argument("reduce_word: empty word");
  if (word.length() == 1)
    return word.at(0) == Letter::X ? NumericElement{1, 0, 0} : NumericElement{0, 1, 0};
  auto f = detail::word_factor(word);
  double s = f.sign;
  for (int i = 0; i < f.xs; ++i) s *= p.v;
  for (int i = 0; i < f.ys; ++i) s *= p.u;
  return {s * p.u, s * p.v, s * p.c};
}

inline SymbolicElement reduce_series(LieSeries const &series) {
  SymbolicElement out;
  for (auto const &[word, coeff] : series.terms()) {
    if (word.length() == 1) {
      (word.at(0) == Letter::X ? out.pX : out.pY).add_term({0, 0, 0}, coeff);
      continue;
    }
    auto f = detail::word_factor(word);
    if (f.sign == 0) continue;
    BigRational s = f.sign > 0 ? coeff : -coeff;
    out.pX.add_term({f.ys + 1, f.xs, 0}, s);
    out.pY.add_term({f.ys, f.xs + 1, 0}, s);
    out.pI.add_term({f.ys, f.xs, 1}, s);
  }
  return out;
}

struct ZFormReport {
  int order = 0;
  bool pass = false;
  bool c_free = false;
  /// pI / c, the extracted f polynomial.
  MultiPoly f;
  /// Empty on success, otherwise "component monomial: expected E, got G".
  std::string first_mismatch;
};

/// Checks pX = 1 + u f_N, pY = 1 + v f_N, pI = c f_N exactly, with
/// f_N = f_taylor(order - 2), for the reduction of `series`.
inline ZFormReport check_z_form(LieSeries const &series, int order) {
  ZFormReport report;
  report.order = order;
  SymbolicElement reduced = reduce_series(series);

  MultiPoly f_n = order >= 2 ? f_taylor(order - 2).to_multi_poly() : MultiPoly();
  SymbolicElement expected{MultiPoly(1) + MultiPoly::u() * f_n, MultiPoly(1) + MultiPoly::v() * f_n,
                           MultiPoly::c() * f_n};

  try {
    report.f = reduced.pI.divide_by_variable(2);
    report.c_free = report.f.degree_in(2) <= 0;
  } catch (std::domain_error const &) {
    report.c_free = false;
    if (report.first_mismatch.empty()) report.first_mismatch = "pI: not divisible by c";
  }

  auto compare = [&](char const *name, MultiPoly const &want, MultiPoly const &got) {
    if (!report.first_mismatch.empty() || want == got) return;
    MultiPoly diff = got - want;
    auto const &[m, _] = *diff.terms().begin();
    report.first_mismatch = std::string(name) + " " + MultiPoly::monomial(m).to_string() +
                            ": expected " + want.coefficient(m).to_string() + ", got " +
                            got.coefficient(m).to_string();
  };
  compare("pX", expected.pX, reduced.pX);
  compare("pY", expected.pY, reduced.pY);
  compare("pI", expected.pI, reduced.pI);
  report.pass = report.first_mismatch.empty() && report.c_free;
  return report;
}

inline ZFormReport check_z_form(int order) { return check_z_form(dynkin_expand(order), order); }

} // namespace bchkit

#endif
