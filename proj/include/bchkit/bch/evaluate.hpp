#ifndef BCHKIT_BCH_EVALUATE_HPP
#define BCHKIT_BCH_EVALUATE_HPP

#include <map>
#include <stdexcept>

#include "bchkit/bch/lie_series.hpp"
#include "bchkit/matrix/dense_matrix.hpp"

namespace bchkit {

/// Substitutes mx, my for X, Y and sums the coefficient-weighted right-nested
/// brackets. Shared suffixes are bracketed once.
template <class Scalar>
DenseMatrix<Scalar> evaluate_in_matrices(LieSeries const &series, DenseMatrix<Scalar> const &mx,
                                         DenseMatrix<Scalar> const &my) {
  using Real = RealOf<Scalar>;
  if (mx.dimension() != my.dimension())
    throw std::invalid_argument("evaluate_in_matrices: dimension mismatch");
  std::map<LieWord, DenseMatrix<Scalar>> cache;
  auto letter_matrix = [&](Letter l) -> DenseMatrix<Scalar> const & {
    return l == Letter::X ? mx : my;
  };
  auto bracket = [&](auto &self, LieWord const &w) -> DenseMatrix<Scalar> const & {
    auto it = cache.find(w);
    if (it != cache.end()) return it->second;
    DenseMatrix<Scalar> value;
    if (w.length() == 1) {
      value = letter_matrix(w.at(0));
    } else {
      LieWord tail;
      for (int i = 1; i < w.length(); ++i) tail = tail.appended(w.at(i));
      value = commutator(letter_matrix(w.at(0)), self(self, tail));
    }
    return cache.emplace(w, std::move(value)).first->second;
  };

  DenseMatrix<Scalar> out(mx.dimension());
  for (auto const &[word, coeff] : series.terms()) {
    Real c = rational_to<Real>(coeff);
    out += bracket(bracket, word) * Scalar(c);
  }
  return out;
}

} // namespace bchkit

#endif
