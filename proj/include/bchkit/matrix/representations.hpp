#ifndef BCHKIT_MATRIX_REPRESENTATIONS_HPP
#define BCHKIT_MATRIX_REPRESENTATIONS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>

#include "bchkit/matrix/dense_matrix.hpp"

namespace bchkit {

/// 2x2 realization of [X,Y] = uX + vY + cI; p splits the identity shift
/// between X and Y.
struct TwoByTwoFamily {
  double u = 0;
  double v = 0;
  double c = 0;
  double p = 0;
};

/// X = -(cp/u) I + [[v/2, 1], [0, -v/2]], Y = -(c(1-p)/v) I + [[-u/2, 1], [0, u/2]].
template <class Scalar>
std::pair<DenseMatrix<Scalar>, DenseMatrix<Scalar>> build_two_by_two(TwoByTwoFamily const &f) {
  using Real = RealOf<Scalar>;
  if (!std::isfinite(f.u) || !std::isfinite(f.v) || !std::isfinite(f.c) || !std::isfinite(f.p))
    throw std::domain_error("build_two_by_two: non-finite parameter");
  if (f.c != 0 && (f.u == 0 || f.v == 0))
    throw std::domain_error("build_two_by_two: c != 0 needs u != 0 and v != 0");
  Real u(f.u), v(f.v), c(f.c), p(f.p);
  Real shift_x = f.c == 0 ? Real(0) : -c * p / u;
  Real shift_y = f.c == 0 ? Real(0) : -c * (Real(1) - p) / v;
  DenseMatrix<Scalar> x(2), y(2);
  x(0, 0) = Scalar(v / Real(2) + shift_x);
  x(0, 1) = Scalar(1);
  x(1, 1) = Scalar(-v / Real(2) + shift_x);
  y(0, 0) = Scalar(-u / Real(2) + shift_y);
  y(0, 1) = Scalar(1);
  y(1, 1) = Scalar(u / Real(2) + shift_y);
  return {std::move(x), std::move(y)};
}

/// uX + vY + cI.
template <class Scalar>
DenseMatrix<Scalar> special_combination(DenseMatrix<Scalar> const &x, DenseMatrix<Scalar> const &y,
                                        double u, double v, double c) {
  using Real = RealOf<Scalar>;
  return x * Scalar(Real(u)) + y * Scalar(Real(v)) +
         DenseMatrix<Scalar>::identity(x.dimension()) * Scalar(Real(c));
}

/// [M, N] for diagonal N, entrywise M_ij (N_jj - N_ii). With integer N this
/// is exact in floating point.
template <class Scalar>
DenseMatrix<Scalar> commutator_with_diagonal(DenseMatrix<Scalar> const &m, DenseMatrix<Scalar> const &n) {
  std::size_t const dim = m.dimension();
  DenseMatrix<Scalar> out(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j)
      if (m(i, j) != Scalar(0)) out(i, j) = m(i, j) * (n(j, j) - n(i, i));
  return out;
}

/// Truncated ladder operators on span{|0>, ..., |D-1>}: a|n> = sqrt(n)|n-1>.
template <class Scalar> struct FockSpace {
  std::size_t dim = 0;
  DenseMatrix<Scalar> a;
  DenseMatrix<Scalar> a_dagger;
  DenseMatrix<Scalar> n;
};

template <class Scalar> FockSpace<Scalar> build_fock(int dim) {
  using Real = RealOf<Scalar>;
  using std::sqrt;
  if (dim < 4) throw std::invalid_argument("build_fock: dimension must be at least 4, got " +
                                           std::to_string(dim));
  std::size_t const d = static_cast<std::size_t>(dim);
  FockSpace<Scalar> fs{d, DenseMatrix<Scalar>(d), DenseMatrix<Scalar>(d), DenseMatrix<Scalar>(d)};
  for (std::size_t k = 1; k < d; ++k) fs.a(k - 1, k) = Scalar(sqrt(Real(static_cast<int>(k))));
  fs.a_dagger = fs.a.transpose();
  for (std::size_t k = 0; k < d; ++k) fs.n(k, k) = Scalar(static_cast<int>(k));

  auto a2 = fs.a * fs.a;
  auto ad2 = fs.a_dagger * fs.a_dagger;
  Real const slack = Real(8 * dim) * std::numeric_limits<Real>::epsilon();
  if (max_abs_diff(fs.a_dagger * fs.a, fs.n) > slack ||
      commutator_with_diagonal(a2, fs.n) != a2 * Scalar(2) ||
      commutator_with_diagonal(ad2, fs.n) != ad2 * Scalar(-2))
    throw std::logic_error("build_fock: ladder invariants failed");
  return fs;
}

} // namespace bchkit

#endif
