#ifndef BCHKIT_MATRIX_DENSE_MATRIX_HPP
#define BCHKIT_MATRIX_DENSE_MATRIX_HPP

#include <algorithm>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "bchkit/precision.hpp"

namespace bchkit {

/// Square complex matrix, row-major. Scalar is std::complex<double> or
/// ExtendedComplex; the working precision follows from it.
template <class Scalar> class DenseMatrix {
public:
  using scalar_type = Scalar;
  using Real = RealOf<Scalar>;
  static constexpr WorkingPrecision working_precision = ScalarTraits<Scalar>::precision;

  explicit DenseMatrix(std::size_t dimension = 0)
      : n_(dimension), a_(dimension * dimension, Scalar(0)) {}

  DenseMatrix(std::initializer_list<std::initializer_list<Scalar>> rows) : n_(rows.size()) {
    a_.reserve(n_ * n_);
    for (auto const &row : rows) {
      if (row.size() != n_) throw std::invalid_argument("DenseMatrix: rows must form a square");
      a_.insert(a_.end(), row.begin(), row.end());
    }
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = Scalar(1);
    return m;
  }

  static DenseMatrix diagonal(std::vector<Scalar> const &d) {
    DenseMatrix m(d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
  }

  std::size_t dimension() const { return n_; }

  Scalar &operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
  Scalar const &operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

  DenseMatrix &operator+=(DenseMatrix const &o) {
    require_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] += o.a_[k];
    return *this;
  }
  DenseMatrix &operator-=(DenseMatrix const &o) {
    require_same(o);
    for (std::size_t k = 0; k < a_.size(); ++k) a_[k] -= o.a_[k];
    return *this;
  }
  DenseMatrix &operator*=(Scalar const &s) {
    for (auto &x : a_) x *= s;
    return *this;
  }

  friend DenseMatrix operator+(DenseMatrix a, DenseMatrix const &b) { return a += b; }
  friend DenseMatrix operator-(DenseMatrix a, DenseMatrix const &b) { return a -= b; }
  friend DenseMatrix operator-(DenseMatrix a) { return a *= Scalar(-1); }
  friend DenseMatrix operator*(DenseMatrix a, Scalar const &s) { return a *= s; }
  friend DenseMatrix operator*(Scalar const &s, DenseMatrix a) { return a *= s; }

  friend DenseMatrix operator*(DenseMatrix const &a, DenseMatrix const &b) {
    a.require_same(b);
    std::size_t n = a.n_;
    DenseMatrix out(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t k = 0; k < n; ++k) {
        Scalar const &aik = a(i, k);
        if (aik == Scalar(0)) continue;
        for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(DenseMatrix const &, DenseMatrix const &) = default;

  DenseMatrix adjoint() const {
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(j, i) = conj((*this)(i, j));
    return out;
  }

  DenseMatrix transpose() const {
    DenseMatrix out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) out(j, i) = (*this)(i, j);
    return out;
  }

  /// Leading k x k sub-block.
  DenseMatrix block(std::size_t k) const {
    if (k > n_) throw std::out_of_range("DenseMatrix: block larger than matrix");
    DenseMatrix out(k);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) out(i, j) = (*this)(i, j);
    return out;
  }

  Real max_abs() const {
    Real m(0);
    for (auto const &x : a_) m = std::max<Real>(m, abs(x));
    return m;
  }

  /// Maximum column sum.
  Real norm1() const {
    Real m(0);
    for (std::size_t j = 0; j < n_; ++j) {
      Real s(0);
      for (std::size_t i = 0; i < n_; ++i) s += abs((*this)(i, j));
      m = std::max<Real>(m, s);
    }
    return m;
  }

  bool all_finite() const {
    return std::all_of(a_.begin(), a_.end(), [](Scalar const &x) {
      return is_finite_real(real(x)) && is_finite_real(imag(x));
    });
  }

  bool is_upper_triangular() const {
    for (std::size_t i = 1; i < n_; ++i)
      for (std::size_t j = 0; j < i; ++j)
        if ((*this)(i, j) != Scalar(0)) return false;
    return true;
  }

  bool is_hermitian() const {
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = i; j < n_; ++j)
        if ((*this)(i, j) != conj((*this)(j, i))) return false;
    return true;
  }

  template <class To> DenseMatrix<To> cast() const {
    using ToReal = RealOf<To>;
    DenseMatrix<To> out(n_);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        Scalar const &x = (*this)(i, j);
        out(i, j) = To(static_cast<ToReal>(real(x)), static_cast<ToReal>(imag(x)));
      }
    return out;
  }

private:
  void require_same(DenseMatrix const &o) const {
    if (o.n_ != n_)
      throw std::invalid_argument("DenseMatrix: dimension mismatch " + std::to_string(n_) +
                                  " vs " + std::to_string(o.n_));
  }

  std::size_t n_;
  std::vector<Scalar> a_;
};

using MatrixD = DenseMatrix<std::complex<double>>;
using MatrixX = DenseMatrix<ExtendedComplex>;

template <class Scalar>
DenseMatrix<Scalar> commutator(DenseMatrix<Scalar> const &a, DenseMatrix<Scalar> const &b) {
  return a * b - b * a;
}

template <class Scalar>
RealOf<Scalar> max_abs_diff(DenseMatrix<Scalar> const &a, DenseMatrix<Scalar> const &b) {
  return (a - b).max_abs();
}

} // namespace bchkit

#endif
