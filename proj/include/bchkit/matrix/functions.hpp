#ifndef BCHKIT_MATRIX_FUNCTIONS_HPP
#define BCHKIT_MATRIX_FUNCTIONS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>

#include <boost/math/constants/constants.hpp>

#include "bchkit/matrix/decompositions.hpp"
#include "bchkit/matrix/dense_matrix.hpp"

namespace bchkit {

namespace detail {

template <class Scalar> void require_finite(DenseMatrix<Scalar> const &m, char const *who) {
  if (!m.all_finite()) throw std::domain_error(std::string(who) + ": non-finite entry");
}

template <class Scalar> std::string format_scalar(Scalar const &z) {
  std::ostringstream os;
  os.precision(17);
  os << static_cast<double>(real(z));
  double im = static_cast<double>(imag(z));
  if (im != 0.0) os << (im < 0 ? " - " : " + ") << std::abs(im) << "i";
  return os.str();
}

/// atanh by its odd power series for |z| <= 1/2; Boost's complex atanh
/// loses relative accuracy for tiny arguments.
template <class Scalar> Scalar atanh_small(Scalar const &z) {
  using Real = RealOf<Scalar>;
  using std::log;
  if (abs(z) > Real(0.5)) return (log(Scalar(1) + z) - log(Scalar(1) - z)) / Scalar(2);
  Real const eps = std::numeric_limits<Real>::epsilon();
  Scalar z2 = z * z, power = z, sum = z;
  for (int k = 3; k < 400; k += 2) {
    power *= z2;
    Scalar term = power / Scalar(k);
    sum += term;
    if (abs(term) <= eps * abs(sum)) break;
  }
  return sum;
}

/// (log b - log a) / (b - a) without cancellation when a and b are close.
template <class Scalar> Scalar log_divided_difference(Scalar const &a, Scalar const &b) {
  using Real = RealOf<Scalar>;
  using std::ceil;
  using std::log;
  if (a == b) return Scalar(1) / a;
  if (abs(a) < abs(b) / Real(2) || abs(b) < abs(a) / Real(2)) return (log(b) - log(a)) / (b - a);
  Real const pi = boost::math::constants::pi<Real>();
  Scalar z = (b - a) / (b + a);
  Real dim = imag(log(b)) - imag(log(a));
  Real unwind = ceil((dim - pi) / (Real(2) * pi));
  return (Scalar(2) * atanh_small(z) + Scalar(Real(0), Real(2) * pi * unwind)) / (b - a);
}

template <class Scalar> void check_principal_spectrum(DenseMatrix<Scalar> const &t) {
  using Real = RealOf<Scalar>;
  Real const eps = std::numeric_limits<Real>::epsilon();
  Real const scale = t.max_abs();
  for (std::size_t i = 0; i < t.dimension(); ++i) {
    Scalar const &lambda = t(i, i);
    bool on_axis = real(lambda) <= Real(0) &&
                   abs(imag(lambda)) <= Real(64) * eps * (scale > abs(lambda) ? scale : abs(lambda));
    if (on_axis)
      throw std::domain_error("mat_log: eigenvalue " + format_scalar(lambda) +
                              " lies on the closed negative real axis");
  }
}

/// Principal square root of an upper triangular matrix.
template <class Scalar> DenseMatrix<Scalar> sqrt_upper(DenseMatrix<Scalar> const &t) {
  using std::sqrt;
  std::size_t const n = t.dimension();
  DenseMatrix<Scalar> r(n);
  for (std::size_t i = 0; i < n; ++i) r(i, i) = sqrt(t(i, i));
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t i = 0; i + d < n; ++i) {
      std::size_t j = i + d;
      Scalar s = t(i, j);
      for (std::size_t k = i + 1; k < j; ++k) s -= r(i, k) * r(k, j);
      r(i, j) = s / (r(i, i) + r(j, j));
    }
  return r;
}

/// Parlett recurrence from F T = T F; accurate when the diagonal of T is
/// well separated.
template <class Scalar> DenseMatrix<Scalar> log_upper_parlett(DenseMatrix<Scalar> const &t) {
  using std::log;
  std::size_t const n = t.dimension();
  DenseMatrix<Scalar> f(n);
  for (std::size_t i = 0; i < n; ++i) f(i, i) = log(t(i, i));
  for (std::size_t d = 1; d < n; ++d)
    for (std::size_t i = 0; i + d < n; ++i) {
      std::size_t j = i + d;
      Scalar s = t(i, j) * (f(j, j) - f(i, i));
      for (std::size_t k = i + 1; k < j; ++k) s += t(i, k) * f(k, j) - f(i, k) * t(k, j);
      f(i, j) = s / (t(j, j) - t(i, i));
    }
  return f;
}

template <class Scalar> RealOf<Scalar> relative_separation(DenseMatrix<Scalar> const &t) {
  using Real = RealOf<Scalar>;
  Real sep(1);
  for (std::size_t i = 0; i < t.dimension(); ++i)
    for (std::size_t j = i + 1; j < t.dimension(); ++j) {
      Real scale = std::max<Real>(abs(t(i, i)), abs(t(j, j)));
      sep = std::min<Real>(sep, abs(t(j, j) - t(i, i)) / scale);
    }
  return sep;
}

/// Inverse scaling and squaring: repeated square roots until the triangle is
/// near I, then the Mercator series. In extended precision a well separated
/// spectrum goes through the Parlett recurrence instead, which is exact up to
/// rounding and far cheaper at that precision.
template <class Scalar> DenseMatrix<Scalar> log_upper(DenseMatrix<Scalar> const &t) {
  using Real = RealOf<Scalar>;
  using std::log;
  std::size_t const n = t.dimension();
  Real const eps = std::numeric_limits<Real>::epsilon();
  if (ScalarTraits<Scalar>::precision == WorkingPrecision::extended && n > 2 &&
      relative_separation(t) >= Real(0.05))
    return log_upper_parlett(t);
  auto const identity = DenseMatrix<Scalar>::identity(n);

  DenseMatrix<Scalar> r = t;
  int roots = 0;
  while ((r - identity).norm1() > Real(0.25)) {
    if (++roots > 200) throw std::runtime_error("mat_log: square roots did not converge");
    r = sqrt_upper(r);
  }
  DenseMatrix<Scalar> x = r - identity;
  DenseMatrix<Scalar> power = x;
  DenseMatrix<Scalar> sum = x;
  for (int k = 2; k < 2000; ++k) {
    power = power * x;
    Real size = power.max_abs();
    DenseMatrix<Scalar> term = power * Scalar(Real(k % 2 == 0 ? -1 : 1) / Real(k));
    sum += term;
    if (size <= eps * sum.max_abs() / Real(8) || size == Real(0)) break;
  }
  Real factor(1);
  for (int k = 0; k < roots; ++k) factor *= Real(2);
  sum *= Scalar(factor);

  for (std::size_t i = 0; i < n; ++i) sum(i, i) = log(t(i, i));
  for (std::size_t i = 0; i + 1 < n; ++i)
    sum(i, i + 1) = t(i, i + 1) * log_divided_difference(t(i, i), t(i + 1, i + 1));
  return sum;
}

template <class Scalar> bool is_strictly_triangular(DenseMatrix<Scalar> const &m) {
  for (std::size_t i = 0; i < m.dimension(); ++i)
    if (m(i, i) != Scalar(0)) return false;
  return m.is_upper_triangular() || m.transpose().is_upper_triangular();
}

} // namespace detail

/// e^M by scaling and squaring with an adaptively truncated Taylor series.
/// Diagonal and strictly triangular inputs are summed exactly.
template <class Scalar> DenseMatrix<Scalar> mat_exp(DenseMatrix<Scalar> const &m) {
  using Real = RealOf<Scalar>;
  detail::require_finite(m, "mat_exp");
  using std::exp;
  std::size_t const n = m.dimension();
  Real const eps = std::numeric_limits<Real>::epsilon();
  if (m.is_upper_triangular() && m.transpose().is_upper_triangular()) {
    DenseMatrix<Scalar> out(n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = exp(m(i, i));
    return out;
  }
  if (detail::is_strictly_triangular(m)) {
    DenseMatrix<Scalar> sum = DenseMatrix<Scalar>::identity(n);
    DenseMatrix<Scalar> term = sum;
    for (std::size_t k = 1; k < n; ++k) {
      term = term * m * Scalar(Real(1) / Real(static_cast<int>(k)));
      sum += term;
    }
    return sum;
  }
  Real norm = m.norm1();
  int squarings = 0;
  while (norm > Real(0.5)) {
    norm /= Real(2);
    ++squarings;
  }
  Real shrink(1);
  for (int s = 0; s < squarings; ++s) shrink /= Real(2);
  DenseMatrix<Scalar> a = m * Scalar(shrink);
  DenseMatrix<Scalar> sum = DenseMatrix<Scalar>::identity(n);
  DenseMatrix<Scalar> term = sum;
  for (int k = 1; k < 400; ++k) {
    term = term * a * Scalar(Real(1) / Real(k));
    sum += term;
    Real size = term.max_abs();
    if (size == Real(0) || size <= eps * sum.max_abs() / Real(8)) break;
  }
  for (int s = 0; s < squarings; ++s) sum = sum * sum;
  return sum;
}

/// Principal logarithm. Triangular inputs are handled directly; Hermitian
/// inputs use their eigendecomposition; anything else is reduced to complex
/// Schur form first.
template <class Scalar> DenseMatrix<Scalar> mat_log(DenseMatrix<Scalar> const &m) {
  using Real = RealOf<Scalar>;
  using std::log;
  detail::require_finite(m, "mat_log");
  std::size_t const n = m.dimension();
  if (n == 0) return m;
  if (m.is_upper_triangular()) {
    detail::check_principal_spectrum(m);
    return detail::log_upper(m);
  }
  if (auto mt = m.transpose(); mt.is_upper_triangular()) {
    detail::check_principal_spectrum(mt);
    return detail::log_upper(mt).transpose();
  }
  if (m.is_hermitian()) {
    auto eig = hermitian_eigen(m);
    DenseMatrix<Scalar> logs(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (eig.values[i] <= Real(0))
        throw std::domain_error("mat_log: eigenvalue " + detail::format_scalar(Scalar(eig.values[i])) +
                                " lies on the closed negative real axis");
      logs(i, i) = Scalar(log(eig.values[i]));
    }
    return eig.vectors * logs * eig.vectors.adjoint();
  }
  auto schur = complex_schur(m);
  detail::check_principal_spectrum(schur.t);
  return schur.q * detail::log_upper(schur.t) * schur.q.adjoint();
}

} // namespace bchkit

#endif
