#ifndef BCHKIT_MATRIX_DECOMPOSITIONS_HPP
#define BCHKIT_MATRIX_DECOMPOSITIONS_HPP

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "bchkit/matrix/dense_matrix.hpp"

namespace bchkit {

namespace detail {
template <class Scalar> RealOf<Scalar> abs2(Scalar const &z) {
  return real(z) * real(z) + imag(z) * imag(z);
}
} // namespace detail

template <class Scalar> struct SchurForm {
  DenseMatrix<Scalar> q; ///< unitary
  DenseMatrix<Scalar> t; ///< upper triangular, a = q t q^H
};

/// Complex Schur form: Householder reduction to Hessenberg form followed by
/// single-shift QR with Wilkinson shifts.
template <class Scalar> SchurForm<Scalar> complex_schur(DenseMatrix<Scalar> const &a) {
  using Real = RealOf<Scalar>;
  using std::sqrt;
  std::size_t const n = a.dimension();
  DenseMatrix<Scalar> h = a;
  DenseMatrix<Scalar> q = DenseMatrix<Scalar>::identity(n);
  Real const eps = std::numeric_limits<Real>::epsilon();

  for (std::size_t k = 0; k + 2 < n; ++k) {
    std::size_t m = n - k - 1;
    std::vector<Scalar> v(m);
    Real alpha2(0);
    for (std::size_t i = 0; i < m; ++i) {
      v[i] = h(k + 1 + i, k);
      alpha2 += detail::abs2(v[i]);
    }
    if (alpha2 == Real(0)) continue;
    Real alpha = sqrt(alpha2);
    Real a0 = abs(v[0]);
    Scalar phase = a0 == Real(0) ? Scalar(1) : v[0] / a0;
    v[0] += phase * alpha;
    Real vnorm2(0);
    for (auto const &x : v) vnorm2 += detail::abs2(x);
    if (vnorm2 == Real(0)) continue;
    Scalar const scale = Scalar(Real(2) / vnorm2);

    for (std::size_t j = k; j < n; ++j) {
      Scalar s(0);
      for (std::size_t i = 0; i < m; ++i) s += conj(v[i]) * h(k + 1 + i, j);
      s *= scale;
      for (std::size_t i = 0; i < m; ++i) h(k + 1 + i, j) -= v[i] * s;
    }
    auto right = [&](DenseMatrix<Scalar> &target) {
      for (std::size_t i = 0; i < n; ++i) {
        Scalar s(0);
        for (std::size_t j = 0; j < m; ++j) s += target(i, k + 1 + j) * v[j];
        s *= scale;
        for (std::size_t j = 0; j < m; ++j) target(i, k + 1 + j) -= s * conj(v[j]);
      }
    };
    right(h);
    right(q);
    for (std::size_t i = k + 2; i < n; ++i) h(i, k) = Scalar(0);
  }

  std::size_t hi = n == 0 ? 0 : n - 1;
  int iterations = 0;
  int const max_iterations = 60 * static_cast<int>(n) + 60;
  std::vector<Scalar> cs(n), sn(n);
  while (hi > 0) {
    std::size_t l = hi;
    while (l > 0) {
      Real scale = abs(h(l - 1, l - 1)) + abs(h(l, l));
      if (scale == Real(0)) scale = h.norm1();
      if (abs(h(l, l - 1)) <= eps * scale) {
        h(l, l - 1) = Scalar(0);
        break;
      }
      --l;
    }
    if (l == hi) {
      --hi;
      iterations = 0;
      continue;
    }
    if (++iterations > max_iterations)
      throw std::runtime_error("complex_schur: QR iteration did not converge");

    Scalar mu;
    if (iterations % 11 == 10) {
      mu = h(hi, hi) + Scalar(Real(0.75) * abs(h(hi, hi - 1)));
    } else {
      Scalar a11 = h(hi - 1, hi - 1), a12 = h(hi - 1, hi), a21 = h(hi, hi - 1), a22 = h(hi, hi);
      Scalar half = (a11 - a22) / Scalar(2);
      Scalar disc = sqrt(half * half + a12 * a21);
      Scalar mid = (a11 + a22) / Scalar(2);
      Scalar m1 = mid + disc, m2 = mid - disc;
      mu = abs(m1 - a22) < abs(m2 - a22) ? m1 : m2;
    }

    for (std::size_t k = l; k <= hi; ++k) h(k, k) -= mu;
    for (std::size_t k = l; k < hi; ++k) {
      Scalar x = h(k, k), y = h(k + 1, k);
      Real r = sqrt(detail::abs2(x) + detail::abs2(y));
      if (r == Real(0)) {
        cs[k] = Scalar(1);
        sn[k] = Scalar(0);
        continue;
      }
      Scalar c = x / r, s = y / r;
      cs[k] = c;
      sn[k] = s;
      for (std::size_t j = k; j < n; ++j) {
        Scalar h1 = h(k, j), h2 = h(k + 1, j);
        h(k, j) = conj(c) * h1 + conj(s) * h2;
        h(k + 1, j) = c * h2 - s * h1;
      }
      h(k + 1, k) = Scalar(0);
    }
    for (std::size_t k = l; k < hi; ++k) {
      Scalar c = cs[k], s = sn[k];
      std::size_t last = std::min(k + 2, hi);
      for (std::size_t i = 0; i <= last; ++i) {
        Scalar h1 = h(i, k), h2 = h(i, k + 1);
        h(i, k) = h1 * c + h2 * s;
        h(i, k + 1) = h2 * conj(c) - h1 * conj(s);
      }
      for (std::size_t i = 0; i < n; ++i) {
        Scalar q1 = q(i, k), q2 = q(i, k + 1);
        q(i, k) = q1 * c + q2 * s;
        q(i, k + 1) = q2 * conj(c) - q1 * conj(s);
      }
    }
    for (std::size_t k = l; k <= hi; ++k) h(k, k) += mu;
  }
  for (std::size_t i = 1; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) h(i, j) = Scalar(0);
  return {std::move(q), std::move(h)};
}

template <class Scalar> struct HermitianEigen {
  std::vector<RealOf<Scalar>> values;
  DenseMatrix<Scalar> vectors; ///< columns; a = V diag(values) V^H
};

/// Cyclic complex Jacobi. Rotations are skipped only when the pivot is small
/// relative to its own diagonal pair, which keeps tiny eigenvalues of
/// positive definite matrices accurate to working precision.
template <class Scalar> HermitianEigen<Scalar> hermitian_eigen(DenseMatrix<Scalar> a) {
  using Real = RealOf<Scalar>;
  using std::sqrt;
  std::size_t const n = a.dimension();
  Real const eps = std::numeric_limits<Real>::epsilon();
  DenseMatrix<Scalar> v = DenseMatrix<Scalar>::identity(n);
  for (std::size_t i = 0; i < n; ++i) a(i, i) = Scalar(real(a(i, i)));

  for (int sweep = 0; sweep < 80; ++sweep) {
    bool rotated = false;
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t r = p + 1; r < n; ++r) {
        Scalar apr = a(p, r);
        Real b = abs(apr);
        if (b == Real(0)) continue;
        Real app = real(a(p, p)), arr = real(a(r, r));
        if (b <= eps * sqrt(abs(app * arr)) && b <= eps * (abs(app) + abs(arr))) continue;
        rotated = true;
        Real theta = (arr - app) / (Real(2) * b);
        Real t = Real(1) / (abs(theta) + sqrt(theta * theta + Real(1)));
        if (theta < Real(0)) t = -t;
        Real c = Real(1) / sqrt(t * t + Real(1));
        Real s = t * c;
        Scalar e = apr / b; // e^{i phi}
        Scalar ec = conj(e);
        Scalar u_rp = Scalar(-s) * ec, u_rr = Scalar(c) * ec;
        for (std::size_t i = 0; i < n; ++i) {
          Scalar ap = a(i, p), ar = a(i, r);
          a(i, p) = ap * c + ar * u_rp;
          a(i, r) = ap * s + ar * u_rr;
        }
        for (std::size_t j = 0; j < n; ++j) {
          Scalar ap = a(p, j), ar = a(r, j);
          a(p, j) = ap * c - Scalar(s) * e * ar;
          a(r, j) = ap * s + Scalar(c) * e * ar;
        }
        for (std::size_t i = 0; i < n; ++i) {
          Scalar vp = v(i, p), vr = v(i, r);
          v(i, p) = vp * c + vr * u_rp;
          v(i, r) = vp * s + vr * u_rr;
        }
        a(p, r) = Scalar(0);
        a(r, p) = Scalar(0);
        a(p, p) = Scalar(real(a(p, p)));
        a(r, r) = Scalar(real(a(r, r)));
      }
    if (!rotated) {
      HermitianEigen<Scalar> out{std::vector<Real>(n), std::move(v)};
      for (std::size_t i = 0; i < n; ++i) out.values[i] = real(a(i, i));
      return out;
    }
  }
  throw std::runtime_error("hermitian_eigen: Jacobi sweeps did not converge");
}

} // namespace bchkit

#endif
