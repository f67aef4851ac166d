#ifndef BCHKIT_EXACT_TRUNCATED_SERIES_HPP
#define BCHKIT_EXACT_TRUNCATED_SERIES_HPP

#include <algorithm>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "bchkit/exact/big_rational.hpp"
#include "bchkit/exact/multi_poly.hpp"
#include "bchkit/precision.hpp"

namespace bchkit {

/// Bivariate power series in (u, v) truncated at a total degree.
///
/// Coefficients are stored densely by total degree: the block for degree d
/// holds the d+1 coefficients of u^i v^(d-i), i = 0..d. Any product or
/// composition is truncated at the smaller max_total_degree of its inputs,
/// which makes every stored coefficient exact.
class TruncatedSeries2 {
public:
  explicit TruncatedSeries2(int max_total_degree = 0)
      : max_degree_(max_total_degree),
        coeffs_(slot_count(max_total_degree), BigRational(0)) {
    if (max_total_degree < 0)
      throw std::invalid_argument("TruncatedSeries2: negative degree");
  }

  static TruncatedSeries2 constant(int max_degree, BigRational const &value) {
    TruncatedSeries2 s(max_degree);
    s.at(0, 0) = value;
    return s;
  }

  /// a*u + b*v.
  static TruncatedSeries2 linear(int max_degree, BigRational const &a,
                                 BigRational const &b) {
    TruncatedSeries2 s(max_degree);
    if (max_degree >= 1) {
      s.at(1, 0) = a;
      s.at(0, 1) = b;
    }
    return s;
  }

  static TruncatedSeries2 u(int max_degree) { return linear(max_degree, 1, 0); }
  static TruncatedSeries2 v(int max_degree) { return linear(max_degree, 0, 1); }

  int max_degree() const { return max_degree_; }

  BigRational const &coefficient(int du, int dv) const {
    static BigRational const zero(0);
    if (du < 0 || dv < 0 || du + dv > max_degree_) return zero;
    return coeffs_[index(du, dv)];
  }

  BigRational &at(int du, int dv) {
    if (du < 0 || dv < 0 || du + dv > max_degree_)
      throw std::out_of_range("TruncatedSeries2: exponent beyond truncation");
    return coeffs_[index(du, dv)];
  }

  /// Same series with a lower truncation degree.
  TruncatedSeries2 truncated(int max_degree) const {
    if (max_degree > max_degree_)
      throw std::invalid_argument("TruncatedSeries2: cannot raise truncation degree");
    TruncatedSeries2 out(max_degree);
    std::copy_n(coeffs_.begin(), out.coeffs_.size(), out.coeffs_.begin());
    return out;
  }

  /// Coefficients of the v = 0 restriction, u^0..u^N.
  std::vector<BigRational> restrict_v_zero() const {
    std::vector<BigRational> out;
    for (int d = 0; d <= max_degree_; ++d) out.push_back(coefficient(d, 0));
    return out;
  }

  MultiPoly to_multi_poly() const {
    MultiPoly p;
    for (int d = 0; d <= max_degree_; ++d)
      for (int i = 0; i <= d; ++i) p.add_term({i, d - i, 0}, coefficient(i, d - i));
    return p;
  }

  template <class Real> Real evaluate(Real const &u, Real const &v) const;

  TruncatedSeries2 &operator+=(TruncatedSeries2 const &o) { return combine(o, 1); }
  TruncatedSeries2 &operator-=(TruncatedSeries2 const &o) { return combine(o, -1); }
  TruncatedSeries2 &operator*=(BigRational const &s) {
    for (auto &c : coeffs_) c *= s;
    return *this;
  }

  friend TruncatedSeries2 operator+(TruncatedSeries2 a, TruncatedSeries2 const &b) { return a += b; }
  friend TruncatedSeries2 operator-(TruncatedSeries2 a, TruncatedSeries2 const &b) { return a -= b; }
  friend TruncatedSeries2 operator*(TruncatedSeries2 a, BigRational const &s) { return a *= s; }
  friend TruncatedSeries2 operator*(BigRational const &s, TruncatedSeries2 a) { return a *= s; }
  friend TruncatedSeries2 operator-(TruncatedSeries2 a) { return a *= BigRational(-1); }

  friend TruncatedSeries2 operator*(TruncatedSeries2 const &a, TruncatedSeries2 const &b) {
    int n = std::min(a.max_degree_, b.max_degree_);
    TruncatedSeries2 out(n);
    for (int da = 0; da <= n; ++da)
      for (int ia = 0; ia <= da; ++ia) {
        BigRational const &ca = a.coefficient(ia, da - ia);
        if (ca.is_zero()) continue;
        for (int db = 0; da + db <= n; ++db)
          for (int ib = 0; ib <= db; ++ib) {
            BigRational const &cb = b.coefficient(ib, db - ib);
            if (cb.is_zero()) continue;
            out.at(ia + ib, da - ia + db - ib) += ca * cb;
          }
      }
    return out;
  }

  friend bool operator==(TruncatedSeries2 const &, TruncatedSeries2 const &) = default;

  std::string to_string() const {
    std::string out;
    for (int d = 0; d <= max_degree_; ++d)
      for (int i = 0; i <= d; ++i) {
        auto const &c = coefficient(i, d - i);
        if (c.is_zero()) continue;
        if (!out.empty()) out += " + ";
        out += c.to_string();
        if (i > 0) out += "*u" + (i > 1 ? "^" + std::to_string(i) : std::string());
        if (d - i > 0) out += "*v" + (d - i > 1 ? "^" + std::to_string(d - i) : std::string());
      }
    return out.empty() ? "0" : out;
  }

private:
  static std::size_t slot_count(int n) {
    return n < 0 ? 0 : static_cast<std::size_t>(n + 1) * static_cast<std::size_t>(n + 2) / 2;
  }
  static std::size_t index(int du, int dv) {
    int d = du + dv;
    return static_cast<std::size_t>(d) * static_cast<std::size_t>(d + 1) / 2 +
           static_cast<std::size_t>(du);
  }

  TruncatedSeries2 &combine(TruncatedSeries2 const &o, int sign) {
    int n = std::min(max_degree_, o.max_degree_);
    if (n < max_degree_) *this = truncated(n);
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
      if (sign > 0) coeffs_[k] += o.coeffs_[k];
      else coeffs_[k] -= o.coeffs_[k];
    }
    return *this;
  }

  int max_degree_;
  std::vector<BigRational> coeffs_;
};

template <class Real>
Real TruncatedSeries2::evaluate(Real const &u, Real const &v) const {
  // Horner over total degree would need homogeneous blocks in (u, v); the
  // powers are tabulated instead, which is accurate for |u|, |v| < 1.
  std::vector<Real> up(static_cast<std::size_t>(max_degree_) + 1, Real(1));
  std::vector<Real> vp(static_cast<std::size_t>(max_degree_) + 1, Real(1));
  for (int k = 1; k <= max_degree_; ++k) {
    up[k] = up[k - 1] * u;
    vp[k] = vp[k - 1] * v;
  }
  Real acc(0);
  for (int d = max_degree_; d >= 0; --d)
    for (int i = 0; i <= d; ++i) {
      auto const &c = coefficient(i, d - i);
      if (c.is_zero()) continue;
      acc += rational_to<Real>(c) * up[i] * vp[d - i];
    }
  return acc;
}

/// Linear form a*u + b*v with exact coefficients.
struct LinearForm {
  BigRational a;
  BigRational b;

  std::string to_string() const {
    return "(" + a.to_string() + ")*u + (" + b.to_string() + ")*v";
  }
};

/// exp(s) for a series without constant term.
inline TruncatedSeries2 series_exp(TruncatedSeries2 const &s) {
  if (!s.coefficient(0, 0).is_zero())
    throw std::domain_error("series_exp: constant term must be zero");
  int n = s.max_degree();
  // Euler operator E = u d/du + v d/dv scales the degree-d block by d, and
  // E(exp s) = E(s) exp(s), so block_d(exp s) = (1/d) sum_k k s_k block_{d-k}.
  TruncatedSeries2 result = TruncatedSeries2::constant(n, 1);
  for (int d = 1; d <= n; ++d) {
    BigRational inv_d(1, d);
    for (int k = 1; k <= d; ++k)
      for (int a = 0; a <= k; ++a) {
        auto const &sc = s.coefficient(a, k - a);
        if (sc.is_zero()) continue;
        BigRational weight = sc * BigRational(k) * inv_d;
        for (int i = 0; i <= d - k; ++i) {
          auto const &ec = result.coefficient(i, d - k - i);
          if (ec.is_zero()) continue;
          result.at(a + i, d - a - i) += weight * ec;
        }
      }
  }
  return result;
}

/// Exact quotient of s by a linear form. Each homogeneous block of degree d
/// must be divisible; the result is exact through degree max_degree - 1.
inline TruncatedSeries2 divide_by_linear(TruncatedSeries2 const &s, LinearForm const &form) {
  if (form.a.is_zero() && form.b.is_zero())
    throw std::domain_error("divide_by_linear: zero linear form");
  int n = s.max_degree();
  if (n < 1) throw std::domain_error("divide_by_linear: series has no degree to spare");
  auto fail = [&](int d) {
    throw std::domain_error("divide_after_factoring: factor " + form.to_string() +
                            " does not divide the degree-" + std::to_string(d) + " part");
  };
  if (!s.coefficient(0, 0).is_zero()) fail(0);

  TruncatedSeries2 q(n - 1);
  for (int d = 1; d <= n; ++d) {
    // (a u + b v) * sum_i q_i u^i v^(d-1-i) has u^i v^(d-i) coefficient
    // a q_{i-1} + b q_i.
    std::vector<BigRational> p(static_cast<std::size_t>(d) + 1);
    for (int i = 0; i <= d; ++i) p[i] = s.coefficient(i, d - i);
    std::vector<BigRational> quot(static_cast<std::size_t>(d));
    if (!form.a.is_zero()) {
      quot[d - 1] = p[d] / form.a;
      for (int i = d - 1; i >= 1; --i) quot[i - 1] = (p[i] - form.b * quot[i]) / form.a;
      if (!(p[0] == form.b * quot[0])) fail(d);
    } else {
      for (int i = 0; i < d; ++i) quot[i] = p[i] / form.b;
      if (!p[d].is_zero()) fail(d);
    }
    for (int i = 0; i < d; ++i) q.at(i, d - 1 - i) = quot[i];
  }
  return q;
}

/// 1/s for a series with nonzero constant term.
inline TruncatedSeries2 series_reciprocal(TruncatedSeries2 const &s) {
  BigRational const &c0 = s.coefficient(0, 0);
  if (c0.is_zero()) throw std::domain_error("series_reciprocal: zero constant term");
  int n = s.max_degree();
  TruncatedSeries2 r(n);
  BigRational inv0 = BigRational(1) / c0;
  r.at(0, 0) = inv0;
  for (int d = 1; d <= n; ++d)
    for (int i = 0; i <= d; ++i) {
      int j = d - i;
      BigRational acc(0);
      for (int a = 0; a <= i; ++a)
        for (int b = 0; b <= j; ++b) {
          if (a == 0 && b == 0) continue;
          auto const &sc = s.coefficient(a, b);
          if (sc.is_zero()) continue;
          acc += sc * r.coefficient(i - a, j - b);
        }
      r.at(i, j) = -(acc * inv0);
    }
  return r;
}

/// (num / prod factors) / (den / prod factors). Both inputs are deflated by
/// every factor in turn; the result is exact through degree
/// min(max degrees) - factors.size().
inline TruncatedSeries2 divide_after_factoring(TruncatedSeries2 num, TruncatedSeries2 den,
                                               std::span<LinearForm const> factors) {
  for (auto const &form : factors) {
    num = divide_by_linear(num, form);
    den = divide_by_linear(den, form);
  }
  if (den.coefficient(0, 0).is_zero())
    throw std::domain_error(
        "divide_after_factoring: deflated denominator has zero constant term");
  return num * series_reciprocal(den);
}

} // namespace bchkit

#endif
