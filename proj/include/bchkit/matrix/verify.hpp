#ifndef BCHKIT_MATRIX_VERIFY_HPP
#define BCHKIT_MATRIX_VERIFY_HPP

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "bchkit/matrix/functions.hpp"
#include "bchkit/matrix/representations.hpp"
#include "bchkit/special/f_eval.hpp"
#include "bchkit/special/formulas.hpp"

namespace bchkit {

struct VerificationReport {
  std::string command;
  std::vector<std::pair<std::string, double>> inputs;
  double max_abs_error = 0;
  double tolerance = 0;
  bool pass = false;
  std::vector<std::string> notes;

  void settle() { pass = max_abs_error <= tolerance; }
};

namespace detail {

inline std::string sci(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3e", x);
  return buf;
}

inline std::vector<std::pair<std::string, double>> family_inputs(TwoByTwoFamily const &f) {
  return {{"u", f.u}, {"v", f.v}, {"c", f.c}, {"p", f.p}};
}

/// Extended precision for tight tolerances near the diagonal, where the two
/// eigenvalues of e^X e^Y nearly coincide.
inline bool wants_extended(TwoByTwoFamily const &f, double tolerance) {
  return tolerance <= 1e-12 && std::abs(f.u - f.v) < 1e-3;
}

template <class Scalar> double bch_2x2_residual(TwoByTwoFamily const &f, double f_value) {
  using Real = RealOf<Scalar>;
  auto [x, y] = build_two_by_two<Scalar>(f);
  auto z = mat_log(mat_exp(x) * mat_exp(y));
  auto expected = x + y + special_combination(x, y, f.u, f.v, f.c) * Scalar(Real(f_value));
  return static_cast<double>(max_abs_diff(z, expected));
}

template <class Scalar> double braiding_residual(TwoByTwoFamily const &f, double alpha, double beta) {
  using Real = RealOf<Scalar>;
  auto [x, y] = build_two_by_two<Scalar>(f);
  auto comm = special_combination(x, y, f.u, f.v, f.c);
  auto ex = mat_exp(x), ey = mat_exp(y), emx = mat_exp(-x), emy = mat_exp(-y);
  auto ya = y + comm * Scalar(Real(alpha));
  auto xb = x + comm * Scalar(Real(beta));
  Real r = max_abs_diff(ex * ey, mat_exp(ya) * ex);
  r = std::max(r, max_abs_diff(ey * ex, mat_exp(xb) * ey));
  r = std::max(r, max_abs_diff(ex * y * emx, ya));
  r = std::max(r, max_abs_diff(ey * x * emy, xb));
  return static_cast<double>(r);
}

template <class Scalar> double shifted_residual(TwoByTwoFamily const &f, NumericElement const &rhs) {
  using Real = RealOf<Scalar>;
  auto [x, y] = build_two_by_two<Scalar>(f);
  auto y_shifted = x * Scalar(Real(f.u) / Real(f.v)) + y;
  auto z = mat_log(mat_exp(x) * mat_exp(y_shifted));
  auto expected = x * Scalar(Real(rhs.pX)) + y * Scalar(Real(rhs.pY)) +
                  DenseMatrix<Scalar>::identity(2) * Scalar(Real(rhs.pI));
  return static_cast<double>(max_abs_diff(z, expected));
}

inline std::string precision_note(bool extended) {
  return std::string("working precision: ") +
         to_string(extended ? WorkingPrecision::extended : WorkingPrecision::standard);
}

/// x / (1 - e^-x), 1 at x = 0.
template <class Real> Real x_over_one_minus_exp(Real const &x) {
  using boost::math::expm1;
  using std::expm1;
  return x == Real(0) ? Real(1) : -x / expm1(-x);
}

} // namespace detail

/// ln(e^X e^Y) against X + Y + f(u,v)(uX + vY + cI) in the 2x2 family.
inline VerificationReport verify_bch_2x2(TwoByTwoFamily const &f, double tolerance) {
  VerificationReport r{"verify two-by-two", detail::family_inputs(f), 0, tolerance, false, {}};
  auto fe = f_eval(f.u, f.v);
  bool extended = detail::wants_extended(f, tolerance);
  r.max_abs_error = extended ? detail::bch_2x2_residual<ExtendedComplex>(f, fe.value)
                             : detail::bch_2x2_residual<std::complex<double>>(f, fe.value);
  r.notes.push_back(std::string("f branch: ") + to_string(fe.branch));
  r.notes.push_back(detail::precision_note(extended));
  r.settle();
  return r;
}

inline VerificationReport verify_braiding(TwoByTwoFamily const &f, double tolerance) {
  VerificationReport r{"verify braiding", detail::family_inputs(f), 0, tolerance, false, {}};
  auto [alpha, beta] = braiding_coefficients({f.u, f.v, f.c});
  bool extended = detail::wants_extended(f, tolerance);
  r.max_abs_error = extended ? detail::braiding_residual<ExtendedComplex>(f, alpha, beta)
                             : detail::braiding_residual<std::complex<double>>(f, alpha, beta);
  r.notes.push_back("alpha = " + detail::sci(alpha) + ", beta = " + detail::sci(beta));
  r.notes.push_back(detail::precision_note(extended));
  r.settle();
  return r;
}

/// ln(e^X e^{(u/v)X + Y}) against shifted_rhs.
inline VerificationReport verify_shifted(TwoByTwoFamily const &f, double tolerance) {
  if (f.v == 0) throw std::domain_error("verify_shifted: v = 0 leaves (u/v)X undefined");
  VerificationReport r{"verify shifted", detail::family_inputs(f), 0, tolerance, false, {}};
  auto rhs = shifted_rhs({f.u, f.v, f.c});
  bool extended = detail::wants_extended(f, tolerance);
  r.max_abs_error = extended ? detail::shifted_residual<ExtendedComplex>(f, rhs)
                             : detail::shifted_residual<std::complex<double>>(f, rhs);
  r.notes.push_back(detail::precision_note(extended));
  r.settle();
  return r;
}

/// ln(e^{s a^2} e^{tN}) = s h(2t) a^2 + tN and ln(e^{s a+^2} e^{tN}) = s h(-2t) a+^2 + tN
/// with h(x) = x/(1 - e^-x), on the full truncated space.
/// Extended precision throughout: the products are triangular but strongly
/// non-normal, and their logarithm loses most of double precision.
inline VerificationReport verify_fock_quadratic(double s, double t, int dim, double tolerance) {
  using S = ExtendedComplex;
  using R = ExtendedReal;
  VerificationReport r{"verify fock", {{"s", s}, {"t", t}, {"dim", double(dim)}}, 0, tolerance, false, {}};
  auto fs = build_fock<S>(dim);
  auto a2 = fs.a * fs.a;
  auto ad2 = fs.a_dagger * fs.a_dagger;
  S const ss{R(s)}, tt{R(t)};
  auto etn = mat_exp(fs.n * tt);

  auto lhs1 = mat_log(mat_exp(a2 * ss) * etn);
  auto rhs1 = a2 * (ss * S(detail::x_over_one_minus_exp(R(2) * R(t)))) + fs.n * tt;
  double e1 = static_cast<double>(max_abs_diff(lhs1, rhs1));

  auto lhs2 = mat_log(mat_exp(ad2 * ss) * etn);
  auto rhs2 = ad2 * (ss * S(detail::x_over_one_minus_exp(R(-2) * R(t)))) + fs.n * tt;
  double e2 = static_cast<double>(max_abs_diff(lhs2, rhs2));

  r.max_abs_error = std::max(e1, e2);
  r.notes.push_back(detail::precision_note(true));
  r.notes.push_back("a^2 identity residual " + detail::sci(e1));
  r.notes.push_back("(a+)^2 identity residual " + detail::sci(e2));
  r.settle();
  return r;
}

struct FockWDetail {
  double residual_dim = 0;
  double residual_confirm = 0;
  double agreement = 0;
};

namespace detail {

/// Top-left block of ln(e^X e^Y) and of the closed form for
/// X = |w|N + conj(w) a^2, Y = X^dagger, in extended precision.
inline std::pair<MatrixX, MatrixX> fock_w_blocks(std::complex<double> w, int dim, int block) {
  using S = ExtendedComplex;
  using R = ExtendedReal;
  auto fs = build_fock<S>(dim);
  S wx(R(w.real()), R(w.imag()));
  R mod = abs(wx);
  auto a2 = fs.a * fs.a;
  auto ad2 = fs.a_dagger * fs.a_dagger;
  auto x = fs.n * S(mod) + a2 * conj(wx);
  auto e = mat_exp(x);
  auto prod = e * e.adjoint();
  prod = (prod + prod.adjoint()) * S(R(0.5));
  auto z = mat_log(prod);

  R two = R(2) * mod;
  R scale = mod == R(0) ? R(1) : boost::math::expm1(two) / two;
  R shift = (boost::math::expm1(two) - two) / R(2);
  auto closed = (fs.n * S(two) + a2 * conj(wx) + ad2 * wx) * S(scale) +
                MatrixX::identity(fs.dim) * S(shift);
  return {z.block(block), closed.block(block)};
}

} // namespace detail

/// The w-identity on a top-left block, with the two-dimension convergence
/// protocol. Always computed in extended precision: e^X e^Y is Hermitian
/// positive definite with condition number far beyond double range.
inline VerificationReport verify_fock_w(std::complex<double> w, int dim, int block, double tolerance,
                                        int confirm_dim = 0, FockWDetail *detail_out = nullptr) {
  if (confirm_dim == 0) confirm_dim = (3 * dim + 1) / 2;
  if (block < 1 || 4 * block > dim)
    throw std::invalid_argument("verify_fock_w: block must satisfy 1 <= block <= dim/4");
  if (confirm_dim < dim) throw std::invalid_argument("verify_fock_w: confirmation dimension below dim");
  VerificationReport r{"verify fock-w",
                       {{"w_re", w.real()}, {"w_im", w.imag()}, {"dim", double(dim)},
                        {"confirm_dim", double(confirm_dim)}, {"block", double(block)}},
                       0, tolerance, false, {}};
  auto [z1, c1] = detail::fock_w_blocks(w, dim, block);
  auto [z2, c2] = detail::fock_w_blocks(w, confirm_dim, block);
  FockWDetail d{static_cast<double>(max_abs_diff(z1, c1)), static_cast<double>(max_abs_diff(z2, c2)),
                static_cast<double>(max_abs_diff(z1, z2))};
  if (detail_out) *detail_out = d;
  r.max_abs_error = std::max({d.residual_dim, d.residual_confirm, d.agreement});
  r.notes.push_back("residual at dim " + std::to_string(dim) + ": " + detail::sci(d.residual_dim));
  r.notes.push_back("residual at dim " + std::to_string(confirm_dim) + ": " +
                    detail::sci(d.residual_confirm));
  r.notes.push_back("block agreement: " + detail::sci(d.agreement));
  r.notes.push_back(detail::precision_note(true));
  r.settle();
  if (!r.pass)
    r.notes.push_back(d.agreement > tolerance ? "status: not converged" : "status: identity violated");
  return r;
}

} // namespace bchkit

#endif
