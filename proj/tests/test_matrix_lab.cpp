#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <string>

#include <gtest/gtest.h>

#include "bchkit/bch/dynkin.hpp"
#include "bchkit/bch/evaluate.hpp"
#include "bchkit/matrix/decompositions.hpp"
#include "bchkit/matrix/verify.hpp"

using namespace bchkit;
using C = std::complex<double>;

namespace {

MatrixD random_matrix(std::mt19937_64 &rng, std::size_t n, double norm_bound) {
  std::uniform_real_distribution<double> d(-1, 1);
  MatrixD m(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m(i, j) = C(d(rng), d(rng));
  return m * C(norm_bound / static_cast<double>(m.norm1()));
}

bool has_note(VerificationReport const &r, std::string const &prefix) {
  for (auto const &n : r.notes)
    if (n.rfind(prefix, 0) == 0) return true;
  return false;
}

} // namespace

TEST(DenseMatrix, Basics) {
  MatrixD m{{C(1), C(2, 1)}, {C(0), C(3)}};
  EXPECT_EQ(m.dimension(), 2u);
  EXPECT_TRUE(m.is_upper_triangular());
  EXPECT_FALSE(m.is_hermitian());
  EXPECT_EQ(m.adjoint()(1, 0), C(2, -1));
  EXPECT_EQ((m * MatrixD::identity(2)), m);
  EXPECT_EQ(m.block(1)(0, 0), C(1));
  EXPECT_THROW(m.block(3), std::out_of_range);
  EXPECT_THROW((MatrixD{{C(1), C(2)}, {C(3)}}), std::invalid_argument);
  EXPECT_THROW(m + MatrixD(3), std::invalid_argument);
  EXPECT_EQ(MatrixD::working_precision, WorkingPrecision::standard);
  EXPECT_EQ(MatrixX::working_precision, WorkingPrecision::extended);
  auto ext = m.cast<ExtendedComplex>();
  EXPECT_EQ(ext.cast<C>(), m);
}

TEST(MatExp, Examples) {
  EXPECT_EQ(mat_exp(MatrixD(3)), MatrixD::identity(3));
  MatrixD nil{{C(0), C(1)}, {C(0), C(0)}};
  EXPECT_EQ(mat_exp(nil), (MatrixD{{C(1), C(1)}, {C(0), C(1)}}));

  for (double v : {-1.3, 0.4, 2.0}) {
    auto [x, y] = build_two_by_two<C>({0.7, v, 0, 0});
    auto e = mat_exp(x);
    EXPECT_NEAR(std::abs(e(0, 0) - std::exp(v / 2)), 0, 1e-14);
    EXPECT_NEAR(std::abs(e(1, 1) - std::exp(-v / 2)), 0, 1e-14);
    EXPECT_NEAR(std::abs(e(0, 1) - std::sinh(v / 2) / (v / 2)), 0, 1e-14);
    EXPECT_EQ(e(1, 0), C(0));
  }
}

TEST(MatExp, DiagonalAndGeneral) {
  auto d = MatrixD::diagonal({C(1), C(-2), C(0, 1)});
  auto e = mat_exp(d);
  EXPECT_EQ(e(0, 0), std::exp(C(1)));
  EXPECT_EQ(e(2, 2), std::exp(C(0, 1)));

  // Rotation generator.
  double th = 0.9;
  MatrixD r{{C(0), C(-th)}, {C(th), C(0)}};
  auto er = mat_exp(r);
  EXPECT_NEAR(er(0, 0).real(), std::cos(th), 1e-15);
  EXPECT_NEAR(er(1, 0).real(), std::sin(th), 1e-15);

  // e^M = e^l (cosh m I + sinh(m)/m (M - l I)) with eigenvalues l +- m.
  MatrixD big{{C(12), C(5)}, {C(-3), C(-8)}};
  C l = 2.0, m = std::sqrt(C(100 - 15));
  auto closed = (MatrixD::identity(2) * std::cosh(m) + (big - MatrixD::identity(2) * l) * (std::sinh(m) / m)) *
                std::exp(l);
  EXPECT_LT(max_abs_diff(mat_exp(big), closed) / closed.max_abs(), 1e-13);
  MatrixD bad{{C(NAN), C(0)}, {C(0), C(1)}};
  EXPECT_THROW(mat_exp(bad), std::domain_error);
}

TEST(MatLog, Examples) {
  EXPECT_EQ(mat_log(MatrixD::identity(3)), MatrixD(3));
  double e = std::numbers::e;
  auto l = mat_log(MatrixD::diagonal({C(e), C(e * e)}));
  EXPECT_LT(max_abs_diff(l, MatrixD::diagonal({C(1), C(2)})), 1e-15);

  for (auto [u, v] : {std::pair{1.0, 2.0}, {-0.5, 1.5}, {0.8, -0.3}}) {
    auto [x, y] = build_two_by_two<C>({u, v, 0, 0});
    auto z = mat_log(mat_exp(x) * mat_exp(y));
    EXPECT_NEAR(std::abs(z(0, 0) - (v - u) / 2), 0, 1e-14);
    EXPECT_NEAR(std::abs(z(1, 1) - (u - v) / 2), 0, 1e-14);
    EXPECT_NEAR(std::abs(z(0, 1) - (2 + (u + v) * f_eval(u, v).value)), 0, 1e-13);
  }
}

TEST(MatLog, RejectsNegativeSpectrum) {
  try {
    mat_log(MatrixD::diagonal({C(2), C(-1.5)}));
    FAIL();
  } catch (std::domain_error const &e) {
    EXPECT_NE(std::string(e.what()).find("-1.5"), std::string::npos) << e.what();
  }
  MatrixD rot{{C(-1), C(0.5)}, {C(0), C(3)}};
  EXPECT_THROW(mat_log(rot), std::domain_error);
  MatrixD herm{{C(1), C(2)}, {C(2), C(1)}};
  EXPECT_THROW(mat_log(herm), std::domain_error);
  EXPECT_THROW(mat_log(MatrixD(2)), std::domain_error);
}

TEST(MatLog, RoundTrip) {
  std::mt19937_64 rng(1234);
  for (std::size_t n : {2u, 3u, 5u, 8u}) {
    for (int trial = 0; trial < 15; ++trial) {
      auto m = random_matrix(rng, n, 2.0);
      auto e = mat_exp(m);
      EXPECT_LT(max_abs_diff(mat_log(e), m), 1e-11);
      EXPECT_LT(max_abs_diff(mat_exp(mat_log(e)), e), 1e-11 * static_cast<double>(e.max_abs()));
    }
  }
}

TEST(MatLog, HermitianPath) {
  std::mt19937_64 rng(99);
  auto m = random_matrix(rng, 6, 1.5);
  auto h = (m + m.adjoint()) * C(0.5);
  auto p = mat_exp(h);
  p = (p + p.adjoint()) * C(0.5);
  EXPECT_LT(max_abs_diff(mat_log(p), h), 1e-13);
}

TEST(MatLog, ExtendedPrecision) {
  std::mt19937_64 rng(5);
  auto m = random_matrix(rng, 4, 1.5).cast<ExtendedComplex>();
  auto err = max_abs_diff(mat_log(mat_exp(m)), m);
  EXPECT_LT(static_cast<double>(err), 1e-40);
}

TEST(Decompositions, SchurReconstructs) {
  std::mt19937_64 rng(21);
  auto a = random_matrix(rng, 6, 4.0);
  auto [q, t] = complex_schur(a);
  EXPECT_TRUE(t.is_upper_triangular());
  EXPECT_LT(max_abs_diff(q * t * q.adjoint(), a), 1e-13);
  EXPECT_LT(max_abs_diff(q.adjoint() * q, MatrixD::identity(6)), 1e-14);
}

TEST(Decompositions, HermitianEigen) {
  MatrixD h{{C(2), C(0, 1)}, {C(0, -1), C(2)}};
  auto [values, vectors] = hermitian_eigen(h);
  std::sort(values.begin(), values.end());
  EXPECT_NEAR(values[0], 1, 1e-15);
  EXPECT_NEAR(values[1], 3, 1e-15);
}

TEST(BuildTwoByTwo, CommutatorRelation) {
  for (double p : {0.0, 0.3, 1.0, -2.0})
    for (double c : {0.0, 1.0, -0.7})
      for (auto [u, v] : {std::pair{1.0, 2.0}, {-0.5, 0.25}, {3.0, -3.0}}) {
        auto [x, y] = build_two_by_two<C>({u, v, c, p});
        auto comm = commutator(x, y);
        EXPECT_LT(max_abs_diff(comm, special_combination(x, y, u, v, c)), 1e-15 * (1 + std::abs(c)));
        EXPECT_LT(max_abs_diff(comm, MatrixD{{C(0), C(u + v)}, {C(0), C(0)}}), 1e-15);
      }
}

TEST(BuildTwoByTwo, Examples) {
  auto [x0, y0] = build_two_by_two<C>({0.5, 1.5, 0, 0.3});
  EXPECT_EQ(x0, (MatrixD{{C(0.75), C(1)}, {C(0), C(-0.75)}}));
  EXPECT_EQ(y0, (MatrixD{{C(-0.25), C(1)}, {C(0), C(0.25)}}));

  auto [x1, y1] = build_two_by_two<C>({0.5, 1.5, 1, 0});
  EXPECT_EQ(x1, x0);
  EXPECT_EQ(y1(0, 0), C(-0.25 - 1 / 1.5));

  auto [xn, yn] = build_two_by_two<C>({0, 0, 0, 0});
  EXPECT_EQ(commutator(xn, yn), MatrixD(2));
  EXPECT_EQ(xn(0, 0), C(0));

  EXPECT_THROW(build_two_by_two<C>({0, 1, 1, 0}), std::domain_error);
  EXPECT_THROW(build_two_by_two<C>({1, 0, 1, 0}), std::domain_error);
  EXPECT_THROW(build_two_by_two<C>({1, NAN, 0, 0}), std::domain_error);
}

TEST(BuildFock, Examples) {
  EXPECT_THROW(build_fock<C>(2), std::invalid_argument);
  auto f4 = build_fock<C>(4);
  EXPECT_EQ(f4.n, MatrixD::diagonal({C(0), C(1), C(2), C(3)}));
  EXPECT_EQ(f4.a(0, 1), C(1));
  EXPECT_EQ(f4.a_dagger, f4.a.transpose());
}

TEST(BuildFock, ExactQuadraticCommutators) {
  for (int d : {4, 5, 9, 16, 33}) {
    auto fs = build_fock<C>(d);
    auto a2 = fs.a * fs.a, ad2 = fs.a_dagger * fs.a_dagger;
    EXPECT_EQ(commutator_with_diagonal(a2, fs.n) - a2 * C(2), MatrixD(fs.dim));
    EXPECT_EQ(commutator_with_diagonal(ad2, fs.n) + ad2 * C(2), MatrixD(fs.dim));
  }
}

TEST(BuildFock, TruncationArtifact) {
  auto fs = build_fock<C>(5);
  auto a2 = fs.a * fs.a, ad2 = fs.a_dagger * fs.a_dagger;
  auto defect = commutator(a2, ad2) - (fs.n * C(4) + MatrixD::identity(5) * C(2));
  for (std::size_t i = 0; i < 5; ++i)
    for (std::size_t j = 0; j < 5; ++j) {
      if (i <= 2 && j <= 2) EXPECT_LT(std::abs(defect(i, j)), 1e-14) << i << "," << j;
      if (i >= 3 || j >= 3) EXPECT_LT(std::abs(defect(i, j) - (i == j ? defect(i, i) : C(0))), 1e-14);
    }
  EXPECT_GT(std::abs(defect(3, 3)), 1);
  EXPECT_GT(std::abs(defect(4, 4)), 1);
}

TEST(VerifyTwoByTwo, Examples) {
  auto nil = verify_bch_2x2({0, 0, 0, 0}, 1e-15);
  EXPECT_TRUE(nil.pass) << nil.max_abs_error;
  auto r = verify_bch_2x2({1, 2, 0, 0}, 1e-12);
  EXPECT_TRUE(r.pass) << r.max_abs_error;
  EXPECT_EQ(r.command, "verify two-by-two");
  EXPECT_TRUE(has_note(r, "f branch: "));
  EXPECT_TRUE(has_note(r, "working precision: standard"));
}

TEST(VerifyTwoByTwo, Grid) {
  double const uv[] = {-2, -1, -0.5, 0.5, 1, 2};
  for (double u : uv)
    for (double v : uv)
      for (double c : {0.0, 1.0, -0.7})
        for (double p : {0.0, 0.3, 1.0}) {
          auto r = verify_bch_2x2({u, v, c, p}, 1e-12);
          EXPECT_TRUE(r.pass) << u << " " << v << " " << c << " " << p << ": " << r.max_abs_error;
        }
}

TEST(VerifyTwoByTwo, NearDiagonalUsesExtendedPrecision) {
  auto r = verify_bch_2x2({1, 1 + 1e-4, 0.5, 0.2}, 1e-12);
  EXPECT_TRUE(r.pass) << r.max_abs_error;
  EXPECT_TRUE(has_note(r, "working precision: extended"));
}

TEST(VerifyTwoByTwo, IndependentOfSplit) {
  for (auto [u, v, c] : {std::tuple{1.0, 2.0, 1.0}, {-0.5, 1.5, -0.7}, {2.0, -1.0, 0.3}}) {
    double a = verify_bch_2x2({u, v, c, 0}, 1).max_abs_error;
    double b = verify_bch_2x2({u, v, c, 1}, 1).max_abs_error;
    EXPECT_LT(std::abs(a - b), 1e-12);
  }
}

TEST(VerifyTwoByTwo, ConsistentWithSeries) {
  auto series = dynkin_expand(8);
  auto [x, y] = build_two_by_two<C>({1, 2, 0, 0});
  auto residual = [&](double eps) {
    auto xs = x * C(eps), ys = y * C(eps);
    return max_abs_diff(evaluate_in_matrices(series, xs, ys), mat_log(mat_exp(xs) * mat_exp(ys)));
  };
  double ratio = residual(0.5) / residual(0.25);
  EXPECT_GT(ratio, 256);
  EXPECT_LT(ratio, 1024);
}

TEST(VerifyBraiding, Examples) {
  for (auto f : {TwoByTwoFamily{1, 1, 0, 0}, {0.5, -1.5, 2, 0.5}, {-2, 0.5, 1, 0.3}, {0.7, 0, 0, 0}}) {
    auto r = verify_braiding(f, 1e-12);
    EXPECT_TRUE(r.pass) << f.u << " " << f.v << ": " << r.max_abs_error;
  }
  // Commuting pair: Y zeroed.
  auto [x, y] = build_two_by_two<C>({0, 0, 0, 0});
  MatrixD zero(2);
  EXPECT_EQ(mat_exp(x) * mat_exp(zero), mat_exp(zero) * mat_exp(x));
}

TEST(VerifyShifted, Examples) {
  for (auto f : {TwoByTwoFamily{0, 0.9, 0, 0}, {0.4, 0.9, 0, 0}, {0.4, 0.9, 1.3, 0.2}, {-1, -0.5, 0.6, 0.5}}) {
    auto r = verify_shifted(f, 1e-12);
    EXPECT_TRUE(r.pass) << f.u << " " << f.v << " " << f.c << ": " << r.max_abs_error;
  }
  EXPECT_THROW(verify_shifted({0.4, 0, 0, 0}, 1e-12), std::domain_error);
}

TEST(VerifyFockQuadratic, Examples) {
  EXPECT_TRUE(verify_fock_quadratic(0, 0.3, 12, 1e-25).pass);
  auto r = verify_fock_quadratic(0.3, 0.25, 40, 1e-9);
  EXPECT_TRUE(r.pass) << r.max_abs_error;
  EXPECT_EQ(r.notes.size(), 3u);
  EXPECT_TRUE(verify_fock_quadratic(-0.4, -0.5, 20, 1e-20).pass);
}

TEST(VerifyFockQuadratic, CoefficientFormula) {
  double s = 0.1, t = 0.1;
  double printed = 2 * s * t * std::exp(2 * t) / (std::exp(2 * t) - 1);
  EXPECT_NEAR(s * detail::x_over_one_minus_exp(2 * t), printed, 1e-15);
  double printed_dagger = -2 * s * t * std::exp(-2 * t) / (std::exp(-2 * t) - 1);
  EXPECT_NEAR(s * detail::x_over_one_minus_exp(-2 * t), printed_dagger, 1e-15);
}

TEST(VerifyFockW, ZeroAndSmall) {
  auto zero = verify_fock_w(C(0), 16, 4, 1e-30);
  EXPECT_TRUE(zero.pass) << zero.max_abs_error;

  FockWDetail d;
  auto r = verify_fock_w(C(0.1), 16, 4, 1e-6, 0, &d);
  EXPECT_TRUE(r.pass) << r.max_abs_error;
  EXPECT_EQ(r.inputs[3].second, 24);
  EXPECT_LE(d.agreement, 1e-6);

  double w = 1e-3;
  EXPECT_NEAR(std::expm1(2 * w) / 2 - w, w * w, 2 * w * w * w);
}

TEST(VerifyFockW, ReportsFailureStatus) {
  auto r = verify_fock_w(C(0, 0.3), 16, 4, 1e-12);
  EXPECT_FALSE(r.pass);
  EXPECT_TRUE(has_note(r, "status: not converged") || has_note(r, "status: identity violated"));
}

TEST(VerifyFockW, RejectsBadBlocks) {
  EXPECT_THROW(verify_fock_w(C(0.1), 16, 5, 1e-6), std::invalid_argument);
  EXPECT_THROW(verify_fock_w(C(0.1), 16, 0, 1e-6), std::invalid_argument);
  EXPECT_THROW(verify_fock_w(C(0.1), 16, 4, 1e-6, 12), std::invalid_argument);
}
