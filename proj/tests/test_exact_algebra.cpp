#include <cmath>
#include <random>
#include <vector>

#include <gtest/gtest.h>

#include "bchkit/exact/f_taylor.hpp"
#include "bchkit/exact/series_identity.hpp"
#include "bchkit/exact/truncated_series.hpp"

using namespace bchkit;

namespace {

BigRational random_rational(std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 100000);
  return BigRational(num(rng), den(rng));
}

TruncatedSeries2 random_series(std::mt19937_64 &rng, int degree, double density = 0.6) {
  std::bernoulli_distribution keep(density);
  TruncatedSeries2 s(degree);
  for (int d = 0; d <= degree; ++d)
    for (int i = 0; i <= d; ++i)
      if (keep(rng)) s.at(i, d - i) = random_rational(rng);
  return s;
}

// Univariate truncated series over BigRational, written independently of
// TruncatedSeries2 so it can serve as an oracle.
std::vector<BigRational> univariate_divide(std::vector<BigRational> const &num,
                                           std::vector<BigRational> const &den) {
  std::vector<BigRational> q(num.size());
  for (std::size_t k = 0; k < num.size(); ++k) {
    BigRational acc = num[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= den[j] * q[k - j];
    q[k] = acc / den[0];
  }
  return q;
}

BigRational factorial_inverse(int k) {
  BigRational r(1);
  for (int i = 2; i <= k; ++i) r /= BigRational(i);
  return r;
}

} // namespace

TEST(BigRational, CanonicalForm) {
  BigRational r(6, -4);
  EXPECT_EQ(r.numerator_string(), "-3");
  EXPECT_EQ(r.denominator_string(), "2");
  EXPECT_EQ(BigRational::parse("10/4"), BigRational(5, 2));
  EXPECT_EQ(BigRational::parse("-7"), BigRational(-7));
  EXPECT_THROW(BigRational::parse("1/0"), std::domain_error);
  EXPECT_THROW(BigRational::parse("abc"), std::invalid_argument);
  EXPECT_THROW(BigRational(1) / BigRational(0), std::domain_error);
}

TEST(BigRational, AdditionIsExactlyInvertible) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    BigRational a = random_rational(rng);
    BigRational b = pow(random_rational(rng), 5);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) {
      EXPECT_EQ((a * b) / b, a);
    }
  }
}

TEST(MultiPoly, RingLawsOnRandomInstances) {
  std::mt19937_64 rng(12);
  std::uniform_int_distribution<int> exp(0, 3);
  auto random_poly = [&] {
    MultiPoly p;
    for (int k = 0; k < 6; ++k) p.add_term({exp(rng), exp(rng), exp(rng)}, random_rational(rng));
    return p;
  };
  for (int trial = 0; trial < 50; ++trial) {
    auto a = random_poly(), b = random_poly(), c = random_poly();
    EXPECT_EQ(a + b, b + a);
    EXPECT_EQ(a * b, b * a);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ((a + b) + c, a + (b + c));
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_TRUE((a - a).is_zero());
  }
}

TEST(MultiPoly, NeverStoresZeroCoefficients) {
  MultiPoly p = MultiPoly::u() + MultiPoly::v();
  p -= MultiPoly::u();
  EXPECT_EQ(p.terms().size(), 1u);
  EXPECT_EQ(p, MultiPoly::v());
  EXPECT_THROW((MultiPoly::u() + MultiPoly(1)).divide_by_variable(0), std::domain_error);
  EXPECT_EQ((MultiPoly::c() * MultiPoly::u()).divide_by_variable(2), MultiPoly::u());
}

TEST(TruncatedSeries2, RingLawsOnRandomDegree8Series) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 8; ++trial) {
    auto a = random_series(rng, 8), b = random_series(rng, 8), c = random_series(rng, 8);
    EXPECT_EQ(a * (b + c), a * b + a * c);
    EXPECT_EQ((a * b) * c, a * (b * c));
    EXPECT_EQ(a * b, b * a);
  }
}

TEST(TruncatedSeries2, ProductTruncatesConsistently) {
  // Degree-N product equals the full polynomial product truncated at N.
  std::mt19937_64 rng(14);
  auto a = random_series(rng, 5, 1.0), b = random_series(rng, 5, 1.0);
  MultiPoly full = a.to_multi_poly() * b.to_multi_poly();
  EXPECT_EQ((a * b).to_multi_poly(), full.truncated(5));
  auto low = a.truncated(3) * b;
  EXPECT_EQ(low.max_degree(), 3);
  EXPECT_EQ(low.to_multi_poly(), full.truncated(3));
}

TEST(SeriesExp, ZeroGivesOne) {
  auto e = series_exp(TruncatedSeries2(6));
  EXPECT_EQ(e, TruncatedSeries2::constant(6, 1));
}

TEST(SeriesExp, UnivariateExponential) {
  auto e = series_exp(TruncatedSeries2::u(3));
  TruncatedSeries2 expected(3);
  expected.at(0, 0) = 1;
  expected.at(1, 0) = 1;
  expected.at(2, 0) = BigRational(1, 2);
  expected.at(3, 0) = BigRational(1, 6);
  EXPECT_EQ(e, expected);
}

TEST(SeriesExp, SumOfVariablesDegree2) {
  // (u+v)^k/k! multiplied out by hand.
  auto e = series_exp(TruncatedSeries2::u(2) + TruncatedSeries2::v(2));
  TruncatedSeries2 expected(2);
  expected.at(0, 0) = 1;
  expected.at(1, 0) = 1;
  expected.at(0, 1) = 1;
  expected.at(2, 0) = BigRational(1, 2);
  expected.at(1, 1) = 1;
  expected.at(0, 2) = BigRational(1, 2);
  EXPECT_EQ(e, expected);
}

TEST(SeriesExp, MatchesPowerSumOnRandomInput) {
  std::mt19937_64 rng(15);
  auto s = random_series(rng, 7, 0.5);
  s.at(0, 0) = 0;
  TruncatedSeries2 sum = TruncatedSeries2::constant(7, 1), power = sum;
  for (int k = 1; k <= 7; ++k) {
    power = power * s * BigRational(1, k);
    sum += power;
  }
  EXPECT_EQ(series_exp(s), sum);
}

TEST(SeriesExp, RejectsConstantTerm) {
  EXPECT_THROW(series_exp(TruncatedSeries2::constant(3, 1)), std::domain_error);
}

TEST(DivideAfterFactoring, MonomialQuotient) {
  auto u = TruncatedSeries2::u(4);
  LinearForm factor{1, 0};
  auto q = divide_after_factoring(u * u, u, std::span(&factor, 1));
  EXPECT_EQ(q.max_degree(), 3);
  EXPECT_EQ(q, TruncatedSeries2::u(3));
}

TEST(DivideAfterFactoring, GeometricSeries) {
  int const n = 9;
  auto u = TruncatedSeries2::u(n), v = TruncatedSeries2::v(n);
  auto common = u * v * (u - v);
  auto den = common * (TruncatedSeries2::constant(n, 1) + u);
  auto factors = f_removable_factors();
  auto q = divide_after_factoring(common, den, factors);
  ASSERT_EQ(q.max_degree(), n - 3);
  for (int d = 0; d <= n - 3; ++d)
    for (int i = 0; i <= d; ++i)
      EXPECT_EQ(q.coefficient(i, d - i), i == d ? BigRational(d % 2 == 0 ? 1 : -1) : BigRational(0));
}

TEST(DivideAfterFactoring, ReportsOffendingFactor) {
  auto u = TruncatedSeries2::u(4), v = TruncatedSeries2::v(4);
  std::vector<LinearForm> factors{{1, 0}, {1, -1}};
  try {
    divide_after_factoring(u * v, u * (u - v), factors);
    FAIL() << "expected a divisibility error";
  } catch (std::domain_error const &e) {
    EXPECT_NE(std::string(e.what()).find("(1)*u + (-1)*v"), std::string::npos) << e.what();
  }
}

TEST(DivideAfterFactoring, RejectsZeroDeflatedConstant) {
  auto u = TruncatedSeries2::u(5);
  LinearForm factor{1, 0};
  EXPECT_THROW(divide_after_factoring(u, u * u, std::span(&factor, 1)), std::domain_error);
}

TEST(DivideAfterFactoring, MultipliedBackReproducesNumerator) {
  int const n = 12;
  auto num = f_numerator_series(n), den = f_denominator_series(n);
  auto q = divide_after_factoring(num, den, f_removable_factors());
  EXPECT_EQ(q * den, num.truncated(q.max_degree()));

  std::mt19937_64 rng(16);
  for (int trial = 0; trial < 5; ++trial) {
    auto u = TruncatedSeries2::u(8), v = TruncatedSeries2::v(8);
    auto base = u * (u + v);
    auto a = random_series(rng, 8), b = random_series(rng, 8);
    b.at(0, 0) = 3;
    std::vector<LinearForm> factors{{1, 0}, {1, 1}};
    auto quotient = divide_after_factoring(base * a, base * b, factors);
    EXPECT_EQ(quotient * (base * b), (base * a).truncated(quotient.max_degree()));
  }
}

TEST(DivideAfterFactoring, FNumeratorOverDenominatorStartsAtOneHalf) {
  auto q = divide_after_factoring(f_numerator_series(6), f_denominator_series(6),
                                  f_removable_factors());
  EXPECT_EQ(q.coefficient(0, 0), BigRational(1, 2));
}

TEST(FTaylor, LowDegrees) {
  EXPECT_EQ(f_taylor(0), TruncatedSeries2::constant(0, BigRational(1, 2)));

  TruncatedSeries2 one(1);
  one.at(0, 0) = BigRational(1, 2);
  one.at(1, 0) = BigRational(1, 12);
  one.at(0, 1) = BigRational(1, 12);
  EXPECT_EQ(f_taylor(1), one);

  auto two = f_taylor(2);
  EXPECT_EQ(two.coefficient(1, 1), BigRational(1, 24));
  EXPECT_EQ(two.coefficient(2, 0), BigRational(0));
  EXPECT_EQ(two.coefficient(0, 2), BigRational(0));
  EXPECT_THROW(f_taylor(-1), std::invalid_argument);
}

TEST(FTaylor, IsSymmetric) {
  auto f = f_taylor(14);
  for (int d = 0; d <= 14; ++d)
    for (int i = 0; i <= d; ++i) EXPECT_EQ(f.coefficient(i, d - i), f.coefficient(d - i, i));
}

TEST(FTaylor, AxisRestrictionMatchesUnivariateDivision) {
  // f(u,0) = (u e^u - e^u + 1) / (u (e^u - 1)); both sides carry a u^2
  // factor, so divide the coefficient lists shifted by two.
  int const n = 16;
  std::vector<BigRational> num(n + 1), den(n + 1);
  for (int k = 0; k <= n; ++k) {
    int p = k + 2;
    num[k] = factorial_inverse(p - 1) - factorial_inverse(p);
    den[k] = factorial_inverse(p - 1);
  }
  auto expected = univariate_divide(num, den);
  auto f = f_taylor(n);
  auto axis = f.restrict_v_zero();
  ASSERT_EQ(axis.size(), expected.size());
  for (int k = 0; k <= n; ++k) EXPECT_EQ(axis[k], expected[k]) << "u^" << k;
  EXPECT_EQ(axis[3], BigRational(-1, 720));
}

TEST(FTaylor, NumericallyMatchesClosedForm) {
  auto f = f_taylor(20);
  for (auto [u, v] : {std::pair{0.1, -0.2}, std::pair{0.15, 0.05}, std::pair{-0.2, -0.1}}) {
    long double U = u, V = v;
    long double closed = ((U - V) * std::exp(U + V) - (U * std::exp(U) - V * std::exp(V))) /
                         (U * V * (std::exp(U) - std::exp(V)));
    EXPECT_NEAR(static_cast<double>(f.evaluate<long double>(U, V)), static_cast<double>(closed),
                1e-12);
  }
}

TEST(LogSeriesIdentity, UnitPoint) {
  auto [partial, reference] = log_series_identity_check(1.0, 5);
  EXPECT_EQ(partial, 1.0);
  EXPECT_EQ(reference, 1.0);
}

TEST(LogSeriesIdentity, ConvergesInsideTheDisc) {
  for (double x : {0.5, 1.5}) {
    auto [partial, reference] = log_series_identity_check(x, 60);
    EXPECT_NEAR(partial, reference, 1e-12) << x;
  }
}

TEST(LogSeriesIdentity, RejectsOutsideConvergenceRegion) {
  EXPECT_THROW(log_series_identity_check(0.0, 10), std::domain_error);
  EXPECT_THROW(log_series_identity_check(2.0, 10), std::domain_error);
  EXPECT_THROW(log_series_identity_check(0.5, 0), std::invalid_argument);
}
