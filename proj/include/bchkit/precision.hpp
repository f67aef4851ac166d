#ifndef BCHKIT_PRECISION_HPP
#define BCHKIT_PRECISION_HPP

#include <complex>
#include <limits>
#include <string>
#include <type_traits>

#include <boost/multiprecision/cpp_bin_float.hpp>
#include <boost/multiprecision/cpp_complex.hpp>

#include "bchkit/exact/big_rational.hpp"

namespace bchkit {

/// 50 significant decimal digits, expression templates off so that `auto`
/// behaves like it does for builtin floating types.
using ExtendedReal = boost::multiprecision::number<
    boost::multiprecision::cpp_bin_float<50>, boost::multiprecision::et_off>;
using ExtendedComplex = boost::multiprecision::number<
    boost::multiprecision::complex_adaptor<boost::multiprecision::cpp_bin_float<50>>,
    boost::multiprecision::et_off>;

enum class WorkingPrecision { standard, extended };

inline char const *to_string(WorkingPrecision p) {
  return p == WorkingPrecision::standard ? "standard" : "extended";
}

template <class Scalar> struct ScalarTraits;

template <> struct ScalarTraits<std::complex<double>> {
  using Real = double;
  static constexpr WorkingPrecision precision = WorkingPrecision::standard;
};

template <> struct ScalarTraits<ExtendedComplex> {
  using Real = ExtendedReal;
  static constexpr WorkingPrecision precision = WorkingPrecision::extended;
};

template <class Scalar> using RealOf = typename ScalarTraits<Scalar>::Real;

template <class Real> Real rational_to(BigRational const &q) {
  if constexpr (std::is_floating_point_v<Real>) {
    ExtendedReal x = ExtendedReal(q.numerator_string()) / ExtendedReal(q.denominator_string());
    return static_cast<Real>(x);
  } else {
    return Real(q.numerator_string()) / Real(q.denominator_string());
  }
}

template <class Real> bool is_finite_real(Real const &x) {
  using boost::multiprecision::isfinite;
  using std::isfinite;
  return isfinite(x);
}

} // namespace bchkit

#endif
