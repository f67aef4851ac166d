#ifndef BCHKIT_EXACT_BIG_RATIONAL_HPP
#define BCHKIT_EXACT_BIG_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace bchkit {

/// Exact rational number in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor and every
/// arithmetic result is canonicalized, so equality is structural.
class BigRational {
public:
  BigRational() = default;
  BigRational(long value) : q_(value) {}
  BigRational(int value) : q_(static_cast<long>(value)) {}

  BigRational(long num, long den) {
    if (den == 0) throw std::domain_error("BigRational: zero denominator");
    q_ = mpq_class(num, den);
    q_.canonicalize();
  }

  /// Parses "n", "-n" or "n/d" with decimal integers.
  static BigRational parse(std::string_view text) {
    std::string s(text);
    auto slash = s.find('/');
    BigRational r;
    try {
      if (slash == std::string::npos) {
        r.q_ = mpq_class(mpz_class(s, 10));
      } else {
        mpz_class num(s.substr(0, slash), 10);
        mpz_class den(s.substr(slash + 1), 10);
        if (den == 0) throw std::domain_error("BigRational: zero denominator");
        r.q_ = mpq_class(num, den);
        r.q_.canonicalize();
      }
    } catch (std::invalid_argument const &) {
      throw std::invalid_argument("BigRational: cannot parse '" + s + "'");
    }
    return r;
  }

  static BigRational from_parts(std::string_view num, std::string_view den) {
    return parse(std::string(num) + "/" + std::string(den));
  }

  std::string numerator_string() const { return q_.get_num().get_str(10); }
  std::string denominator_string() const { return q_.get_den().get_str(10); }
  std::string to_string() const { return q_.get_str(10); }

  bool is_zero() const { return sgn(q_) == 0; }
  bool is_one() const { return q_ == 1; }
  int sign() const { return sgn(q_); }

  /// Truncated toward zero; within one ulp of the exact value.
  double to_double() const { return q_.get_d(); }

  mpq_class const &raw() const { return q_; }

  BigRational &operator+=(BigRational const &o) { q_ += o.q_; return *this; }
  BigRational &operator-=(BigRational const &o) { q_ -= o.q_; return *this; }
  BigRational &operator*=(BigRational const &o) { q_ *= o.q_; return *this; }
  BigRational &operator/=(BigRational const &o) {
    if (o.is_zero()) throw std::domain_error("BigRational: division by zero");
    q_ /= o.q_;
    return *this;
  }

  friend BigRational operator+(BigRational a, BigRational const &b) { return a += b; }
  friend BigRational operator-(BigRational a, BigRational const &b) { return a -= b; }
  friend BigRational operator*(BigRational a, BigRational const &b) { return a *= b; }
  friend BigRational operator/(BigRational a, BigRational const &b) { return a /= b; }
  friend BigRational operator-(BigRational a) { a.q_ = -a.q_; return a; }

  friend bool operator==(BigRational const &a, BigRational const &b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(BigRational const &a, BigRational const &b) {
    int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream &operator<<(std::ostream &os, BigRational const &r) {
    return os << r.to_string();
  }

private:
  mpq_class q_{0};
};

inline BigRational pow(BigRational const &base, unsigned exponent) {
  BigRational result(1);
  for (unsigned i = 0; i < exponent; ++i) result *= base;
  return result;
}

/// 1/k! for k = 0..n.
inline std::vector<BigRational> inverse_factorials(int n) {
  std::vector<BigRational> out;
  out.reserve(static_cast<std::size_t>(n) + 1);
  BigRational acc(1);
  out.push_back(acc);
  for (int k = 1; k <= n; ++k) {
    acc /= BigRational(k);
    out.push_back(acc);
  }
  return out;
}

} // namespace bchkit

#endif
