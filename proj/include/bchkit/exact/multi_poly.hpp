#ifndef BCHKIT_EXACT_MULTI_POLY_HPP
#define BCHKIT_EXACT_MULTI_POLY_HPP

#include <algorithm>
#include <array>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include "bchkit/exact/big_rational.hpp"

namespace bchkit {

/// Exponent triple (deg_u, deg_v, deg_c).
using Monomial = std::array<int, 3>;

/// Sparse polynomial in u, v, c with exact rational coefficients.
/// Zero coefficients are never stored.
class MultiPoly {
public:
  using Terms = std::map<Monomial, BigRational>;

  MultiPoly() = default;
  MultiPoly(BigRational constant) { add_term({0, 0, 0}, std::move(constant)); }
  MultiPoly(long constant) : MultiPoly(BigRational(constant)) {}
  MultiPoly(int constant) : MultiPoly(BigRational(constant)) {}

  static MultiPoly u() { return monomial({1, 0, 0}); }
  static MultiPoly v() { return monomial({0, 1, 0}); }
  static MultiPoly c() { return monomial({0, 0, 1}); }

  static MultiPoly monomial(Monomial m, BigRational coeff = BigRational(1)) {
    MultiPoly p;
    p.add_term(m, std::move(coeff));
    return p;
  }

  void add_term(Monomial m, BigRational const &coeff) {
    if (m[0] < 0 || m[1] < 0 || m[2] < 0)
      throw std::invalid_argument("MultiPoly: negative exponent");
    if (coeff.is_zero()) return;
    auto [it, inserted] = terms_.try_emplace(m, coeff);
    if (!inserted) {
      it->second += coeff;
      if (it->second.is_zero()) terms_.erase(it);
    }
  }

  Terms const &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  BigRational coefficient(Monomial m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigRational(0) : it->second;
  }

  int total_degree() const {
    int d = -1;
    for (auto const &[m, _] : terms_) d = std::max(d, m[0] + m[1] + m[2]);
    return d;
  }

  int degree_in(int variable) const {
    int d = -1;
    for (auto const &[m, _] : terms_) d = std::max(d, m[variable]);
    return d;
  }

  /// Exact quotient by u, v or c (variable index 0, 1, 2). Throws if some
  /// term lacks the variable.
  MultiPoly divide_by_variable(int variable) const {
    MultiPoly out;
    for (auto const &[m, coeff] : terms_) {
      if (m[variable] == 0)
        throw std::domain_error("MultiPoly: not divisible by variable");
      Monomial lowered = m;
      --lowered[variable];
      out.terms_.emplace(lowered, coeff);
    }
    return out;
  }

  MultiPoly &operator+=(MultiPoly const &o) {
    for (auto const &[m, coeff] : o.terms_) add_term(m, coeff);
    return *this;
  }
  MultiPoly &operator-=(MultiPoly const &o) {
    for (auto const &[m, coeff] : o.terms_) add_term(m, -coeff);
    return *this;
  }
  MultiPoly &operator*=(BigRational const &s) {
    if (s.is_zero()) {
      terms_.clear();
      return *this;
    }
    for (auto &[_, coeff] : terms_) coeff *= s;
    return *this;
  }

  friend MultiPoly operator+(MultiPoly a, MultiPoly const &b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, MultiPoly const &b) { return a -= b; }
  friend MultiPoly operator-(MultiPoly a) { return a *= BigRational(-1); }
  friend MultiPoly operator*(MultiPoly a, BigRational const &s) { return a *= s; }
  friend MultiPoly operator*(BigRational const &s, MultiPoly a) { return a *= s; }

  friend MultiPoly operator*(MultiPoly const &a, MultiPoly const &b) {
    MultiPoly out;
    for (auto const &[ma, ca] : a.terms_)
      for (auto const &[mb, cb] : b.terms_)
        out.add_term({ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]}, ca * cb);
    return out;
  }
  MultiPoly &operator*=(MultiPoly const &o) { return *this = *this * o; }

  friend bool operator==(MultiPoly const &, MultiPoly const &) = default;

  /// Drops every term of total degree above max_degree.
  MultiPoly truncated(int max_degree) const {
    MultiPoly out;
    for (auto const &[m, coeff] : terms_)
      if (m[0] + m[1] + m[2] <= max_degree) out.terms_.emplace(m, coeff);
    return out;
  }

  template <class Scalar>
  Scalar evaluate(Scalar const &u, Scalar const &v, Scalar const &c) const {
    Scalar acc(0);
    for (auto const &[m, coeff] : terms_) {
      Scalar term = Scalar(coeff.to_double());
      for (int i = 0; i < m[0]; ++i) term *= u;
      for (int i = 0; i < m[1]; ++i) term *= v;
      for (int i = 0; i < m[2]; ++i) term *= c;
      acc += term;
    }
    return acc;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto const &[m, coeff] : terms_) {
      if (!first) os << " + ";
      first = false;
      os << coeff;
      char const *names[] = {"u", "v", "c"};
      for (int k = 0; k < 3; ++k) {
        if (m[k] == 1) os << '*' << names[k];
        else if (m[k] > 1) os << '*' << names[k] << '^' << m[k];
      }
    }
    return os.str();
  }

  friend std::ostream &operator<<(std::ostream &os, MultiPoly const &p) {
    return os << p.to_string();
  }

private:
  Terms terms_;
};

} // namespace bchkit

#endif
