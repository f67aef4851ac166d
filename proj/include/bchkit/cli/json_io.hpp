#ifndef BCHKIT_CLI_JSON_IO_HPP
#define BCHKIT_CLI_JSON_IO_HPP

#include <cmath>
#include <cstdio>
#include <string>

#include <json.hpp>

#include "bchkit/bch/lie_series.hpp"
#include "bchkit/exact/multi_poly.hpp"
#include "bchkit/exact/truncated_series.hpp"
#include "bchkit/matrix/verify.hpp"
#include "bchkit/special/reduce.hpp"

namespace bchkit {

using Json = nlohmann::ordered_json;

inline std::string format_double(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline void write_json(Json const &j, std::string &out) {
  switch (j.type()) {
  case Json::value_t::object: {
    out += '{';
    bool first = true;
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (!first) out += ',';
      first = false;
      out += Json(it.key()).dump();
      out += ':';
      write_json(it.value(), out);
    }
    out += '}';
    break;
  }
  case Json::value_t::array: {
    out += '[';
    for (std::size_t i = 0; i < j.size(); ++i) {
      if (i) out += ',';
      write_json(j[i], out);
    }
    out += ']';
    break;
  }
  case Json::value_t::number_float: {
    double x = j.get<double>();
    out += std::isfinite(x) ? format_double(x) : "null";
    break;
  }
  default: out += j.dump();
  }
}

} // namespace detail

/// Compact serialization with floats at 17 significant digits.
inline std::string dump_json(Json const &j) {
  std::string out;
  detail::write_json(j, out);
  return out;
}

inline Json to_json(TruncatedSeries2 const &s) {
  Json terms = Json::array();
  for (int n = 0; n <= s.max_degree(); ++n)
    for (int du = n; du >= 0; --du) {
      auto const &q = s.coefficient(du, n - du);
      if (q == BigRational(0)) continue;
      terms.push_back({{"du", du}, {"dv", n - du}, {"num", q.numerator_string()}, {"den", q.denominator_string()}});
    }
  return {{"max_degree", s.max_degree()}, {"terms", terms}};
}

inline Json to_json(MultiPoly const &p) {
  Json terms = Json::array();
  for (auto const &[m, q] : p.terms())
    terms.push_back({{"du", m[0]},
                     {"dv", m[1]},
                     {"dc", m[2]},
                     {"num", q.numerator_string()},
                     {"den", q.denominator_string()}});
  return {{"terms", terms}};
}

inline Json to_json(LieSeries const &s) {
  Json terms = Json::array();
  for (auto const &[w, q] : s.terms())
    terms.push_back({{"word", w.to_string()}, {"num", q.numerator_string()}, {"den", q.denominator_string()}});
  return {{"max_order", s.max_order()}, {"terms", terms}};
}

inline Json to_json(SymbolicElement const &e) {
  return {{"pX", to_json(e.pX)}, {"pY", to_json(e.pY)}, {"pI", to_json(e.pI)}};
}

inline Json to_json(NumericElement const &e) { return {{"pX", e.pX}, {"pY", e.pY}, {"pI", e.pI}}; }

inline Json to_json(VerificationReport const &r) {
  Json inputs = Json::object();
  for (auto const &[k, v] : r.inputs) inputs[k] = v;
  return {{"command", r.command},
          {"inputs", inputs},
          {"max_abs_error", r.max_abs_error},
          {"tolerance", r.tolerance},
          {"pass", r.pass},
          {"branch_notes", r.notes}};
}

} // namespace bchkit

#endif
