#ifndef BCHKIT_CLI_DISPATCH_HPP
#define BCHKIT_CLI_DISPATCH_HPP

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <functional>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include "bchkit/bch/dynkin.hpp"
#include "bchkit/bch/integral_form.hpp"
#include "bchkit/cli/json_io.hpp"
#include "bchkit/config.hpp"
#include "bchkit/exact/f_taylor.hpp"
#include "bchkit/matrix/verify.hpp"
#include "bchkit/special/f_eval.hpp"
#include "bchkit/special/oracle.hpp"
#include "bchkit/special/reduce.hpp"

namespace bchkit {

enum ExitCode : int { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

inline constexpr int max_series_degree = 60;

/// Decimal or "p/q".
inline double parse_scalar(std::string const &text) {
  if (text.find('/') != std::string::npos) return rational_to<double>(BigRational::parse(text));
  std::size_t used = 0;
  double x = 0;
  try {
    x = std::stod(text, &used);
  } catch (std::exception const &) {
    used = 0;
  }
  if (used == 0 || used != text.size()) throw std::invalid_argument("not a number: '" + text + "'");
  return x;
}

/// "key=value" overrides of the default precision policy.
inline PrecisionPolicy parse_policy(std::vector<std::string> const &items) {
  PrecisionPolicy p;
  for (auto const &item : items) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw std::invalid_argument("policy entry needs key=value: '" + item + "'");
    std::string key = item.substr(0, eq);
    double value = parse_scalar(item.substr(eq + 1));
    if (key == "series_radius") p.series_radius = value;
    else if (key == "series_degree") {
      if (value < 0 || value > max_series_degree || value != std::floor(value))
        throw std::invalid_argument("series_degree must be an integer in [0, 60]");
      p.series_degree = static_cast<int>(value);
    } else if (key == "line_snap") p.line_snap = value;
    else if (key == "extended_annulus") p.extended_annulus = value;
    else if (key == "rescale_threshold") p.rescale_threshold = value;
    else throw std::invalid_argument("unknown policy key '" + key + "'");
  }
  return p;
}

struct SuiteOptions {
  int max_order = default_max_order;
  bool inject_perturbation = false;
};

struct SuiteCheck {
  std::string name;
  bool pass = false;
  double max_abs_error = 0;
  double tolerance = 0;
  std::string detail;
};

struct SuiteReport {
  std::vector<SuiteCheck> checks;
  double seconds = 0;

  bool pass() const {
    return std::all_of(checks.begin(), checks.end(), [](SuiteCheck const &c) { return c.pass; });
  }
  SuiteCheck const *first_failure() const {
    for (auto const &c : checks)
      if (!c.pass) return &c;
    return nullptr;
  }
};

namespace detail {

struct GridCheck {
  double worst = 0;
  std::string worst_point;
  int points = 0;
  bool pass = true;
};

inline void absorb(GridCheck &g, VerificationReport const &r) {
  ++g.points;
  g.pass = g.pass && r.pass;
  if (r.max_abs_error >= g.worst) {
    g.worst = r.max_abs_error;
    g.worst_point.clear();
    for (auto const &[k, v] : r.inputs) {
      if (!g.worst_point.empty()) g.worst_point += ' ';
      g.worst_point += k + "=" + format_double(v);
    }
  }
}

inline std::vector<TwoByTwoFamily> suite_grid(bool need_v) {
  double const uv[] = {-2, -1, -0.5, 0.5, 1, 2};
  std::vector<TwoByTwoFamily> grid;
  for (double u : uv)
    for (double v : uv)
      for (double c : {0.0, 1.0, -0.7})
        for (double p : {0.0, 0.3, 1.0}) grid.push_back({u, v, c, p});
  for (double c : {0.0, 1.0})
    for (double dv : {1e-4, -1e-4}) grid.push_back({1, 1 + dv, c, 0.3});
  if (need_v) std::erase_if(grid, [](TwoByTwoFamily const &f) { return f.v == 0; });
  return grid;
}

} // namespace detail

/// Every identity check at desk scale. Orders up to max_order for the exact
/// series check; max_order <= 2 also selects the small Fock configuration.
inline SuiteReport run_full_suite(SuiteOptions const &options) {
  require_order_in_range(options.max_order, "suite");
  auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  bool const minimal = options.max_order <= 2;

  for (int order = 2; order <= options.max_order; ++order) {
    auto series = dynkin_expand(order);
    if (options.inject_perturbation) series.add(LieWord::parse("XY"), BigRational(1, 1000));
    auto z = check_z_form(series, order);
    report.checks.push_back({"z-form order " + std::to_string(order), z.pass, z.pass ? 0.0 : 1.0, 0,
                             z.pass ? "exact" : z.first_mismatch});
  }

  {
    SuiteCheck c{"oracle triangle", true, 0, 1e-9, ""};
    double const pts[] = {-0.2, -0.1, 0.0, 0.1, 0.2};
    for (double u : pts)
      for (double v : pts) {
        double closed = f_eval(u, v).value;
        double integral = f_integral_oracle(u, v, 64, 200);
        double series = detail::f_series(u, v, 30);
        double e = std::max({std::abs(closed - integral), std::abs(closed - series), std::abs(integral - series)});
        c.max_abs_error = std::max(c.max_abs_error, e);
      }
    c.pass = c.max_abs_error <= c.tolerance;
    c.detail = "25 points in [-0.2, 0.2]^2";
    report.checks.push_back(c);
  }

  auto run_grid = [&](std::string name, bool need_v, auto verify) {
    detail::GridCheck g;
    for (auto const &f : detail::suite_grid(need_v)) detail::absorb(g, verify(f));
    report.checks.push_back({name, g.pass, g.worst, 1e-12,
                             std::to_string(g.points) + " points, worst at " + g.worst_point});
  };
  run_grid("two-by-two grid", false, [](TwoByTwoFamily const &f) { return verify_bch_2x2(f, 1e-12); });
  run_grid("braiding grid", false, [](TwoByTwoFamily const &f) { return verify_braiding(f, 1e-12); });
  run_grid("shifted grid", true, [](TwoByTwoFamily const &f) { return verify_shifted(f, 1e-12); });

  {
    std::vector<double> values = minimal ? std::vector<double>{-0.3, 0.3}
                                          : std::vector<double>{-0.5, -0.3, -0.1, 0.1, 0.3, 0.5};
    int const dim = minimal ? 12 : 40;
    detail::GridCheck g;
    for (double s : values)
      for (double t : values) detail::absorb(g, verify_fock_quadratic(s, t, dim, 1e-9));
    report.checks.push_back({"fock quadratic", g.pass, g.worst, 1e-9,
                             std::to_string(g.points) + " points at dim " + std::to_string(dim)});
  }

  {
    auto r = verify_fock_w(std::complex<double>(0.1, 0), 16, 4, 1e-6);
    report.checks.push_back({"fock w", r.pass, r.max_abs_error, 1e-6, "w=0.1, dim 16 vs 24, block 4"});
  }

  report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

inline Json to_json(SuiteReport const &r) {
  Json checks = Json::array();
  for (auto const &c : r.checks)
    checks.push_back({{"name", c.name},
                      {"pass", c.pass},
                      {"max_abs_error", c.max_abs_error},
                      {"tolerance", c.tolerance},
                      {"detail", c.detail}});
  auto first = r.first_failure();
  return {{"pass", r.pass()}, {"first_failure", first ? Json(first->name) : Json(nullptr)}, {"checks", checks}};
}

namespace detail {

inline void print_report(std::ostream &out, VerificationReport const &r) {
  out << r.command << ": " << (r.pass ? "PASS" : "FAIL") << '\n';
  for (auto const &[k, v] : r.inputs) out << "  " << k << " = " << format_double(v) << '\n';
  out << "  max_abs_error = " << format_double(r.max_abs_error) << '\n';
  out << "  tolerance = " << format_double(r.tolerance) << '\n';
  for (auto const &n : r.notes) out << "  " << n << '\n';
}

inline void print_poly_line(std::ostream &out, char const *name, MultiPoly const &p) {
  out << name << " = " << p.to_string() << '\n';
}

} // namespace detail

/// Parses argv and runs one command. Exit codes: 0 pass, 1 verification
/// failure, 2 usage or precondition error.
inline int run_cli(int argc, char const *const *argv, std::ostream &out, std::ostream &err) {
  bool json = false;
  for (int i = 1; i < argc; ++i)
    if (std::string_view(argv[i]) == "--json") json = true;

  auto fail = [&](int code, std::string const &message) {
    if (json) out << dump_json({{"error", message}, {"exit_code", code}}) << '\n';
    else err << "error: " << message << '\n';
    return code;
  };

  CLI::App app{"bchkit: closed-form BCH for [X,Y] = uX + vY + cI", "bchkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--json", json, "Emit one JSON document");

  std::function<int()> action;

  // bch
  auto *bch = app.add_subcommand("bch", "Free Lie algebra expansion");
  bch->require_subcommand(1);
  int order = 0;
  std::string form = "dynkin";
  bool check_f = false;
  auto expand_series = [&] {
    return form == "dynkin" ? dynkin_expand(order) : integral_form_expand(order);
  };

  auto *expand = bch->add_subcommand("expand", "Right-nested word coefficients up to an order");
  expand->add_option("--order", order, "Maximum word length")->required();
  expand->add_option("--form", form, "dynkin or integral")->check(CLI::IsMember({"dynkin", "integral"}));
  expand->callback([&] {
    action = [&] {
      auto series = expand_series();
      if (json) out << dump_json(to_json(series)) << '\n';
      else
        for (auto const &[w, q] : series.terms()) out << q.to_string() << ' ' << w.to_string() << '\n';
      return int(exit_ok);
    };
  });

  auto *reduce = bch->add_subcommand("reduce", "Collapse the series onto span{X, Y, I}");
  reduce->add_option("--order", order, "Maximum word length")->required();
  reduce->add_option("--form", form, "dynkin or integral")->check(CLI::IsMember({"dynkin", "integral"}));
  reduce->add_flag("--check-f", check_f, "Compare with 1 + u f, 1 + v f, c f");
  reduce->callback([&] {
    action = [&] {
      auto series = expand_series();
      auto reduced = reduce_series(series);
      int code = exit_ok;
      Json doc = {{"order", order}, {"reduced", to_json(reduced)}};
      if (check_f) {
        auto z = check_z_form(series, order);
        doc["check_f"] = {{"pass", z.pass}, {"c_free", z.c_free}, {"f", to_json(z.f)},
                          {"first_mismatch", z.first_mismatch}};
        if (!z.pass) code = exit_failed;
      }
      if (json) {
        out << dump_json(doc) << '\n';
      } else {
        detail::print_poly_line(out, "pX", reduced.pX);
        detail::print_poly_line(out, "pY", reduced.pY);
        detail::print_poly_line(out, "pI", reduced.pI);
        if (check_f) {
          auto const &c = doc["check_f"];
          out << "check f: " << (c["pass"].get<bool>() ? "PASS" : "FAIL") << '\n';
          if (code != exit_ok) out << "  " << c["first_mismatch"].get<std::string>() << '\n';
        }
      }
      return code;
    };
  });

  // f
  auto *f = app.add_subcommand("f", "The scalar function f(u, v)");
  f->require_subcommand(1);
  std::string u_text, v_text;
  std::vector<std::string> policy_items;
  int degree = 0, terms = 200, nodes = 64;

  auto *eval = f->add_subcommand("eval", "Evaluate f(u, v)");
  eval->add_option("--u", u_text, "u (decimal or p/q)")->required();
  eval->add_option("--v", v_text, "v (decimal or p/q)")->required();
  eval->add_option("--policy", policy_items, "key=value overrides");
  eval->callback([&] {
    action = [&] {
      double u = parse_scalar(u_text), v = parse_scalar(v_text);
      auto r = f_eval(u, v, parse_policy(policy_items));
      if (json)
        out << dump_json({{"u", u}, {"v", v}, {"value", r.value}, {"branch", to_string(r.branch)},
                          {"extended", r.extended}})
            << '\n';
      else out << format_double(r.value) << '\n';
      return int(exit_ok);
    };
  });

  auto *series_cmd = f->add_subcommand("series", "Exact Taylor coefficients of f");
  series_cmd->add_option("--degree", degree, "Total degree")->required()->check(CLI::Range(0, max_series_degree));
  series_cmd->callback([&] {
    action = [&] {
      auto s = f_taylor(degree);
      if (json) out << dump_json(to_json(s)) << '\n';
      else out << s.to_string() << '\n';
      return int(exit_ok);
    };
  });

  auto *oracle = f->add_subcommand("oracle", "Quadrature of the integral series for f");
  oracle->add_option("--u", u_text, "u (decimal or p/q)")->required();
  oracle->add_option("--v", v_text, "v (decimal or p/q)")->required();
  oracle->add_option("--terms", terms, "Series terms")->check(CLI::PositiveNumber);
  oracle->add_option("--nodes", nodes, "Gauss-Legendre nodes")->check(CLI::Range(1, 2000));
  oracle->callback([&] {
    action = [&] {
      double u = parse_scalar(u_text), v = parse_scalar(v_text);
      double value = f_integral_oracle(u, v, nodes, terms);
      double closed = f_eval(u, v).value;
      if (json)
        out << dump_json({{"u", u}, {"v", v}, {"terms", terms}, {"nodes", nodes}, {"value", value},
                          {"f_eval", closed}, {"difference", value - closed}})
            << '\n';
      else out << format_double(value) << '\n';
      return int(exit_ok);
    };
  });

  // verify
  auto *verify = app.add_subcommand("verify", "Matrix-representation checks");
  verify->require_subcommand(1);
  std::string c_text = "0", p_text = "0", s_text, t_text, w_re_text, w_im_text = "0";
  double tol = 0;
  int dim = 0, block = 8, confirm_dim = 0;

  auto report_action = [&](auto make) {
    return [&, make] {
      auto r = make();
      if (json) out << dump_json(to_json(r)) << '\n';
      else detail::print_report(out, r);
      return r.pass ? int(exit_ok) : int(exit_failed);
    };
  };
  auto family = [&] {
    return TwoByTwoFamily{parse_scalar(u_text), parse_scalar(v_text), parse_scalar(c_text), parse_scalar(p_text)};
  };
  auto add_family_options = [&](CLI::App *cmd) {
    cmd->add_option("--u", u_text, "u")->required();
    cmd->add_option("--v", v_text, "v")->required();
    cmd->add_option("--c", c_text, "c (default 0)");
    cmd->add_option("--p", p_text, "identity split p (default 0)");
    cmd->add_option("--tol", tol, "Tolerance (default 1e-12)")->default_val(1e-12);
  };

  auto *two = verify->add_subcommand("two-by-two", "ln(e^X e^Y) in the 2x2 family");
  add_family_options(two);
  two->callback([&] { action = report_action([&] { return verify_bch_2x2(family(), tol); }); });

  auto *braid = verify->add_subcommand("braiding", "Braiding relations in the 2x2 family");
  add_family_options(braid);
  braid->callback([&] { action = report_action([&] { return verify_braiding(family(), tol); }); });

  auto *shifted = verify->add_subcommand("shifted", "ln(e^X e^{(u/v)X + Y}) in the 2x2 family");
  add_family_options(shifted);
  shifted->callback([&] { action = report_action([&] { return verify_shifted(family(), tol); }); });

  auto *fock = verify->add_subcommand("fock", "Quadratic ladder identities on truncated Fock space");
  fock->add_option("--dim", dim, "Truncation dimension")->default_val(40);
  fock->add_option("--s", s_text, "s")->required();
  fock->add_option("--t", t_text, "t")->required();
  fock->add_option("--tol", tol, "Tolerance (default 1e-9)")->default_val(1e-9);
  fock->callback([&] {
    action = report_action([&] { return verify_fock_quadratic(parse_scalar(s_text), parse_scalar(t_text), dim, tol); });
  });

  auto *fock_w = verify->add_subcommand("fock-w", "The w identity on a converged top-left block");
  fock_w->add_option("--dim", dim, "Truncation dimension")->default_val(48);
  fock_w->add_option("--w-re", w_re_text, "Re w")->required();
  fock_w->add_option("--w-im", w_im_text, "Im w (default 0)");
  fock_w->add_option("--block", block, "Observed block size")->default_val(8);
  fock_w->add_option("--confirm-dim", confirm_dim, "Confirmation dimension (default ceil(1.5 dim))")->default_val(0);
  fock_w->add_option("--tol", tol, "Tolerance (default 1e-6)")->default_val(1e-6);
  fock_w->callback([&] {
    action = report_action([&] {
      std::complex<double> w(parse_scalar(w_re_text), parse_scalar(w_im_text));
      return verify_fock_w(w, dim, block, tol, confirm_dim);
    });
  });

  // suite
  auto *suite = app.add_subcommand("suite", "Run every identity check");
  SuiteOptions suite_options;
  suite->add_option("--max-order", suite_options.max_order, "Highest order for the exact series check");
  suite->add_flag("--inject-perturbation", suite_options.inject_perturbation,
                  "Perturb one series coefficient to exercise the failure path");
  suite->callback([&] {
    action = [&] {
      auto r = run_full_suite(suite_options);
      if (json) {
        out << dump_json(to_json(r)) << '\n';
      } else {
        for (auto const &c : r.checks)
          out << (c.pass ? "PASS " : "FAIL ") << c.name << "  error " << detail::sci(c.max_abs_error) << " tol "
              << detail::sci(c.tolerance) << "  " << c.detail << '\n';
        out << (r.pass() ? "suite: PASS" : "suite: FAIL") << '\n';
      }
      if (auto first = r.first_failure()) {
        err << "first failing identity: " << first->name << '\n';
        return int(exit_failed);
      }
      return int(exit_ok);
    };
  });

  try {
    suite_options.max_order = configured_max_order();
    app.parse(argc, argv);
  } catch (CLI::CallForHelp const &) {
    out << app.help();
    return exit_ok;
  } catch (CLI::CallForAllHelp const &) {
    out << app.help("", CLI::AppFormatMode::All);
    return exit_ok;
  } catch (CLI::ParseError const &e) {
    if (!json) err << app.help();
    return fail(exit_usage, e.what());
  } catch (std::exception const &e) {
    return fail(exit_usage, e.what());
  }

  try {
    return action();
  } catch (std::invalid_argument const &e) {
    return fail(exit_usage, e.what());
  } catch (std::domain_error const &e) {
    return fail(exit_usage, e.what());
  } catch (std::out_of_range const &e) {
    return fail(exit_usage, e.what());
  } catch (std::exception const &e) {
    return fail(exit_failed, e.what());
  }
}

} // namespace bchkit

#endif
