// gcrystal: command-line front end for the geometric crystal library.
//
//   gcrystal verify <suite> [--n 2..4] [--m 1..5] [--trials N] [--tol T]
//   gcrystal eval   [request.json] [--point point.json]
//   gcrystal apply  [request.json] [--point point.json]
//   gcrystal matrix [point.json] [--rows a..b] [--cols a..b]
//   gcrystal limits --n 3 --a 1,2,3 [--q 0.5] [--width 60] [--factors 120]
//
// Requests are read from the named file, or stdin when omitted or "-".
// Exit codes: 0 success, 1 identity failure or pole, 2 usage/schema error.

#include <CLI11.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "gcrystal/asymptotic.hpp"
#include "gcrystal/errors.hpp"
#include "gcrystal/json_io.hpp"
#include "gcrystal/loop_sym.hpp"
#include "gcrystal/suites.hpp"
#include "gcrystal/u_crystal.hpp"
#include "gcrystal/whirl.hpp"

namespace {

using gcrystal::json;
using gcrystal::SchemaError;

constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct Globals {
  std::uint64_t seed = 1;
  bool json_out = false;
  bool quiet = false;
};

void emit(const Globals& g, const std::string& text) {
  if (g.quiet) return;
  std::cout << text;
  if (text.empty() || text.back() != '\n') std::cout << '\n';
}

json read_json(const std::string& path) {
  std::string text;
  if (path.empty() || path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    text = ss.str();
  } else {
    std::ifstream in(path);
    if (!in) throw SchemaError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw SchemaError(std::string("malformed JSON: ") + e.what());
  }
}

/// "a..b" or "a".
gcrystal::IntRange parse_range(const std::string& text) {
  try {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
      const int v = std::stoi(text);
      return {v, v};
    }
    return {std::stoi(text.substr(0, dots)), std::stoi(text.substr(dots + 2))};
  } catch (const std::exception&) {
    throw SchemaError("bad range '" + text + "', expected a..b");
  }
}

std::vector<double> parse_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw SchemaError("bad number '" + item + "' in list");
    }
  }
  return out;
}

int require_int(const json& j, const char* key) {
  if (!j.contains(key) || !j.at(key).is_number_integer()) {
    throw SchemaError(std::string("field '") + key + "' must be an integer");
  }
  return j.at(key).get<int>();
}

/// Point embedded under "point" or given separately with --point.
gcrystal::ProductPoint request_point(const json& req, const std::string& point_path) {
  if (!point_path.empty()) return gcrystal::point_from_json(read_json(point_path));
  if (!req.contains("point")) throw SchemaError("missing field 'point'");
  return gcrystal::point_from_json(req.at("point"));
}

// ---------------------------------------------------------------------------

struct VerifyArgs {
  std::string suite;
  std::string n;
  std::string m;
  int trials = 0;
  double tol = gcrystal::kDefaultLimitTolerance;
};

int run_verify(const Globals& g, const VerifyArgs& a) {
  gcrystal::SuiteConfig cfg;
  cfg.suite = a.suite;
  cfg.seed = g.seed;
  if (!a.n.empty()) cfg.n = parse_range(a.n);
  if (!a.m.empty()) cfg.m = parse_range(a.m);
  if (a.trials != 0) cfg.trials = a.trials;
  cfg.tol = a.tol;
  const gcrystal::SuiteReport report = gcrystal::run_suite(cfg);
  if (g.json_out) {
    emit(g, report.to_json().dump(2));
  } else {
    std::ostringstream out;
    for (const auto& c : report.cases) {
      out << (c.passed() ? "PASS " : "FAIL ") << c.key << "  checks=" << c.checks << " failures=" << c.failures
          << '\n';
      for (const auto& r : c.reproducers) {
        if (!c.passed()) out << "  reproducer: " << r.dump() << '\n';
      }
    }
    out << (report.passed() ? "all identities hold" : "some identities FAILED");
    emit(g, out.str());
  }
  return report.passed() ? 0 : kExitFailure;
}

int run_eval(const Globals& g, const std::string& path, const std::string& point_path) {
  const json req = read_json(path);
  if (!req.is_object() || !req.contains("kind") || !req.at("kind").is_string()) {
    throw SchemaError("eval request needs \"kind\": \"schur\" or \"energy\"");
  }
  const std::string kind = req.at("kind").get<std::string>();
  const gcrystal::ProductPoint x = request_point(req, point_path);
  gcrystal::Rational value;
  if (kind == "energy") {
    value = gcrystal::poly_eval(gcrystal::energy(x.n(), x.m()), x.assignment());
  } else if (kind == "schur") {
    if (!req.contains("shape")) throw SchemaError("missing field 'shape'");
    const gcrystal::SkewShape shape = gcrystal::shape_from_json(req.at("shape"));
    value = gcrystal::schur_value(shape, require_int(req, "r"), x);
  } else {
    throw SchemaError("unknown eval kind '" + kind + "'");
  }
  emit(g, g.json_out ? gcrystal::to_json(value).dump() : value.str());
  return 0;
}

int run_apply(const Globals& g, const std::string& path, const std::string& point_path) {
  const json req = read_json(path);
  if (!req.is_object()) throw SchemaError("apply request must be an object");
  const std::string target = req.value("target", std::string("point"));
  const int k = require_int(req, "k");
  if (!req.contains("c")) throw SchemaError("missing field 'c'");
  const gcrystal::Rational c = gcrystal::rational_from_json(req.at("c"));
  if (c.is_zero()) throw SchemaError("c must be nonzero");
  if (target == "point") {
    emit(g, gcrystal::to_json(gcrystal::product_e(request_point(req, point_path), k, c)).dump());
  } else if (target == "matrix") {
    if (!req.contains("matrix")) throw SchemaError("missing field 'matrix'");
    const gcrystal::PeriodicBandedMatrix y = gcrystal::matrix_from_json(req.at("matrix"));
    const int m = req.contains("m") ? require_int(req, "m") : y.band();
    if (m < 1) throw SchemaError("m must be positive");
    const auto ctx = gcrystal::UCrystalContext::checked(y.n(), m);
    emit(g, gcrystal::to_json(gcrystal::u_e(y, k, c, ctx)).dump());
  } else {
    throw SchemaError("unknown apply target '" + target + "'");
  }
  return 0;
}

int run_matrix(const Globals& g, const std::string& path, const std::string& rows, const std::string& cols) {
  const json req = read_json(path);
  const gcrystal::ProductPoint x = gcrystal::point_from_json(req.contains("point") ? req.at("point") : req);
  const gcrystal::PeriodicBandedMatrix y = gcrystal::from_factors(x);
  if (g.json_out) {
    emit(g, gcrystal::to_json(y).dump());
    return 0;
  }
  const auto r = parse_range(rows);
  const auto c = parse_range(cols);
  emit(g, gcrystal::render_window(y, {r.lo, r.hi}, {c.lo, c.hi}));
  return 0;
}

struct LimitsArgs {
  int n = 0;
  double q = 0.5;
  std::string a;
  std::string curl;
  int width = 60;
  int factors = 120;
  double tol = gcrystal::kDefaultLimitTolerance;
  int k = 1;
};

int run_limits(const Globals& g, const LimitsArgs& a) {
  gcrystal::WhirlStream stream;
  stream.q = a.q;
  stream.a = parse_list(a.a);
  if (!a.curl.empty()) stream.curl = parse_list(a.curl);
  if (a.n != stream.n()) throw SchemaError("--a must list exactly n values");
  try {
    stream.validate();
  } catch (const std::invalid_argument& e) {
    throw SchemaError(e.what());
  }
  const gcrystal::WindowMatrix y = gcrystal::truncated_product(stream, a.factors, a.width);
  const gcrystal::LimitEstimate est = gcrystal::limit_ratios(y, a.k, a.tol);
  if (g.json_out) {
    // Built by hand so floats keep exactly 17 significant digits.
    emit(g, "{\"k\":" + std::to_string(a.k) + ",\"eps\":" + gcrystal::format_double(est.eps) +
                ",\"phi\":" + gcrystal::format_double(est.phi) +
                ",\"converged\":" + (est.converged ? "true" : "false") + "}");
  } else {
    emit(g, "k=" + std::to_string(a.k) + " eps=" + gcrystal::format_double(est.eps) +
                " phi=" + gcrystal::format_double(est.phi) + (est.converged ? " converged" : " not converged"));
  }
  return est.converged ? 0 : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Affine geometric crystals: exact evaluation and identity checks"};
  app.require_subcommand(1);
  app.fallthrough();
  Globals g;
  app.add_option("--seed", g.seed, "Seed for random test points");
  app.add_flag("--json", g.json_out, "Machine-readable output");
  app.add_flag("--quiet", g.quiet, "Suppress output; report through the exit code");

  VerifyArgs va;
  auto* verify = app.add_subcommand("verify", "Run an identity suite");
  verify->add_option("suite", va.suite, "Suite name")->required()->check(CLI::IsMember(gcrystal::suite_names()));
  verify->add_option("--n", va.n, "Range of n, e.g. 2..4");
  verify->add_option("--m", va.m, "Range of m, e.g. 1..5");
  verify->add_option("--trials", va.trials, "Random points per configuration");
  verify->add_option("--tol", va.tol, "Limit-ratio tolerance (asymptotic suite)");

  std::string eval_path;
  std::string eval_point;
  auto* eval = app.add_subcommand("eval", "Evaluate a loop Schur function or the energy at a point");
  eval->add_option("request", eval_path, "Request JSON file (default stdin)");
  eval->add_option("--point", eval_point, "Point JSON file");

  std::string apply_path;
  std::string apply_point;
  auto* apply = app.add_subcommand("apply", "Apply e_k^c to a point or a banded matrix");
  apply->add_option("request", apply_path, "Request JSON file (default stdin)");
  apply->add_option("--point", apply_point, "Point JSON file");

  std::string matrix_path;
  std::string rows = "1..4";
  std::string cols = "1..6";
  auto* matrix = app.add_subcommand("matrix", "Render M(x_1)...M(x_m) for a point");
  matrix->add_option("point", matrix_path, "Point JSON file (default stdin)");
  matrix->add_option("--rows", rows, "Row indices a..b");
  matrix->add_option("--cols", cols, "Column indices a..b");

  LimitsArgs la;
  auto* limits = app.add_subcommand("limits", "Estimate limit ratios of a truncated whirl stream");
  limits->add_option("--n", la.n, "Number of colors")->required();
  limits->add_option("--q", la.q, "Geometric decay of the stream");
  limits->add_option("--a", la.a, "Comma-separated a^(1),...,a^(n)")->required();
  limits->add_option("--curl", la.curl, "Comma-separated curl parameters b^(1),...,b^(n)");
  limits->add_option("--width", la.width, "Window width");
  limits->add_option("--factors", la.factors, "Number of whirl factors");
  limits->add_option("--tol", la.tol, "Convergence tolerance");
  limits->add_option("--k", la.k, "Color k");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (*verify) return run_verify(g, va);
    if (*eval) return run_eval(g, eval_path, eval_point);
    if (*apply) return run_apply(g, apply_path, apply_point);
    if (*matrix) return run_matrix(g, matrix_path, rows, cols);
    if (*limits) return run_limits(g, la);
  } catch (const gcrystal::PoleError& e) {
    std::cout << json{{"error", "pole"}, {"denominator", e.denominator()}}.dump() << '\n';
    return kExitFailure;
  } catch (const gcrystal::DivisionByZero& e) {
    std::cout << json{{"error", "pole"}, {"denominator", e.what()}}.dump() << '\n';
    return kExitFailure;
  } catch (const gcrystal::OverflowError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitFailure;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
