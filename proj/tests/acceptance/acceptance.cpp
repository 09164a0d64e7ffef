// Acceptance checks, one line per criterion:
//
//   acceptance [--criterion N] [--cli PATH] [--golden DIR]
//
// Without --criterion every criterion runs. Exit status is 0 iff all the
// selected criteria pass. Criterion 10 needs the CLI binary and the golden
// directory.

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "gcrystal/asymptotic.hpp"
#include "gcrystal/axioms.hpp"
#include "gcrystal/errors.hpp"
#include "gcrystal/json_io.hpp"
#include "gcrystal/loop_sym.hpp"
#include "gcrystal/sampling.hpp"
#include "gcrystal/suites.hpp"
#include "gcrystal/u_crystal.hpp"

using namespace gcrystal;

namespace {

// Pinned parameters.
constexpr std::uint64_t kSeed = 20240601;
constexpr int kTrials = 100;
constexpr int kSchurTrials = 20;
constexpr double kLimitTol = 1e-9;
constexpr double kScalarAxiomTol = 1e-8;
constexpr double kPointAxiomTol = 1e-6;
constexpr double kUpdateTol = 1e-6;
constexpr double kStreamQ = 0.5;
constexpr int kStreamWidth = 60;
constexpr int kStreamFactors = 120;

struct Outcome {
  bool pass = true;
  std::string summary;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("failed: " + what);
    }
  }
};

struct Options {
  std::string cli;
  std::string golden;
};

SuiteReport run(const std::string& suite, IntRange n, IntRange m, int trials) {
  SuiteConfig cfg;
  cfg.suite = suite;
  cfg.seed = kSeed;
  cfg.n = n;
  cfg.m = m;
  cfg.trials = trials;
  return run_suite(cfg);
}

/// Requires every case of the report whose key starts with `prefix` to pass,
/// and at least one such case to exist.
long require_cases(Outcome& out, const SuiteReport& report, const std::string& prefix) {
  long checks = 0;
  int seen = 0;
  for (const auto& c : report.cases) {
    if (c.key.rfind(prefix, 0) != 0) continue;
    ++seen;
    checks += c.checks;
    out.require(c.passed(), c.key + " (" + std::to_string(c.failures) + " of " + std::to_string(c.checks) + ")");
    for (const auto& r : c.reproducers) {
      if (!c.passed()) out.notes.push_back("  reproducer: " + r.dump());
    }
  }
  out.require(seen > 0, "no cases matching " + prefix);
  return checks;
}

long total_checks(const SuiteReport& r) {
  long t = 0;
  for (const auto& c : r.cases) t += c.checks;
  return t;
}

// ---------------------------------------------------------------------------

Outcome criterion1(const Options&) {
  Outcome out;
  const SuiteReport r = run("whirl-entry", {2, 4}, {1, 5}, kTrials);
  require_cases(out, r, "whirl-entry/");
  out.require(r.cases.size() == 15, "expected 15 (n, m) configurations");
  out.summary = std::to_string(r.cases.size()) + " configurations, " + std::to_string(total_checks(r)) +
                " exact entry comparisons";
  return out;
}

Outcome criterion2(const Options&) {
  Outcome out;
  const SuiteReport r = run("rmatrix", {2, 4}, {2, 5}, kTrials);
  long checks = 0;
  for (const char* rel : {"involution", "braid", "distant-commute", "whirl-commute"}) {
    checks += require_cases(out, r, std::string("rmatrix/") + rel + "/");
  }
  // Braid needs m >= 3 and distant commutation m >= 4, for every n.
  for (int n = 2; n <= 4; ++n) {
    for (int m = 3; m <= 5; ++m) {
      const std::string key = "rmatrix/braid/n=" + std::to_string(n) + "/m=" + std::to_string(m);
      out.require(std::any_of(r.cases.begin(), r.cases.end(), [&](const CaseResult& c) { return c.key == key; }),
                  "missing " + key);
    }
  }
  out.summary = std::to_string(checks) + " exact relation checks, n in 2..4, m in 2..5";
  return out;
}

Outcome criterion3(const Options&) {
  Outcome out;
  const SuiteReport r = run("axioms", {2, 4}, {1, 4}, kTrials);
  const long checks = require_cases(out, r, "axioms/product/");
  out.require(CartanData(2)(1, 2) == -2, "a_12 = -2 for n = 2");
  Sampler rng(kSeed, "acceptance/c3/n=2");
  const AxiomReport two = check_axioms(rng.product_point(2, 3), rng.positive_rational(), rng.positive_rational());
  int fifth = 0;
  for (const auto& c : two.checks) {
    if (c.axiom != 5) continue;
    ++fifth;
    out.require(c.outcome == AxiomOutcome::kNotApplicable, "n = 2 skips relation (5)");
  }
  out.require(fifth > 0, "relation (5) is reported as not applicable for n = 2");
  out.require(two.all_passed(), "n = 2 sample passes");
  out.summary = std::to_string(checks) + " exact axiom checks over 12 (n, m) configurations";
  return out;
}

Outcome criterion4(const Options&) {
  Outcome out;
  const SuiteReport r = run("thm-e", {2, 4}, {1, 4}, kTrials);
  const long checks = require_cases(out, r, "thm-e/ratios/");
  require_cases(out, r, "thm-e/running-example/");
  const ProductPoint x{{2, 3}, {5, 7}};
  const Stats s = product_stats(x, 1);
  out.require(s.phi == Rational(7, 5) && s.eps == Rational(3, 2), "phi_1 = 7/5, eps_1 = 3/2 at the running point");
  out.summary = std::to_string(checks) + " exact ratio checks; running point phi_1 = " + s.phi.str() +
                ", eps_1 = " + s.eps.str();
  return out;
}

Outcome criterion5(const Options&) {
  Outcome out;
  const SuiteReport r = run("quotient", {2, 4}, {1, 4}, kTrials);
  const long checks = require_cases(out, r, "quotient/matrix-action/");
  // Every one of the four cases appears among the compared band entries.
  std::array<long, 5> seen{};
  for (int n = 2; n <= 4; ++n) {
    for (int m = 1; m <= 4; ++m) {
      for (int k = 1; k <= n; ++k) {
        for (int s = 1; s <= n; ++s) {
          for (int rr = 1; rr <= m; ++rr) ++seen[static_cast<std::size_t>(thm_e_case(rr, s, k, m, n))];
        }
      }
    }
  }
  for (int cs = 1; cs <= 4; ++cs) out.require(seen[static_cast<std::size_t>(cs)] > 0, "case " + std::to_string(cs));
  const ProductPoint x{{2, 3}, {5, 7}};
  out.require(quotient_check(x, 1, 2), "running point, k = 1, c = 2");
  out.summary = std::to_string(checks) + " exact matrix/formula comparisons; cases 1-4 exercised " +
                std::to_string(seen[1]) + "/" + std::to_string(seen[2]) + "/" + std::to_string(seen[3]) + "/" +
                std::to_string(seen[4]) + " times per point";
  return out;
}

Outcome criterion6(const Options&) {
  Outcome out;
  const SuiteReport r = run("jacobi-trudi", {2, 3}, {2, 4}, 1);
  const long checks = require_cases(out, r, "jacobi-trudi/");
  out.require(r.cases.size() == 6, "six (n, m) configurations");
  const SkewShape e = dilated_staircase(3, 3);
  out.require(e.lambda() == std::vector<int>{4, 2}, "energy shape at n = m = 3 is (4,2)");
  out.require(poly_equal(tableaux_schur(e, 0, 3, 3), jacobi_trudi_schur(e, 0, 3, 3)), "energy shape (4,2)");
  out.summary = std::to_string(skew_shapes_in_box(4, 4, 8).size()) + " shapes, " + std::to_string(checks) +
                " exact polynomial identities";
  return out;
}

Outcome criterion7(const Options&) {
  Outcome out;
  const SuiteReport r = run("schur-action", {2, 3}, {2, 4}, kSchurTrials);
  const long checks = require_cases(out, r, "schur-action/");
  out.summary = std::to_string(checks) + " exact comparisons (" + std::to_string(kSchurTrials) +
                " points per shape and r)";
  return out;
}

Outcome criterion8(const Options&) {
  Outcome out;
  const SuiteReport r = run("energy", {2, 3}, {2, 3}, kTrials);
  const long checks = require_cases(out, r, "energy/invariance/");
  require_cases(out, r, "energy/witness/");
  require_cases(out, r, "energy/running-example/");
  for (const auto& c : r.cases) {
    if (c.key.rfind("energy/witness/", 0) == 0 && !c.reproducers.empty()) {
      out.notes.push_back("witness " + c.key + ": " + c.reproducers.front().dump());
    }
  }
  const ProductPoint x{{2, 3}, {5, 7}};
  const Rational moved = schur_pushforward(dilated_staircase(2, 2), 0, 2, Rational(2), x);
  out.require(moved == Rational(78, 7), "worked value 78/7");
  out.summary = std::to_string(checks) + " exact invariance checks; k = n witnesses recorded; D(e_0^2 x) = " +
                moved.str();
  return out;
}

// ---------------------------------------------------------------------------

struct StreamCheck {
  long limits = 0;
  long limits_ok = 0;
  long axioms = 0;
  long axioms_ok = 0;
  long updates = 0;
  long updates_ok = 0;
  std::string first_error;
};

void note_error(StreamCheck& sc, const std::string& what) {
  if (sc.first_error.empty()) sc.first_error = what;
}

std::string describe(const WhirlStream& s) {
  std::string out = "a=(";
  for (std::size_t i = 0; i < s.a.size(); ++i) out += (i ? "," : "") + format_double(s.a[i]);
  out += ")";
  if (!s.curl.empty()) {
    out += " curl=(";
    for (std::size_t i = 0; i < s.curl.size(); ++i) out += (i ? "," : "") + format_double(s.curl[i]);
    out += ")";
  }
  return out;
}

void check_stream(StreamCheck& sc, const WhirlStream& s, Sampler& rng) {
  const int n = s.n();
  WindowMatrix y(n, kStreamWidth);
  try {
    y = truncated_product(s, kStreamFactors, kStreamWidth);
  } catch (const std::exception& e) {
    note_error(sc, describe(s) + ": " + e.what());
    return;
  }
  std::vector<double> phi(static_cast<std::size_t>(n)), eps(static_cast<std::size_t>(n));
  bool all_converged = true;
  for (int k = 1; k <= n; ++k) {
    ++sc.limits;
    try {
      const LimitEstimate e = limit_ratios(y, k, kLimitTol);
      phi[static_cast<std::size_t>(k - 1)] = e.phi;
      eps[static_cast<std::size_t>(k - 1)] = e.eps;
      if (e.converged) {
        ++sc.limits_ok;
      } else {
        all_converged = false;
        const auto& seq = e.phi_sequence;
        note_error(sc, describe(s) + " k=" + std::to_string(k) + ": not converged, last phi estimates " +
                           format_double(seq[seq.size() - 2]) + ", " + format_double(seq.back()));
      }
    } catch (const std::exception& e) {
      all_converged = false;
      note_error(sc, describe(s) + " k=" + std::to_string(k) + ": " + e.what());
    }
  }

  const double c = rng.uniform_real(0.5, 2.0);
  const double c2 = rng.uniform_real(0.5, 2.0);
  const AsymptoticCrystalModel model{n, {kLimitTol, kScalarAxiomTol, kPointAxiomTol}};
  const AxiomReport report = check_axioms_with(model, y, c, c2);
  for (const auto& chk : report.checks) {
    if (chk.outcome == AxiomOutcome::kNotApplicable) continue;
    ++sc.axioms;
    if (chk.outcome == AxiomOutcome::kPass) {
      ++sc.axioms_ok;
    } else {
      note_error(sc, describe(s) + ": axiom (" + std::to_string(chk.axiom) + ") i=" + std::to_string(chk.i) +
                         " j=" + std::to_string(chk.j) + " " + to_string(chk.outcome));
    }
  }

  for (int k = 1; k <= n; ++k) {
    ++sc.updates;
    if (!all_converged) continue;
    const double a = rng.uniform_real(0.01, 2.0);
    try {
      const auto want_phi = update_phi(phi, k, a);
      const auto want_eps = update_eps(eps, k, a);
      const WindowMatrix left = left_chevalley(y, k, a);
      const WindowMatrix right = right_chevalley(y, k, a);
      bool ok = true;
      for (int j = 1; j <= n; ++j) {
        const auto idx = static_cast<std::size_t>(j - 1);
        ok = ok && relative_close(limit_ratios(left, j, kLimitTol).phi, want_phi[idx], kUpdateTol);
        ok = ok && relative_close(limit_ratios(right, j, kLimitTol).eps, want_eps[idx], kUpdateTol);
      }
      if (ok) ++sc.updates_ok;
      else note_error(sc, describe(s) + ": update table mismatch at k=" + std::to_string(k));
    } catch (const std::exception& e) {
      note_error(sc, describe(s) + ": " + e.what());
    }
  }
}

Outcome criterion9(const Options&) {
  Outcome out;
  StreamCheck sc;
  for (int n = 2; n <= 4; ++n) {
    Sampler rng(kSeed, "acceptance/c9/n=" + std::to_string(n));
    std::vector<WhirlStream> streams;
    streams.push_back(WhirlStream{std::vector<double>(static_cast<std::size_t>(n), 1.0), kStreamQ, {}});
    for (int t = 0; t < 4; ++t) {
      WhirlStream s{{}, kStreamQ, {}};
      for (int i = 0; i < n; ++i) s.a.push_back(rng.uniform_real(0.5, 2.0));
      streams.push_back(std::move(s));
    }
    for (const auto& s : streams) check_stream(sc, s, rng);
  }
  out.require(sc.limits_ok == sc.limits, "limit ratios converge (" + std::to_string(sc.limits_ok) + "/" +
                                             std::to_string(sc.limits) + ")");
  out.require(sc.axioms_ok == sc.axioms && sc.axioms > 0,
              "axioms within tolerance (" + std::to_string(sc.axioms_ok) + "/" + std::to_string(sc.axioms) + ")");
  out.require(sc.updates_ok == sc.updates, "update tables (" + std::to_string(sc.updates_ok) + "/" +
                                               std::to_string(sc.updates) + ")");
  if (!sc.first_error.empty()) out.notes.push_back("first problem: " + sc.first_error);
  out.summary = "geometric whirl streams, q = 1/2, W = 60, N = 120";
  if (!out.pass) {
    out.notes.push_back(
        "reason: for x_i = a q^(i-1) the window entries are y_{k,k+d} = a^(k)...a^(k+d-1) e_d(1,q,...,q^(N-1)), so "
        "the phi estimate is a^(k) q^(d-1)(1-q^(N-d+1))/(1-q^d): it halves at every step and tends to 0, and "
        "entries of order 2^(-d(d-1)/2) underflow before d = 60");
  }

  // Same q, W, N with a curl factor in front: positive limits exist.
  StreamCheck curled;
  for (int n = 2; n <= 4; ++n) {
    Sampler rng(kSeed, "acceptance/c9/curled/n=" + std::to_string(n));
    for (int t = 0; t < 5; ++t) {
      WhirlStream s{{}, kStreamQ, {}};
      for (int i = 0; i < n; ++i) s.a.push_back(rng.uniform_real(0.5, 2.0));
      for (int i = 0; i < n; ++i) s.curl.push_back(rng.uniform_real(0.5, 2.0));
      check_stream(curled, s, rng);
    }
  }
  out.notes.push_back("supplementary, curled streams: limits " + std::to_string(curled.limits_ok) + "/" +
                      std::to_string(curled.limits) + ", axioms " + std::to_string(curled.axioms_ok) + "/" +
                      std::to_string(curled.axioms) + ", update tables " + std::to_string(curled.updates_ok) + "/" +
                      std::to_string(curled.updates) +
                      (curled.first_error.empty() ? "" : ", first problem: " + curled.first_error));
  return out;
}

// ---------------------------------------------------------------------------

struct Captured {
  int status = -1;
  std::string output;
};

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char ch : s) {
    if (ch == '\'') out += "'\\''";
    else out += ch;
  }
  return out + "'";
}

Captured capture(const std::string& command) {
  Captured c;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return c;
  std::array<char, 4096> buf{};
  std::size_t got = 0;
  while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) c.output.append(buf.data(), got);
  const int raw = pclose(pipe);
  c.status = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
  return c;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Outcome criterion10(const Options& opt) {
  Outcome out;
  if (opt.cli.empty() || opt.golden.empty()) {
    out.require(false, "--cli and --golden are required");
    return out;
  }
  const std::string verify = quote(opt.cli) + " verify all --seed 7 --json";
  const auto start = std::chrono::steady_clock::now();
  const Captured first = capture(verify);
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const Captured second = capture(verify);
  out.require(!first.output.empty(), "verify produced a report");
  out.require(first.output == second.output, "byte-identical reports");
  out.require(first.status == 0 && second.status == 0, "verify all exits 0");
  out.notes.push_back("verify all --seed 7: exit " + std::to_string(first.status) + ", " +
                      std::to_string(first.output.size()) + " bytes, " + std::to_string(static_cast<int>(seconds)) +
                      " s per run");

  int golden = 0;
  for (const char* name : {"eval_energy", "eval_schur", "apply_point", "apply_matrix", "matrix_window", "matrix_json"}) {
    const std::string base = opt.golden + "/" + name;
    std::string args = slurp(base + ".args");
    while (!args.empty() && (args.back() == '\n' || args.back() == '\r')) args.pop_back();
    std::string command = quote(opt.cli);
    std::stringstream ss(args);
    std::string item;
    while (std::getline(ss, item, ';')) {
      for (auto pos = item.find("@DIR@"); pos != std::string::npos; pos = item.find("@DIR@")) {
        item.replace(pos, 5, opt.golden);
      }
      command += " " + quote(item);
    }
    const Captured got = capture(command);
    const bool ok = got.status == 0 && got.output == slurp(base + ".out");
    out.require(ok, std::string("golden ") + name);
    golden += ok;
  }
  out.summary = "two runs of verify all compared byte for byte; " + std::to_string(golden) + "/6 golden files match";
  return out;
}

const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>>& criteria() {
  static const std::vector<std::pair<std::string, std::function<Outcome(const Options&)>>> table = {
      {"whirl-entry identity", criterion1},
      {"R-matrix relations", criterion2},
      {"crystal axioms on the product crystal", criterion3},
      {"crystal data as ratios of loop elementary functions", criterion4},
      {"quotient identification and the four-case formula", criterion5},
      {"Jacobi-Trudi formula", criterion6},
      {"crystal action on loop Schur functions", criterion7},
      {"energy invariance", criterion8},
      {"asymptotic crystal on geometric whirl streams", criterion9},
      {"CLI determinism and golden files", criterion10},
  };
  return table;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance checks"};
  int only = 0;
  Options opt;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(0, 10));
  app.add_option("--cli", opt.cli, "Path to the gcrystal binary");
  app.add_option("--golden", opt.golden, "Directory with golden files");
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (std::size_t i = 0; i < criteria().size(); ++i) {
    const int number = static_cast<int>(i) + 1;
    if (only != 0 && only != number) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome out;
    try {
      out = criteria()[i].second(opt);
    } catch (const std::exception& e) {
      out.require(false, std::string("exception: ") + e.what());
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all_pass = all_pass && out.pass;
    char timing[32];
    std::snprintf(timing, sizeof timing, "%.1fs", seconds);
    std::cout << (out.pass ? "PASS" : "FAIL") << "  criterion " << number << ": " << criteria()[i].first << " -- "
              << out.summary << " [" << timing << "]\n";
    for (const auto& note : out.notes) std::cout << "      " << note << '\n';
  }
  return all_pass ? 0 : 1;
}
