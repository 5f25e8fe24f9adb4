// Acceptance gate: one PASS/FAIL line per criterion, all comparisons exact.
// Exit status is 0 only when every criterion passes.

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "fuzz_input.hpp"
#include "oracles.hpp"
#include "tripow/cli.hpp"
#include "tripow/tripow.hpp"

using namespace tripow;

namespace {

struct Outcome {
  bool passed = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }

  void require(const VerifyReport& r) {
    require(r.passed(), summary(r));
    checked += r.checked;
  }

  std::size_t checked = 0;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;  // 0 means no bound
  std::function<Outcome()> run;
};

SuiteConfig config(std::size_t order, std::size_t reps, std::optional<SRange> range = std::nullopt) {
  return SuiteConfig{order, 42, reps, range};
}

Outcome suites(std::initializer_list<const char*> names, const SuiteConfig& cfg) {
  Outcome o;
  for (const char* name : names) o.require(run_suite(name, cfg));
  return o;
}

struct CliRun {
  int code;
  std::string out;
};

CliRun cli_run(std::vector<std::string> args) {
  args.insert(args.begin(), "tripow");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = cli::main(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str() + err.str()};
}

Outcome bell_criterion() {
  Outcome o = suites({"bell"}, config(8, 50));
  // Independent check of the Stirling numbers by the alternating sum.
  const Series e = preset_series({PresetKind::expm1, 0}, 10);
  for (unsigned long n = 0; n <= 10; ++n)
    for (unsigned long k = 0; k <= n; ++k) {
      const Rational b = bell_partial(e, n, k);
      o.require(b == Rational(oracle::stirling2_explicit(n, k)) &&
                    b == Rational(stirling2(static_cast<long>(n), static_cast<long>(k))),
                "S(" + std::to_string(n) + "," + std::to_string(k) + ")");
      ++o.checked;
    }
  return o;
}

Outcome binomial_family_criterion() {
  Outcome o = suites({"eq30"}, config(8, 0));
  o.require(run_suite("eq31", config(8, 0, SRange{-1, 2})));
  // Independent check by set-partition enumeration.
  for (const Rational& alpha : {Rational(2), Rational(3), make_rational(1, 2)}) {
    const TriMatrix A = example_matrix_30(alpha, 8);
    const Series phi = preset_series({PresetKind::binomial_minus_one, alpha}, 8);
    const oracle::Poly c(phi.coeffs().begin(), phi.coeffs().end());
    for (std::size_t k = 1; k <= 8; ++k)
      for (std::size_t n = k; n <= 8; ++n) {
        o.require(A(k, n) == oracle::bell_by_partitions(c, n, k), "partition oracle alpha=" + to_string(alpha));
        ++o.checked;
      }
  }
  return o;
}

Outcome cli_criterion() {
  Outcome o;
  const std::vector<std::string> verify = {"verify", "--suite", "all", "--order", "8", "--seed", "42"};
  const CliRun first = cli_run(verify);
  o.require(first.code == 0, "verify exit code " + std::to_string(first.code));
  o.require(cli_run(verify).out == first.out, "verify output differs between runs");
  const std::vector<std::string> power = {"power", "--phi", "t/(1-t)^2", "--g", "exp(t)", "--h", "1+t/2",
                                          "--order", "7", "--s", "-3", "--format", "json"};
  const CliRun p = cli_run(power);
  o.require(p.code == 0 && cli_run(power).out == p.out, "power output differs between runs");

  std::mt19937_64 rng(20240601);
  for (int i = 0; i < 10000; ++i) {
    const std::string input = fuzz::random_input(rng);
    try {
      (void)elaborate(parse_series_expr(input), 4);
    } catch (const error&) {
    } catch (const std::exception& e) {
      o.require(false, std::string("fuzz input raised ") + e.what());
    }
    ++o.checked;
  }
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "closed form = oracle, s in 0..4, 100 specs, N=8", 60,
       [] { return suites({"thm1"}, config(8, 100, SRange{0, 4})); }},
      {2, "closed form = oracle and A^s A^-s = I, s in -4..-1, 100 specs, N=8", 60,
       [] { return suites({"thm2"}, config(8, 100, SRange{-4, -1})); }},
      {3, "derivative form = composed form, 100 specs, N=10", 30,
       [] { return suites({"eq4"}, config(10, 100)); }},
      {4, "weight conjugation commutes with powers, s in -3..3", 0,
       [] { return suites({"l0"}, config(8, 20, SRange{-3, 3})); }},
      {5, "reduced forms c1..c5 = general closed form, 20 specs each, N=8, s in -3..3", 0,
       [] { return suites({"c1", "c2", "c3", "c4", "c5"}, config(8, 20, SRange{-3, 3})); }},
      {6, "geometric family: [A^s]_{k,n} = s^(n-k) [A]_{k,n}, s in 1..4, N=8", 0,
       [] { return suites({"eq26"}, config(8, 0)); }},
      {7, "Touchard and ordered Bell moment identities, m in 0..5, M=10", 0,
       [] { return suites({"eq27", "eq28"}, config(10, 0)); }},
      {8, "binomial family: Bell triangle and powers alpha^s, s in -1..2, N=8", 0, binomial_family_criterion},
      {9, "partial Bell: Stirling numbers n<=10 and generating function, 50 random phi", 0, bell_criterion},
      {10, "cli: verify all exits 0, 10^4 fuzz inputs, byte-identical reruns", 0, cli_criterion},
  };

  bool all = true;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o.require(false, std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_seconds > 0 && secs > c.limit_seconds)
      o.require(false, "took " + std::to_string(secs) + " s, limit " + std::to_string(c.limit_seconds) + " s");
    all = all && o.passed;
    char timing[64];
    std::snprintf(timing, sizeof timing, "%.2f s", secs);
    std::cout << (o.passed ? "PASS" : "FAIL") << " [" << c.id << "] " << c.title << " (checked=" << o.checked << ", "
              << timing << (c.limit_seconds > 0 ? ", limit " + std::to_string(static_cast<int>(c.limit_seconds)) + " s" : "")
              << ")" << (o.detail.empty() ? "" : " -- " + o.detail) << '\n';
  }
  std::cout << (all ? "ALL CRITERIA PASS" : "SOME CRITERIA FAIL") << " (tolerance 0, exact rational arithmetic)\n";
  return all ? 0 : 1;
}
