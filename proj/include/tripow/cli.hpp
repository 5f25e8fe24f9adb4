#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tripow/error.hpp"
#include "tripow/expr.hpp"
#include "tripow/matrix.hpp"
#include "tripow/presets.hpp"
#include "tripow/suites.hpp"
#include "tripow/verify.hpp"

namespace tripow::cli {

enum class Format { table, csv, json };

struct RunConfig {
  std::string command;
  std::size_t order = 8;
  std::optional<std::string> phi, g, h, preset_phi;
  std::vector<std::string> weights{"ones"};
  long s = 1;
  std::optional<SRange> s_range;
  std::optional<std::size_t> k, n;
  std::uint64_t seed = 42;
  std::size_t reps = 0;
  Format format = Format::table;
  std::string suite = "all";
  std::optional<std::string> expr;  // positional argument of `parse`
};

inline constexpr int exit_ok = 0;
inline constexpr int exit_failed = 1;
inline constexpr int exit_usage = 2;

/// Largest |s| accepted on the command line.
inline constexpr long max_abs_s = 64;

/// "A..B" with integers A <= B.
inline SRange parse_s_range(const std::string& text) {
  auto dots = text.find("..");
  if (dots == std::string::npos) throw error(errc::syntax, "s-range must look like A..B, got '" + text + "'");
  try {
    std::size_t used = 0;
    const std::string lo_text = text.substr(0, dots), hi_text = text.substr(dots + 2);
    SRange r{std::stol(lo_text, &used), 0};
    if (used != lo_text.size()) throw std::invalid_argument(lo_text);
    r.hi = std::stol(hi_text, &used);
    if (used != hi_text.size()) throw std::invalid_argument(hi_text);
    if (r.lo > r.hi) throw error(errc::domain, "s-range is empty: '" + text + "'");
    return r;
  } catch (const std::logic_error&) {
    throw error(errc::syntax, "s-range must look like A..B, got '" + text + "'");
  }
}

inline Weights parse_weights(const std::vector<std::string>& items, std::size_t order) {
  if (items.size() == 1 && items[0] == "ones") return Weights::ones(order);
  if (items.size() == 1 && items[0] == "factorial") return Weights::factorial(order);
  if (items.size() != order)
    throw error(errc::invalid_weights,
                "expected " + std::to_string(order) + " weights, got " + std::to_string(items.size()));
  std::vector<Rational> a;
  for (const auto& item : items) a.push_back(parse_rational(item));
  return Weights(std::move(a));
}

inline MatrixSpec make_spec(const RunConfig& cfg) {
  if (cfg.order < 1) throw error(errc::invalid_spec, "--order must be at least 1");
  if (cfg.phi && cfg.preset_phi) throw error(errc::invalid_spec, "--phi and --preset-phi are exclusive");
  Series phi = cfg.preset_phi ? preset_series(parse_preset(*cfg.preset_phi), cfg.order)
                              : elaborate(cfg.phi.value_or("t"), cfg.order);
  Series g = elaborate(cfg.g.value_or("1"), cfg.order);
  Series h = elaborate(cfg.h.value_or("1"), cfg.order);
  return MatrixSpec(std::move(phi), std::move(g), std::move(h), parse_weights(cfg.weights, cfg.order));
}

inline void emit_matrix(const TriMatrix& m, long s, Format format, std::ostream& out) {
  const std::size_t order = m.order();
  switch (format) {
    case Format::table: {
      std::size_t width = 1;
      for (std::size_t k = 1; k <= order; ++k)
        for (std::size_t n = k; n <= order; ++n) width = std::max(width, to_string(m(k, n)).size());
      for (std::size_t k = 1; k <= order; ++k) {
        for (std::size_t n = 1; n <= order; ++n)
          out << (n > 1 ? " " : "") << std::setw(static_cast<int>(width)) << to_string(m(k, n));
        out << '\n';
      }
      break;
    }
    case Format::csv:
      out << "k,n,value\n";
      for (std::size_t k = 1; k <= order; ++k)
        for (std::size_t n = k; n <= order; ++n) out << k << ',' << n << ',' << to_string(m(k, n)) << '\n';
      break;
    case Format::json: {
      nlohmann::ordered_json doc;
      doc["order"] = order;
      doc["s"] = s;
      doc["entries"] = nlohmann::ordered_json::array();
      for (std::size_t k = 1; k <= order; ++k)
        for (std::size_t n = k; n <= order; ++n)
          doc["entries"].push_back({{"k", k}, {"n", n}, {"value", to_string(m(k, n))}});
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

inline void emit_reports(const std::vector<VerifyReport>& reports, Format format, std::ostream& out) {
  switch (format) {
    case Format::table:
      for (const auto& r : reports) out << summary(r) << '\n';
      break;
    case Format::csv:
      out << "suite,passed,checked,failures\n";
      for (const auto& r : reports)
        out << r.suite << ',' << (r.passed() ? "true" : "false") << ',' << r.checked << ',' << r.failures.size() << '\n';
      break;
    case Format::json: {
      auto doc = nlohmann::ordered_json::array();
      for (const auto& r : reports) {
        nlohmann::ordered_json j;
        j["suite"] = r.suite;
        j["fingerprint"] = r.fingerprint;
        j["s_range"] = {r.s_range.lo, r.s_range.hi};
        j["passed"] = r.passed();
        j["checked"] = r.checked;
        j["failures"] = r.failures.size();
        if (const Mismatch* m = r.first_failure())
          j["first_failure"] = {{"k", m->k}, {"n", m->n}, {"s", m->s}, {"expected", to_string(m->expected)},
                                {"actual", to_string(m->actual)}};
        if (r.error_message) j["error"] = *r.error_message;
        doc.push_back(std::move(j));
      }
      out << doc.dump(2) << '\n';
      break;
    }
  }
}

namespace detail {

inline void check_s(long s) {
  if (s < -max_abs_s || s > max_abs_s) throw error(errc::domain, "|s| must be at most " + std::to_string(max_abs_s));
}

inline int run_bench(const RunConfig& cfg, std::ostream& out) {
  using clock = std::chrono::steady_clock;
  const SRange range = cfg.s_range.value_or(SRange{-4, 4});
  check_s(range.lo);
  check_s(range.hi);
  const bool explicit_spec = cfg.phi || cfg.g || cfg.h || cfg.preset_phi;
  std::vector<MatrixSpec> specs;
  if (explicit_spec) {
    specs.push_back(make_spec(cfg));
  } else {
    SpecGenerator gen(cfg.seed);
    for (std::size_t i = 0; i < (cfg.reps ? cfg.reps : 20); ++i) specs.push_back(gen.spec(cfg.order));
  }
  const std::size_t rounds = explicit_spec ? std::max<std::size_t>(cfg.reps, 1) : 1;
  clock::duration closed{}, oracle{};
  bool agree = true;
  for (std::size_t round = 0; round < rounds; ++round)
    for (const auto& spec : specs)
      for (long s = range.lo; s <= range.hi; ++s) {
        auto t0 = clock::now();
        TriMatrix a = power_closed(spec, s);
        auto t1 = clock::now();
        TriMatrix b = power_oracle(spec, s);
        auto t2 = clock::now();
        closed += t1 - t0;
        oracle += t2 - t1;
        agree = agree && a == b;
      }
  auto ms = [](clock::duration d) { return std::chrono::duration<double, std::milli>(d).count(); };
  out << std::fixed << std::setprecision(3) << "specs=" << specs.size() << " rounds=" << rounds << " s=" << range.lo
      << ".." << range.hi << " order=" << cfg.order << " closed_ms=" << ms(closed) << " oracle_ms=" << ms(oracle)
      << " agree=" << (agree ? "yes" : "no") << '\n';
  return agree ? exit_ok : exit_failed;
}

}  // namespace detail

/// Executes a parsed configuration. Returns 0 on success, 1 when a
/// verification fails, 2 for usage or spec errors (reported on `err`).
inline int run_command(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "parse") {
      const std::string text = cfg.expr ? *cfg.expr : cfg.phi.value_or("");
      if (text.empty()) throw error(errc::syntax, "parse needs an expression");
      const Expr ast = parse_series_expr(text);
      out << "ast: " << to_string(ast) << '\n';
      out << "series: " << to_string(elaborate(ast, cfg.order)) << '\n';
      return exit_ok;
    }
    if (cfg.command == "verify") {
      if (cfg.order < 1) throw error(errc::invalid_spec, "--order must be at least 1");
      if (cfg.s_range) {
        detail::check_s(cfg.s_range->lo);
        detail::check_s(cfg.s_range->hi);
      }
      if (cfg.suite != "all" && std::find(suite_names().begin(), suite_names().end(), cfg.suite) == suite_names().end())
        throw error(errc::domain, "unknown suite '" + cfg.suite + "'");
      const auto reports = run_suites(cfg.suite, SuiteConfig{cfg.order, cfg.seed, cfg.reps, cfg.s_range});
      emit_reports(reports, cfg.format, out);
      return std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); }) ? exit_ok
                                                                                                  : exit_failed;
    }
    if (cfg.command == "bench") return detail::run_bench(cfg, out);

    const MatrixSpec spec = make_spec(cfg);
    const long s = cfg.command == "inverse" ? -1 : cfg.s;
    detail::check_s(s);
    if (cfg.command == "power" || cfg.command == "inverse") {
      emit_matrix(power_closed(spec, s), s, cfg.format, out);
      return exit_ok;
    }
    if (cfg.command == "entry") {
      if (!cfg.k || !cfg.n) throw error(errc::index, "entry needs --k and --n");
      if (*cfg.k < 1 || *cfg.n < 1 || *cfg.k > cfg.order || *cfg.n > cfg.order)
        throw error(errc::index, "--k and --n must lie in 1.." + std::to_string(cfg.order));
      out << to_string(power_closed(spec, s)(*cfg.k, *cfg.n)) << '\n';
      return exit_ok;
    }
    throw error(errc::domain, "unknown command '" + cfg.command + "'");
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
}

/// Parses argv into `cfg`. Returns an exit code when the program should stop
/// right away (help requested, or a usage error).
inline std::optional<int> parse_command_line(int argc, const char* const* argv, RunConfig& cfg, std::ostream& out,
                                             std::ostream& err) {
  CLI::App app{"Powers and inverses of exact upper-triangular matrices built from (phi, g, h, a)."};
  app.set_help_flag("--help", "Print this help message and exit");  // -h would clash with --h
  app.set_config("--config", "", "Key-value file (key = value per line); command-line flags win");
  app.require_subcommand(1, 1);

  app.add_option("--phi", cfg.phi, "phi(t) expression, phi(0) = 0 (default t)");
  app.add_option("--g", cfg.g, "g(t) expression (default 1)");
  app.add_option("--h", cfg.h, "h(t) expression (default 1)");
  app.add_option("--preset-phi", cfg.preset_phi, "named phi: identity_t, geometric(b), binomial_minus_one(a), expm1, log1p");
  app.add_option("--weights", cfg.weights, "ones | factorial | comma-separated list a_1,...,a_N")->delimiter(',');
  app.add_option("--order", cfg.order, "truncation order N")->check(CLI::Range(1, 1000));
  app.add_option("--s", cfg.s, "power (negative for inverse powers)");
  std::string s_range;
  auto* s_range_opt = app.add_option("--s-range", s_range, "power range A..B (verify, bench)");
  app.add_option("--k", cfg.k, "row index (entry)");
  app.add_option("--n", cfg.n, "column index (entry)");
  app.add_option("--seed", cfg.seed, "seed for random specs");
  app.add_option("--reps", cfg.reps, "number of random specs (verify) or timing rounds (bench)");
  app.add_option("--format", cfg.format, "table | csv | json")
      ->transform(CLI::CheckedTransformer(
          std::map<std::string, Format>{{"table", Format::table}, {"csv", Format::csv}, {"json", Format::json}}));
  std::string suites = "all";
  for (const auto& n : suite_names()) suites += ", " + n;
  app.add_option("--suite", cfg.suite, "verification suite: " + suites);

  struct Sub {
    const char* name;
    const char* help;
  };
  for (const Sub& sub : {Sub{"entry", "print entry (k, n) of A^s"}, Sub{"power", "print A^s"},
                         Sub{"inverse", "print A^-1 (power --s -1)"}, Sub{"verify", "run verification suites"},
                         Sub{"bench", "time closed form against the oracle"}, Sub{"parse", "dump an expression's AST"}}) {
    auto* c = app.add_subcommand(sub.name, sub.help);
    c->fallthrough();
    if (std::string(sub.name) == "parse") c->add_option("expr", cfg.expr, "series expression");
    c->callback([&cfg, c] { cfg.command = c->get_name(); });
  }

  try {
    app.parse(argc, argv);
    if (s_range_opt->count() > 0) cfg.s_range = parse_s_range(s_range);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  } catch (const error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return std::nullopt;
}

/// argv in, exit code out.
inline int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig cfg;
  if (auto code = parse_command_line(argc, argv, cfg, out, err)) return *code;
  return run_command(cfg, out, err);
}

}  // namespace tripow::cli
