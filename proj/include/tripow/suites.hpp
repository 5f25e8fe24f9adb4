#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "tripow/bell.hpp"
#include "tripow/corollary.hpp"
#include "tripow/error.hpp"
#include "tripow/matrix.hpp"
#include "tripow/presets.hpp"
#include "tripow/verify.hpp"

namespace tripow {

struct SuiteConfig {
  std::size_t order = 8;
  std::uint64_t seed = 42;
  std::size_t reps = 0;                 ///< 0 selects the suite's default count
  std::optional<SRange> s_range;        ///< overrides the suite's default powers
};

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"thm1", "thm2", "eq4",  "l0",   "c1",   "c2",   "c3",  "c4",
                                                 "c5",   "eq26", "eq27", "eq28", "eq30", "eq31", "bell"};
  return names;
}

namespace detail {

inline VerifyReport suite_report(std::string_view name, const SuiteConfig& cfg, SRange range, std::size_t reps) {
  VerifyReport r;
  r.suite = std::string(name);
  r.fingerprint = "order=" + std::to_string(cfg.order) + ",seed=" + std::to_string(cfg.seed) +
                  ",reps=" + std::to_string(reps);
  r.s_range = range;
  return r;
}

// Distinct generator stream per suite, fixed by the seed.
inline SpecGenerator suite_generator(std::string_view name, std::uint64_t seed) {
  std::uint64_t salt = 0;
  for (unsigned char c : name) salt = salt * 131 + c;
  return SpecGenerator(seed ^ (salt * 0x9e3779b97f4a7c15ULL));
}

inline std::size_t reps_or(const SuiteConfig& cfg, std::size_t fallback) { return cfg.reps ? cfg.reps : fallback; }

/// Runs `body` and turns an escaping exception into a failed report.
template <class Body>
VerifyReport guarded(VerifyReport report, Body&& body) {
  try {
    body(report);
  } catch (const std::exception& e) {
    report.error_message = e.what();
  }
  return report;
}

template <class MakeParams>
VerifyReport corollary_suite(std::string_view name, const SuiteConfig& cfg, MakeParams&& make) {
  const SRange range = cfg.s_range.value_or(SRange{-3, 3});
  const std::size_t reps = reps_or(cfg, 20);
  return guarded(suite_report(name, cfg, range, reps), [&](VerifyReport& report) {
    SpecGenerator gen = suite_generator(name, cfg.seed);
    for (std::size_t i = 0; i < reps; ++i) report.absorb(verify_corollary(make(gen), range));
  });
}

}  // namespace detail

/// Closed form against the oracle for s >= 0.
inline VerifyReport suite_thm1(const SuiteConfig& cfg) {
  const SRange range = cfg.s_range.value_or(SRange{0, 4});
  const std::size_t reps = detail::reps_or(cfg, 100);
  return detail::guarded(detail::suite_report("thm1", cfg, range, reps), [&](VerifyReport& report) {
    SpecGenerator gen = detail::suite_generator("thm1", cfg.seed);
    for (std::size_t i = 0; i < reps; ++i) report.absorb(verify_equiv(gen.spec(cfg.order), range));
  });
}

/// Closed form against the oracle for s < 0, plus A^s A^(-s) = I.
inline VerifyReport suite_thm2(const SuiteConfig& cfg) {
  const SRange range = cfg.s_range.value_or(SRange{-4, -1});
  const std::size_t reps = detail::reps_or(cfg, 100);
  return detail::guarded(detail::suite_report("thm2", cfg, range, reps), [&](VerifyReport& report) {
    SpecGenerator gen = detail::suite_generator("thm2", cfg.seed);
    for (std::size_t i = 0; i < reps; ++i) {
      const MatrixSpec spec = gen.spec(cfg.order);
      report.absorb(verify_equiv(spec, range, VerifyMode::closed_vs_oracle));
      report.absorb(verify_equiv(spec, range, VerifyMode::inverse_pairing));
    }
  });
}

/// Derivative form (build_matrix) against the composed form (power_closed at s = 1).
inline VerifyReport suite_eq4(const SuiteConfig& cfg) {
  const std::size_t reps = detail::reps_or(cfg, 100);
  return detail::guarded(detail::suite_report("eq4", cfg, SRange{1, 1}, reps), [&](VerifyReport& report) {
    SpecGenerator gen = detail::suite_generator("eq4", cfg.seed);
    for (std::size_t i = 0; i < reps; ++i) {
      const MatrixSpec spec = gen.spec(cfg.order).with_weights(Weights::ones(cfg.order));
      report.compare(build_matrix(spec), power_closed(spec, 1), 1);
    }
  });
}

/// Powering commutes with weight conjugation.
inline VerifyReport suite_l0(const SuiteConfig& cfg) {
  const SRange range = cfg.s_range.value_or(SRange{-3, 3});
  const std::size_t reps = detail::reps_or(cfg, 20);
  return detail::guarded(detail::suite_report("l0", cfg, range, reps), [&](VerifyReport& report) {
    SpecGenerator gen = detail::suite_generator("l0", cfg.seed);
    for (std::size_t i = 0; i < reps; ++i) {
      const MatrixSpec plain = gen.spec(cfg.order).with_weights(Weights::ones(cfg.order));
      const Weights a = gen.mixed_weights(cfg.order);
      const MatrixSpec weighted = plain.with_weights(a);
      const TriMatrix A = apply_weights(build_matrix(plain), a);
      const TriMatrix A_inv = mat_inverse(A);
      for (long s = range.lo; s <= range.hi; ++s) {
        TriMatrix power = TriMatrix::identity(cfg.order);
        for (long j = 0; j < (s < 0 ? -s : s); ++j) power = mat_mul(power, s < 0 ? A_inv : A);
        const TriMatrix weighted_power = apply_weights(power_oracle(plain, s), a);
        report.compare(weighted_power, power, s);
        report.compare(weighted_power, power_closed(weighted, s), s);
      }
    }
  });
}

inline VerifyReport suite_c1(const SuiteConfig& cfg) {
  return detail::corollary_suite("c1", cfg, [&](SpecGenerator& gen) -> CorollaryParams {
    Series phi = gen.phi(cfg.order);
    Series g = gen.unit(cfg.order);
    return C1Params{std::move(phi), std::move(g), gen.weights(cfg.order)};
  });
}

inline VerifyReport suite_c2(const SuiteConfig& cfg) {
  return detail::corollary_suite("c2", cfg, [&](SpecGenerator& gen) -> CorollaryParams {
    Series g = gen.unit(cfg.order);
    return C2Params{std::move(g), gen.weights(cfg.order)};
  });
}

inline VerifyReport suite_c3(const SuiteConfig& cfg) {
  return detail::corollary_suite("c3", cfg, [&](SpecGenerator& gen) -> CorollaryParams {
    Series phi = gen.phi(cfg.order);
    return C3Params{std::move(phi), gen.weights(cfg.order)};
  });
}

/// alpha cycles through integers and fractions; fractional alpha gets phi'(0) = 1.
inline VerifyReport suite_c4(const SuiteConfig& cfg) {
  return detail::corollary_suite("c4", cfg, [&](SpecGenerator& gen) -> CorollaryParams {
    static const Rational alphas[] = {Rational(-2), Rational(-1), Rational(0),     Rational(1),
                                      Rational(3),  Rational(1, 2), Rational(-1, 2), Rational(5, 3)};
    Rational alpha = alphas[gen.raw() % 8];
    Series phi = gen.phi(cfg.order);
    if (!is_integer(alpha)) {
      std::vector<Rational> c(phi.coeffs().begin(), phi.coeffs().end());
      c[1] = 1;
      phi = Series(std::move(c));
    }
    return C4Params{std::move(phi), alpha, gen.weights(cfg.order)};
  });
}

inline VerifyReport suite_c5(const SuiteConfig& cfg) {
  return detail::corollary_suite("c5", cfg, [&](SpecGenerator& gen) -> CorollaryParams { return gen.c5(cfg.order); });
}

inline VerifyReport suite_eq26(const SuiteConfig& cfg) {
  const SRange range = cfg.s_range.value_or(SRange{1, 4});
  return detail::guarded(detail::suite_report("eq26", cfg, range, 6), [&](VerifyReport& report) {
    for (const Rational& alpha : {Rational(1), Rational(2), Rational(-1, 2)})
      for (const Rational& beta : {Rational(1), Rational(2)}) {
        VerifyReport r = check_scaling_26(alpha, beta, cfg.order, range.hi);
        report.absorb(r);
      }
  });
}

inline VerifyReport suite_eq27(const SuiteConfig& cfg) {
  return detail::guarded(detail::suite_report("eq27", cfg, SRange{0, 0}, 6), [&](VerifyReport& report) {
    for (long m = 0; m <= 5; ++m) report.absorb(check_exp_27(m, cfg.order, cfg.order));
  });
}

inline VerifyReport suite_eq28(const SuiteConfig& cfg) {
  return detail::guarded(detail::suite_report("eq28", cfg, SRange{0, 0}, 6), [&](VerifyReport& report) {
    for (long m = 0; m <= 5; ++m) report.absorb(check_resolvent_28(m, cfg.order));
  });
}

/// example_matrix_30 against the Bell triangle of (1+t)^alpha - 1, both directly
/// and through the derivative-form constructor.
inline VerifyReport suite_eq30(const SuiteConfig& cfg) {
  return detail::guarded(detail::suite_report("eq30", cfg, SRange{1, 1}, 3), [&](VerifyReport& report) {
    for (const Rational& alpha : {Rational(2), Rational(3), Rational(1, 2)}) {
      const TriMatrix explicit_form = example_matrix_30(alpha, cfg.order);
      const Series phi = preset_series({PresetKind::binomial_minus_one, alpha}, cfg.order);
      for (std::size_t k = 1; k <= cfg.order; ++k)
        for (std::size_t n = k; n <= cfg.order; ++n) report.compare(k, n, 1, bell_partial(phi, n, k), explicit_form(k, n));
      report.compare(build_matrix(example_30_spec(alpha, cfg.order)), explicit_form, 1);
    }
  });
}

inline VerifyReport suite_eq31(const SuiteConfig& cfg) {
  const SRange range = cfg.s_range.value_or(SRange{-1, 2});
  return detail::guarded(detail::suite_report("eq31", cfg, range, 3), [&](VerifyReport& report) {
    for (const Rational& alpha : {Rational(2), Rational(3), Rational(1, 2)})
      for (long s = range.lo; s <= range.hi; ++s) report.absorb(check_power_31(alpha, s, cfg.order));
  });
}

/// B_{n,k}(e^t - 1) = S(n,k) for n <= max(order, 10), and the generating-function
/// identity sum_n B_{n,k}(phi) t^n/n! = phi^k/k! for random phi.
inline VerifyReport suite_bell(const SuiteConfig& cfg) {
  const std::size_t reps = detail::reps_or(cfg, 50);
  return detail::guarded(detail::suite_report("bell", cfg, SRange{0, 0}, reps), [&](VerifyReport& report) {
    const std::size_t n_max = std::max<std::size_t>(cfg.order, 10);
    const Series expm1 = preset_series({PresetKind::expm1, 0}, n_max);
    for (std::size_t n = 0; n <= n_max; ++n)
      for (std::size_t k = 0; k <= n; ++k)
        report.compare(k, n, 0, Rational(stirling2(static_cast<long>(n), static_cast<long>(k))), bell_partial(expm1, n, k));
    SpecGenerator gen = detail::suite_generator("bell", cfg.seed);
    for (std::size_t i = 0; i < reps; ++i) {
      const Series phi = gen.series(cfg.order, true, std::nullopt);
      for (std::size_t k = 0; k <= cfg.order; ++k) {
        const Series expected = Rational(1) / Rational(factorial(k)) * pow_int(phi, static_cast<long>(k));
        for (std::size_t n = 0; n <= cfg.order; ++n) {
          const Rational from_bell = n < k ? Rational(0) : bell_partial(phi, n, k) / Rational(factorial(n));
          report.compare(k, n, 0, expected[n], from_bell);
        }
      }
    }
  });
}

inline VerifyReport run_suite(std::string_view name, const SuiteConfig& cfg) {
  if (name == "thm1") return suite_thm1(cfg);
  if (name == "thm2") return suite_thm2(cfg);
  if (name == "eq4") return suite_eq4(cfg);
  if (name == "l0") return suite_l0(cfg);
  if (name == "c1") return suite_c1(cfg);
  if (name == "c2") return suite_c2(cfg);
  if (name == "c3") return suite_c3(cfg);
  if (name == "c4") return suite_c4(cfg);
  if (name == "c5") return suite_c5(cfg);
  if (name == "eq26") return suite_eq26(cfg);
  if (name == "eq27") return suite_eq27(cfg);
  if (name == "eq28") return suite_eq28(cfg);
  if (name == "eq30") return suite_eq30(cfg);
  if (name == "eq31") return suite_eq31(cfg);
  if (name == "bell") return suite_bell(cfg);
  throw error(errc::domain, "unknown suite '" + std::string(name) + "'");
}

/// Expands "all" to every suite.
inline std::vector<VerifyReport> run_suites(std::string_view name, const SuiteConfig& cfg) {
  std::vector<VerifyReport> out;
  if (name == "all") {
    for (const auto& n : suite_names()) out.push_back(run_suite(n, cfg));
  } else {
    out.push_back(run_suite(name, cfg));
  }
  return out;
}

}  // namespace tripow
