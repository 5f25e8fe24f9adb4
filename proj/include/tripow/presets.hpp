#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripow/bell.hpp"
#include "tripow/corollary.hpp"
#include "tripow/error.hpp"
#include "tripow/matrix.hpp"
#include "tripow/series.hpp"
#include "tripow/verify.hpp"

namespace tripow {

enum class PresetKind { identity_t, geometric, binomial_minus_one, expm1, log1p, exp_full, const_one };

/// A named series with its rational parameter (beta for geometric, alpha for
/// binomial_minus_one; ignored otherwise).
struct PresetId {
  PresetKind kind = PresetKind::identity_t;
  Rational param = 0;

  friend bool operator==(const PresetId&, const PresetId&) = default;
};

inline constexpr std::string_view preset_name(PresetKind kind) {
  switch (kind) {
    case PresetKind::identity_t: return "identity_t";
    case PresetKind::geometric: return "geometric";
    case PresetKind::binomial_minus_one: return "binomial_minus_one";
    case PresetKind::expm1: return "expm1";
    case PresetKind::log1p: return "log1p";
    case PresetKind::exp_full: return "exp_full";
    case PresetKind::const_one: return "const_one";
  }
  return "";
}

inline bool preset_has_param(PresetKind kind) {
  return kind == PresetKind::geometric || kind == PresetKind::binomial_minus_one;
}

inline std::vector<PresetKind> all_preset_kinds() {
  return {PresetKind::identity_t, PresetKind::geometric, PresetKind::binomial_minus_one, PresetKind::expm1,
          PresetKind::log1p,      PresetKind::exp_full,  PresetKind::const_one};
}

inline void validate(const PresetId& id) {
  if (id.kind == PresetKind::binomial_minus_one && id.param == 0)
    throw error(errc::preset, "binomial_minus_one needs alpha != 0");
}

/// Parses "name" or "name(p/q)".
inline PresetId parse_preset(std::string_view text) {
  std::string_view name = text;
  std::string_view arg;
  bool has_arg = false;
  if (auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') throw error(errc::preset, "malformed preset '" + std::string(text) + "'");
    name = text.substr(0, open);
    arg = text.substr(open + 1, text.size() - open - 2);
    has_arg = true;
  }
  for (PresetKind kind : all_preset_kinds()) {
    if (preset_name(kind) != name) continue;
    if (preset_has_param(kind) != has_arg)
      throw error(errc::preset, "preset '" + std::string(name) + (has_arg ? "' takes no parameter" : "' needs a parameter"));
    PresetId id{kind, 0};
    if (has_arg) {
      try {
        id.param = parse_rational(arg);
      } catch (const error& e) {
        throw error(errc::preset, "bad parameter for '" + std::string(name) + "': " + e.what());
      }
    }
    validate(id);
    return id;
  }
  throw error(errc::preset, "unknown preset '" + std::string(name) + "'");
}

inline std::string to_string(const PresetId& id) {
  std::string out(preset_name(id.kind));
  if (preset_has_param(id.kind)) out += "(" + to_string(id.param) + ")";
  return out;
}

/// The preset written in the series expression grammar.
inline std::string preset_expression(const PresetId& id) {
  switch (id.kind) {
    case PresetKind::identity_t: return "t";
    case PresetKind::geometric: {
      const Rational b = id.param;
      return std::string("t/(1") + (b < 0 ? "+" : "-") + to_string(Rational(abs(b))) + "*t)";
    }
    case PresetKind::binomial_minus_one: return "(1+t)^(" + to_string(id.param) + ")-1";
    case PresetKind::expm1: return "exp(t)-1";
    case PresetKind::log1p: return "log(1+t)";
    case PresetKind::exp_full: return "exp(t)";
    case PresetKind::const_one: return "1";
  }
  return "";
}

inline Series preset_series(const PresetId& id, std::size_t order) {
  validate(id);
  std::vector<Rational> c(order + 1);
  switch (id.kind) {
    case PresetKind::identity_t:
      return Series::variable(order);
    case PresetKind::geometric:  // t/(1 - beta t) = sum beta^(i-1) t^i
      for (std::size_t i = 1; i <= order; ++i) c[i] = pow(id.param, static_cast<long>(i) - 1);
      return Series(std::move(c));
    case PresetKind::binomial_minus_one: {
      Series one_plus_t = Series::constant(Rational(1), order) + Series::variable(order);
      return pow_rat(one_plus_t, id.param) - Series::constant(Rational(1), order);
    }
    case PresetKind::expm1:
      for (std::size_t i = 1; i <= order; ++i) c[i] = Rational(1) / Rational(factorial(i));
      return Series(std::move(c));
    case PresetKind::log1p:
      for (std::size_t i = 1; i <= order; ++i)
        c[i] = Rational(i % 2 ? 1 : -1, static_cast<unsigned long>(i));
      return Series(std::move(c));
    case PresetKind::exp_full:
      for (std::size_t i = 0; i <= order; ++i) c[i] = Rational(1) / Rational(factorial(i));
      return Series(std::move(c));
    case PresetKind::const_one:
      return Series::constant(Rational(1), order);
  }
  throw error(errc::preset, "unhandled preset");
}

/// [A]_{k,n} = C(n,k) beta^(n-k) (alpha+n-1)_(n-k).
inline TriMatrix example_matrix_25(const Rational& alpha, const Rational& beta, std::size_t order) {
  TriMatrix m(order);
  for (std::size_t k = 1; k <= order; ++k)
    for (std::size_t n = k; n <= order; ++n) {
      const long d = static_cast<long>(n - k);
      m.set(k, n, Rational(binomial(n, k)) * pow(beta, d) * falling(alpha + static_cast<long>(n) - 1, d));
    }
  return m;
}

/// The C4 family (phi = t/(1 - beta t), exponent -alpha) that reproduces
/// example_matrix_25(alpha, beta).
inline C4Params example_25_as_c4(const Rational& alpha, const Rational& beta, std::size_t order) {
  return C4Params{preset_series({PresetKind::geometric, beta}, order), -alpha, Weights::ones(order)};
}

/// Powers example_matrix_25 by repeated multiplication and checks
/// [A^s]_{k,n} = s^(n-k) [A]_{k,n} for s = 1..s_max.
inline VerifyReport check_scaling_26(const Rational& alpha, const Rational& beta, std::size_t order, long s_max) {
  const TriMatrix A = example_matrix_25(alpha, beta, order);
  TriMatrix power = A;
  return verify_pair(
      "eq26", "alpha=" + to_string(alpha) + ",beta=" + to_string(beta), SRange{1, s_max},
      [&](long s) {
        TriMatrix expected(order);
        for (std::size_t k = 1; k <= order; ++k)
          for (std::size_t n = k; n <= order; ++n) expected.set(k, n, pow(Rational(s), static_cast<long>(n - k)) * A(k, n));
        return expected;
      },
      [&](long s) {
        if (s > 1) power = mat_mul(power, A);
        return power;
      });
}

// The two scalar checks below report coefficient mismatches with k = m and
// n = the index of the z-coefficient; s is unused and set to 0.

/// sum_{s=0..S} s^m z^s / s!  versus  B_m(z) e^z, to order M in z.
inline VerifyReport check_exp_27(long m, std::size_t M, std::size_t S) {
  if (m < 0 || S < M) throw error(errc::domain, "check_exp_27 needs m >= 0 and S >= M");
  std::vector<Rational> lhs(M + 1);
  for (std::size_t s = 0; s <= std::min(S, M); ++s)
    lhs[s] = pow(Rational(static_cast<unsigned long>(s)), m) / Rational(factorial(s));
  const Series rhs = evaluate(touchard_poly(static_cast<std::size_t>(m)), Series::variable(M)) *
                     preset_series({PresetKind::exp_full, 0}, M);
  VerifyReport report{"eq27", "m=" + std::to_string(m), SRange{0, 0}, 0, {}, std::nullopt};
  for (std::size_t i = 0; i <= M; ++i) report.compare(static_cast<std::size_t>(m), i, 0, lhs[i], rhs[i]);
  return report;
}

/// sum_{s=0..M} s^m z^s  versus  F_m(z/(1-z)) / (1-z), to order M in z.
inline VerifyReport check_resolvent_28(long m, std::size_t M) {
  if (m < 0 || M < 1) throw error(errc::domain, "check_resolvent_28 needs m >= 0 and M >= 1");
  std::vector<Rational> lhs(M + 1);
  for (std::size_t s = 0; s <= M; ++s) lhs[s] = pow(Rational(static_cast<unsigned long>(s)), m);
  const Series u = series_recip(Series::constant(Rational(1), M) - Series::variable(M));
  // The ordered Bell polynomial is evaluated at z/(1-z), not at 1/(1-z).
  const Series rhs = evaluate(fubini_poly(static_cast<std::size_t>(m)), shift_up(u)) * u;
  VerifyReport report{"eq28", "m=" + std::to_string(m), SRange{0, 0}, 0, {}, std::nullopt};
  for (std::size_t i = 0; i <= M; ++i) report.compare(static_cast<std::size_t>(m), i, 0, lhs[i], rhs[i]);
  return report;
}

/// [A]_{k,n} = (1/k!) sum_j (-1)^(k-j) C(k,j) (alpha j)_n, the Bell triangle of (1+t)^alpha - 1.
inline TriMatrix example_matrix_30(const Rational& alpha, std::size_t order) {
  if (alpha == 0) throw error(errc::preset, "example_matrix_30 needs alpha != 0");
  TriMatrix m(order);
  for (std::size_t k = 1; k <= order; ++k)
    for (std::size_t n = k; n <= order; ++n) {
      Rational acc;
      for (std::size_t j = 0; j <= k; ++j) {
        Rational term = Rational(binomial(k, j)) * falling(alpha * static_cast<unsigned long>(j), static_cast<long>(n));
        acc += (k - j) % 2 ? -term : term;
      }
      m.set(k, n, acc / Rational(factorial(k)));
    }
  return m;
}

/// Spec (phi = (1+t)^alpha - 1, g = h = 1) whose matrix is example_matrix_30(alpha).
inline MatrixSpec example_30_spec(const Rational& alpha, std::size_t order) {
  const Series one = Series::constant(Rational(1), order);
  return MatrixSpec(preset_series({PresetKind::binomial_minus_one, alpha}, order), one, one);
}

/// Oracle power s of the binomial-family matrix against example_matrix_30(alpha^s).
inline VerifyReport check_power_31(const Rational& alpha, long s, std::size_t order) {
  if (alpha == 0) throw error(errc::preset, "check_power_31 needs alpha != 0");
  const MatrixSpec spec = example_30_spec(alpha, order);
  return verify_pair(
      "eq31", "alpha=" + to_string(alpha), SRange{s, s}, [&](long p) { return example_matrix_30(pow(alpha, p), order); },
      [&](long p) { return power_oracle(spec, p); });
}

}  // namespace tripow
