#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "tripow/corollary.hpp"
#include "tripow/matrix.hpp"
#include "tripow/series.hpp"

namespace tripow {

/// Inclusive range of powers.
struct SRange {
  long lo = 0;
  long hi = 0;
};

struct Mismatch {
  std::size_t k;
  std::size_t n;
  long s;
  Rational expected;
  Rational actual;
};

/// Outcome of a differential check. `failures` is empty exactly when the
/// check passed; `checked` counts compared entries.
struct VerifyReport {
  std::string suite;
  std::string fingerprint;
  SRange s_range;
  std::size_t checked = 0;
  std::vector<Mismatch> failures;
  /// Set when a computation threw instead of producing a matrix.
  std::optional<std::string> error_message;

  bool passed() const noexcept { return failures.empty() && !error_message; }
  const Mismatch* first_failure() const noexcept { return failures.empty() ? nullptr : &failures.front(); }

  /// Records one comparison at (k, n, s).
  void compare(std::size_t k, std::size_t n, long s, const Rational& expected, const Rational& actual) {
    ++checked;
    if (expected != actual) failures.push_back({k, n, s, expected, actual});
  }

  void compare(const TriMatrix& expected, const TriMatrix& actual, long s) {
    if (expected.order() != actual.order()) {
      error_message = "order mismatch at s = " + std::to_string(s);
      return;
    }
    for (std::size_t k = 1; k <= expected.order(); ++k)
      for (std::size_t n = k; n <= expected.order(); ++n) compare(k, n, s, expected(k, n), actual(k, n));
  }

  /// Folds another report into this one (suite aggregates over many specs).
  void absorb(const VerifyReport& other) {
    checked += other.checked;
    failures.insert(failures.end(), other.failures.begin(), other.failures.end());
    if (other.error_message && !error_message) error_message = other.fingerprint + ": " + *other.error_message;
  }
};

inline std::string summary(const VerifyReport& r) {
  std::string out = (r.passed() ? "PASS " : "FAIL ") + r.suite + " checked=" + std::to_string(r.checked) +
                    " failures=" + std::to_string(r.failures.size());
  if (const Mismatch* m = r.first_failure())
    out += " first=(k=" + std::to_string(m->k) + ",n=" + std::to_string(m->n) + ",s=" + std::to_string(m->s) +
           ") expected=" + to_string(m->expected) + " actual=" + to_string(m->actual);
  if (r.error_message) out += " error=\"" + *r.error_message + "\"";
  return out;
}

/// Compares expected(s) against actual(s) entrywise for every s in the range.
/// Both arguments are callables long -> TriMatrix. Exceptions become a failed
/// report rather than escaping.
template <class Expected, class Actual>
VerifyReport verify_pair(std::string suite, std::string fp, SRange range, Expected&& expected, Actual&& actual) {
  VerifyReport report{std::move(suite), std::move(fp), range, 0, {}, std::nullopt};
  try {
    for (long s = range.lo; s <= range.hi; ++s) report.compare(expected(s), actual(s), s);
  } catch (const std::exception& e) {
    report.error_message = e.what();
  }
  return report;
}

enum class VerifyMode {
  closed_vs_oracle,  ///< power_closed(s) == power_oracle(s)
  inverse_pairing,   ///< power_closed(s) * power_closed(-s) == I
  group_law,         ///< power_closed(s) * power_closed(1) == power_closed(s + 1)
};

inline VerifyReport verify_equiv(const MatrixSpec& spec, SRange range, VerifyMode mode = VerifyMode::closed_vs_oracle) {
  const std::string fp = fingerprint(spec);
  switch (mode) {
    case VerifyMode::closed_vs_oracle:
      return verify_pair(
          "closed_vs_oracle", fp, range, [&](long s) { return power_oracle(spec, s); },
          [&](long s) { return power_closed(spec, s); });
    case VerifyMode::inverse_pairing:
      return verify_pair(
          "inverse_pairing", fp, range, [&](long) { return TriMatrix::identity(spec.order()); },
          [&](long s) { return mat_mul(power_closed(spec, s), power_closed(spec, -s)); });
    case VerifyMode::group_law: {
      const TriMatrix A = power_closed(spec, 1);
      return verify_pair(
          "group_law", fp, range, [&](long s) { return power_closed(spec, s + 1); },
          [&](long s) { return mat_mul(power_closed(spec, s), A); });
    }
  }
  return {};
}

/// Reduced-formula fast path against power_closed on the equivalent general spec.
inline VerifyReport verify_corollary(const CorollaryParams& params, SRange range) {
  try {
    const MatrixSpec spec = restricted_spec(params);
    return verify_pair(
        corollary_name(params), fingerprint(spec), range, [&](long s) { return power_closed(spec, s); },
        [&](long s) { return special_power(params, s); });
  } catch (const std::exception& e) {
    VerifyReport r;
    r.suite = corollary_name(params);
    r.s_range = range;
    r.error_message = e.what();
    return r;
  }
}

/// Seed-determined generator of random specs. Coefficients are uniform on
/// {-3..3} with phi_1, g_0, h_0 and every weight drawn from {-3..3} \ {0}.
///
/// Draws use mt19937_64 reduced modulo the range size so that a seed
/// reproduces the same specs with any standard library.
class SpecGenerator {
 public:
  explicit SpecGenerator(std::uint64_t seed) : rng_(seed) {}

  long coefficient() { return static_cast<long>(rng_() % 7) - 3; }

  long nonzero_coefficient() {
    static constexpr long values[] = {-3, -2, -1, 1, 2, 3};
    return values[rng_() % 6];
  }

  /// Random series of the given order; `zero_const` forces c_0 = 0, and
  /// `nonzero_at` (if set) forces that coefficient to be nonzero.
  Series series(std::size_t order, bool zero_const, std::optional<std::size_t> nonzero_at) {
    std::vector<Rational> c(order + 1);
    for (std::size_t i = 0; i <= order; ++i) {
      if (i == 0 && zero_const) continue;
      c[i] = (nonzero_at && *nonzero_at == i) ? nonzero_coefficient() : coefficient();
    }
    return Series(std::move(c));
  }

  Series phi(std::size_t order) { return series(order, true, 1); }
  Series unit(std::size_t order) { return series(order, false, 0); }

  Weights weights(std::size_t order) {
    std::vector<Rational> a(order);
    for (auto& x : a) x = nonzero_coefficient();
    return Weights(std::move(a));
  }

  /// Weights drawn from {1, -1, 2, -2, 1/2, 3}.
  Weights mixed_weights(std::size_t order) {
    static const Rational values[] = {Rational(1), Rational(-1), Rational(2), Rational(-2), Rational(1, 2),
                                      Rational(3)};
    std::vector<Rational> a(order);
    for (auto& x : a) x = values[rng_() % 6];
    return Weights(std::move(a));
  }

  MatrixSpec spec(std::size_t order) {
    Series p = phi(order);
    Series g = unit(order);
    Series h = unit(order);
    return MatrixSpec(std::move(p), std::move(g), std::move(h), weights(order));
  }

  /// Spec with phi = comp_inverse(solve_omega(h)), so phi^<-1> = omega.
  C5Params c5(std::size_t order) {
    Series h = unit(order);
    Series g = unit(order);
    Series phi = comp_inverse(solve_omega(h));
    return C5Params{std::move(phi), std::move(g), std::move(h), weights(order)};
  }

  std::uint64_t raw() { return rng_(); }

 private:
  std::mt19937_64 rng_;
};

}  // namespace tripow
