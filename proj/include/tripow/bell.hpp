#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "tripow/error.hpp"
#include "tripow/rational.hpp"
#include "tripow/series.hpp"

namespace tripow {

/// Polynomial in z with rational coefficients, coeffs[j] = [z^j]. Trailing
/// zeros are trimmed; the zero polynomial is the single coefficient 0.
class PolyZ {
 public:
  PolyZ() : c_(1) {}
  explicit PolyZ(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    while (c_.size() > 1 && c_.back() == 0) c_.pop_back();
    if (c_.empty()) c_.emplace_back(0);
  }

  std::size_t degree() const noexcept { return c_.size() - 1; }
  const Rational& operator[](std::size_t j) const { return c_[j]; }
  const std::vector<Rational>& coeffs() const noexcept { return c_; }

  friend bool operator==(const PolyZ&, const PolyZ&) = default;

 private:
  std::vector<Rational> c_;
};

/// p(u) for a series u, by Horner's scheme.
inline Series evaluate(const PolyZ& p, const Series& u) {
  const std::size_t order = u.order();
  Series acc = Series::constant(p[p.degree()], order);
  for (std::size_t j = p.degree(); j-- > 0;) acc = acc * u + Series::constant(p[j], order);
  return acc;
}

/// Partial Bell polynomial B_{n,k}(phi) = n! [t^n] phi^k / k!.
inline Rational bell_partial(const Series& phi, std::size_t n, std::size_t k) {
  if (phi[0] != 0) throw error(errc::domain, "bell_partial needs phi(0) = 0");
  if (n > phi.order())
    throw error(errc::truncation_exceeded,
                "n = " + std::to_string(n) + " beyond order " + std::to_string(phi.order()));
  if (k > n) throw error(errc::index, "bell_partial needs k <= n");
  return coeff_deriv_at_zero(pow_int(phi, static_cast<long>(k)), n) / Rational(factorial(k));
}

/// Triangle of Stirling numbers of the second kind S(n, j), 0 <= j <= n <= n_max,
/// filled once at construction from S(n,j) = j S(n-1,j) + S(n-1,j-1).
class StirlingTable {
 public:
  explicit StirlingTable(std::size_t n_max = 32) : n_max_(n_max), rows_(n_max + 1) {
    rows_[0] = {Integer(1)};
    for (std::size_t n = 1; n <= n_max; ++n) {
      rows_[n].assign(n + 1, Integer(0));
      for (std::size_t j = 1; j <= n; ++j) {
        Integer above = j < n ? rows_[n - 1][j] : Integer(0);
        rows_[n][j] = Integer(static_cast<unsigned long>(j)) * above + rows_[n - 1][j - 1];
      }
    }
  }

  std::size_t n_max() const noexcept { return n_max_; }

  const Integer& operator()(std::size_t n, std::size_t j) const {
    if (n > n_max_) throw error(errc::index, "n = " + std::to_string(n) + " beyond table size");
    if (j > n) throw error(errc::index, "stirling2 needs j <= n");
    return rows_[n][j];
  }

 private:
  std::size_t n_max_;
  std::vector<std::vector<Integer>> rows_;
};

namespace detail {

// Built on first use; C++ guarantees thread-safe initialization of the static.
inline const StirlingTable& default_stirling_table() {
  static const StirlingTable table(32);
  return table;
}

inline const StirlingTable& stirling_table_for(std::size_t n, StirlingTable& scratch) {
  const auto& table = default_stirling_table();
  if (n <= table.n_max()) return table;
  scratch = StirlingTable(n);
  return scratch;
}

}  // namespace detail

inline Integer stirling2(long n, long j) {
  if (n < 0 || j < 0 || j > n) throw error(errc::index, "stirling2 needs 0 <= j <= n");
  StirlingTable scratch(0);
  return detail::stirling_table_for(static_cast<std::size_t>(n), scratch)(n, j);
}

/// Touchard polynomial B_n(z) = sum_j S(n,j) z^j.
inline PolyZ touchard_poly(std::size_t n) {
  StirlingTable scratch(0);
  const auto& table = detail::stirling_table_for(n, scratch);
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = Rational(table(n, j));
  return PolyZ(std::move(c));
}

/// Fubini polynomial F_n(z) = sum_j j! S(n,j) z^j.
inline PolyZ fubini_poly(std::size_t n) {
  StirlingTable scratch(0);
  const auto& table = detail::stirling_table_for(n, scratch);
  std::vector<Rational> c(n + 1);
  for (std::size_t j = 0; j <= n; ++j) c[j] = Rational(factorial(j) * table(n, j));
  return PolyZ(std::move(c));
}

/// Falling factorial (alpha)_m = alpha (alpha-1) ... (alpha-m+1), with (alpha)_0 = 1.
inline Rational falling(const Rational& alpha, long m) {
  if (m < 0) throw error(errc::index, "falling factorial with negative length");
  Rational r(1);
  for (long i = 0; i < m; ++i) r *= alpha - i;
  return r;
}

}  // namespace tripow
