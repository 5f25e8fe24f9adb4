#pragma once

#include <cstddef>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "tripow/error.hpp"
#include "tripow/rational.hpp"

namespace tripow {

/// Truncated formal power series c_0 + c_1 t + ... + c_N t^N over the rationals.
///
/// The truncation order N is part of the value. Binary operations require equal
/// orders and throw errc::order_mismatch otherwise; use truncate() to lower an
/// order explicitly. Every coefficient 0..N of a result is exact for the
/// corresponding operation on infinite series.
class Series {
 public:
  /// Zero series of the given order.
  explicit Series(std::size_t order) : c_(order + 1) {}

  explicit Series(std::vector<Rational> coeffs) : c_(std::move(coeffs)) {
    if (c_.empty()) throw error(errc::domain, "series needs at least one coefficient");
  }

  static Series constant(const Rational& c, std::size_t order) {
    Series s(order);
    s.c_[0] = c;
    return s;
  }

  /// c t^power, truncated (to zero if power > order).
  static Series monomial(const Rational& c, std::size_t power, std::size_t order) {
    Series s(order);
    if (power <= order) s.c_[power] = c;
    return s;
  }

  /// The identity series t.
  static Series variable(std::size_t order) { return monomial(Rational(1), 1, order); }

  std::size_t order() const noexcept { return c_.size() - 1; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  std::span<const Rational> coeffs() const noexcept { return c_; }

  bool is_constant(const Rational& c) const {
    if (c_[0] != c) return false;
    for (std::size_t i = 1; i < c_.size(); ++i)
      if (c_[i] != 0) return false;
    return true;
  }

  friend bool operator==(const Series&, const Series&) = default;

  friend Series operator+(const Series& f, const Series& g) {
    check_orders(f, g);
    std::vector<Rational> r(f.c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] += g.c_[i];
    return Series(std::move(r));
  }

  friend Series operator-(const Series& f, const Series& g) {
    check_orders(f, g);
    std::vector<Rational> r(f.c_);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] -= g.c_[i];
    return Series(std::move(r));
  }

  friend Series operator-(const Series& f) {
    std::vector<Rational> r(f.c_);
    for (auto& x : r) x = -x;
    return Series(std::move(r));
  }

  friend Series operator*(const Rational& a, const Series& f) {
    std::vector<Rational> r(f.c_);
    for (auto& x : r) x *= a;
    return Series(std::move(r));
  }

  /// Truncated Cauchy product.
  friend Series operator*(const Series& f, const Series& g) {
    check_orders(f, g);
    const std::size_t n = f.c_.size();
    std::vector<Rational> r(n);
    for (std::size_t i = 0; i < n; ++i) {
      if (f.c_[i] == 0) continue;
      for (std::size_t j = 0; i + j < n; ++j) r[i + j] += f.c_[i] * g.c_[j];
    }
    return Series(std::move(r));
  }

  static void check_orders(const Series& f, const Series& g) {
    if (f.order() != g.order())
      throw error(errc::order_mismatch,
                  "orders " + std::to_string(f.order()) + " and " + std::to_string(g.order()));
  }

 private:
  std::vector<Rational> c_;
};

inline std::string to_string(const Series& f) {
  std::string out = "[";
  for (std::size_t i = 0; i <= f.order(); ++i) {
    if (i) out += ", ";
    out += to_string(f[i]);
  }
  return out + "]";
}

/// Drops coefficients above `order`.
inline Series truncate(const Series& f, std::size_t order) {
  if (order > f.order())
    throw error(errc::truncation_exceeded,
                "cannot raise order " + std::to_string(f.order()) + " to " + std::to_string(order));
  auto c = f.coeffs();
  return Series(std::vector<Rational>(c.begin(), c.begin() + order + 1));
}

/// t * f, keeping the order.
inline Series shift_up(const Series& f) {
  std::vector<Rational> r(f.order() + 1);
  for (std::size_t i = 1; i <= f.order(); ++i) r[i] = f[i - 1];
  return Series(std::move(r));
}

/// f / t for f(0) = 0. The result has order N-1.
inline Series shift_down(const Series& f) {
  if (f[0] != 0) throw error(errc::domain, "shift_down needs f(0) = 0");
  if (f.order() == 0) throw error(errc::truncation_exceeded, "shift_down of an order-0 series");
  auto c = f.coeffs();
  return Series(std::vector<Rational>(c.begin() + 1, c.end()));
}

inline Series series_mul(const Series& f, const Series& g) { return f * g; }

inline Series series_recip(const Series& f) {
  if (f[0] == 0) throw error(errc::non_invertible_series, "constant term is zero");
  const Rational inv0 = Rational(1) / f[0];
  std::vector<Rational> r(f.order() + 1);
  r[0] = inv0;
  for (std::size_t n = 1; n <= f.order(); ++n) {
    Rational acc;
    for (std::size_t i = 1; i <= n; ++i) acc += f[i] * r[n - i];
    r[n] = -inv0 * acc;
  }
  return Series(std::move(r));
}

/// g(f(t)) by Horner's scheme in the series ring.
inline Series series_compose(const Series& g, const Series& f) {
  Series::check_orders(g, f);
  if (f[0] != 0) throw error(errc::composition_domain, "inner series must vanish at 0");
  const std::size_t n = g.order();
  Series acc = Series::constant(g[n], n);
  for (std::size_t i = n; i-- > 0;) {
    acc = acc * f;
    acc = acc + Series::constant(g[i], n);
  }
  return acc;
}

/// f'(t). Order drops to N-1.
inline Series series_derive(const Series& f) {
  if (f.order() == 0) throw error(errc::truncation_exceeded, "derivative of an order-0 series");
  std::vector<Rational> r(f.order());
  for (std::size_t i = 0; i < r.size(); ++i) r[i] = f[i + 1] * static_cast<unsigned long>(i + 1);
  return Series(std::move(r));
}

/// (d/dt)^n f at t = 0, i.e. n! [t^n] f.
inline Rational coeff_deriv_at_zero(const Series& f, std::size_t n) {
  if (n > f.order())
    throw error(errc::truncation_exceeded,
                "coefficient " + std::to_string(n) + " beyond order " + std::to_string(f.order()));
  return Rational(factorial(n)) * f[n];
}

/// f^m for any integer m; f(0) must be nonzero when m < 0.
inline Series pow_int(const Series& f, long m) {
  if (m < 0) return pow_int(series_recip(f), -m);
  Series result = Series::constant(Rational(1), f.order());
  Series base = f;
  for (unsigned long e = static_cast<unsigned long>(m); e; e >>= 1) {
    if (e & 1) result = result * base;
    if (e > 1) base = base * base;
  }
  return result;
}

namespace detail {

/// Antiderivative with zero constant term; order rises by one.
inline Series integrate(const Series& f) {
  std::vector<Rational> r(f.order() + 2);
  for (std::size_t i = 0; i <= f.order(); ++i) r[i + 1] = f[i] / static_cast<unsigned long>(i + 1);
  return Series(std::move(r));
}

/// log f for f(0) = 1, via log f = integral of f'/f.
inline Series log_series(const Series& f) {
  if (f[0] != 1) throw error(errc::non_unit_base, "log needs constant term 1");
  if (f.order() == 0) return Series(0);
  Series d = series_derive(f);
  return integrate(d * truncate(series_recip(f), d.order()));
}

/// exp u for u(0) = 0, from n e_n = sum_{k=1..n} k u_k e_{n-k}.
inline Series exp_series(const Series& u) {
  if (u[0] != 0) throw error(errc::domain, "exp needs constant term 0");
  std::vector<Rational> e(u.order() + 1);
  e[0] = 1;
  for (std::size_t n = 1; n <= u.order(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += Rational(static_cast<unsigned long>(k)) * u[k] * e[n - k];
    e[n] = acc / static_cast<unsigned long>(n);
  }
  return Series(std::move(e));
}

}  // namespace detail

/// f^r = exp(r log f) for a unit series f (f(0) = 1).
inline Series pow_rat(const Series& f, const Rational& r) {
  if (f[0] != 1) throw error(errc::non_unit_base, "rational power needs constant term 1");
  if (r == 0) return Series::constant(Rational(1), f.order());
  return detail::exp_series(r * detail::log_series(f));
}

/// Compositional inverse by Lagrange inversion: [t^n] psi = (1/n) [t^(n-1)] (t/phi)^n.
inline Series comp_inverse(const Series& phi) {
  if (phi[0] != 0) throw error(errc::not_comp_invertible, "phi(0) must be 0");
  if (phi.order() == 0) return Series(0);
  if (phi[1] == 0) throw error(errc::not_comp_invertible, "phi'(0) must be nonzero");
  const std::size_t n_max = phi.order();
  const Series t_over_phi = series_recip(shift_down(phi));  // order N-1
  std::vector<Rational> psi(n_max + 1);
  Series power = t_over_phi;
  for (std::size_t n = 1; n <= n_max; ++n) {
    psi[n] = power[n - 1] / static_cast<unsigned long>(n);
    if (n < n_max) power = power * t_over_phi;
  }
  return Series(std::move(psi));
}

/// s-th functional iterate; iterate(phi, 0) = t and negative s iterates the
/// compositional inverse.
inline Series iterate(const Series& phi, long s) {
  if (phi[0] != 0) throw error(errc::composition_domain, "iterated series must vanish at 0");
  Series step = s < 0 ? comp_inverse(phi) : phi;
  Series result = Series::variable(phi.order());
  for (long i = 0; i < (s < 0 ? -s : s); ++i) result = series_compose(step, result);
  return result;
}

/// The unique omega with omega(0) = 0 and omega = t h(omega), by N+1 rounds of
/// fixed-point iteration from omega = 0.
inline Series solve_omega(const Series& h) {
  if (h[0] == 0) throw error(errc::degenerate_h, "h(0) must be nonzero");
  Series omega(h.order());
  for (std::size_t round = 0; round <= h.order(); ++round) omega = shift_up(series_compose(h, omega));
  return omega;
}

}  // namespace tripow
