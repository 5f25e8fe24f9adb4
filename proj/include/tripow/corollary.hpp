#pragma once

#include <cstddef>
#include <string>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "tripow/bell.hpp"
#include "tripow/error.hpp"
#include "tripow/matrix.hpp"
#include "tripow/series.hpp"

// Reduced power formulas for restricted families of (phi, g, h). Each family
// has a parameter struct, a fast path special_power() and restricted_spec()
// giving the general MatrixSpec that describes the same matrix, so the two
// routes can be compared.

namespace tripow {

/// h = 1: row egf (1/k!) phi^k g.
struct C1Params {
  Series phi;
  Series g;
  Weights weights;
};

/// h = 1, phi = t, written in Toeplitz form [A]_{k,n} = (a_k/a_n) g_{n-k}.
/// These weights are the Toeplitz ones; the equivalent general spec uses a_n n!.
struct C2Params {
  Series g;
  Weights weights;
};

/// g = h = 1: [A]_{k,n} = (a_k/a_n) B_{n,k}(phi).
struct C3Params {
  Series phi;
  Weights weights;
};

/// g = (t/phi)^alpha, h = 1: [A]_{k,n} = (a_k/a_n) C(n,k) (d/dt)^{n-k} (t/phi)^{alpha-k} at 0.
/// A non-integer alpha needs phi'(0) = 1 so that every power stays rational.
struct C4Params {
  Series phi;
  Rational alpha;
  Weights weights;
};

/// General (phi, g, h) with phi^<-1> = omega, the solution of omega = t h(omega).
struct C5Params {
  Series phi;
  Series g;
  Series h;
  Weights weights;
};

using CorollaryParams = std::variant<C1Params, C2Params, C3Params, C4Params, C5Params>;

inline std::string corollary_name(const CorollaryParams& p) {
  static const char* names[] = {"c1", "c2", "c3", "c4", "c5"};
  return names[p.index()];
}

namespace detail {

inline Series ones_like(const Series& f) { return Series::constant(Rational(1), f.order()); }

/// (t/f)^e for f(0) = 0, f'(0) != 0, truncated to order N-1.
inline Series t_over_power(const Series& f, const Rational& e) {
  const Series base = series_recip(shift_down(f));
  if (is_integer(e)) return pow_int(base, e.get_num().get_si());
  if (base[0] != 1)
    throw error(errc::non_rational_power, "non-integer alpha needs phi'(0) = 1, got phi'(0) = " + to_string(f[1]));
  return pow_rat(base, e);
}

inline void check_weights(const Weights& w, std::size_t order) {
  if (w.size() != order) throw error(errc::invalid_spec, "weights length must equal the order");
}

inline void check_phi(const Series& phi) {
  if (phi.order() < 1) throw error(errc::invalid_spec, "order must be at least 1");
  if (phi[0] != 0 || phi[1] == 0) throw error(errc::invalid_spec, "phi needs phi(0) = 0 and phi'(0) != 0");
}

inline void check_c5(const C5Params& p) {
  if (comp_inverse(p.phi) != solve_omega(p.h))
    throw error(errc::invalid_spec, "c5 needs the compositional inverse of phi to solve omega = t h(omega)");
}

}  // namespace detail

/// General-form spec equal to the corollary's matrix.
inline MatrixSpec restricted_spec(const CorollaryParams& params) {
  return std::visit(
      [](const auto& p) -> MatrixSpec {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, C1Params>) {
          return MatrixSpec(p.phi, p.g, detail::ones_like(p.phi), p.weights);
        } else if constexpr (std::is_same_v<P, C2Params>) {
          const std::size_t order = p.g.order();
          detail::check_weights(p.weights, order);
          std::vector<Rational> a(order);
          for (std::size_t n = 1; n <= order; ++n) a[n - 1] = p.weights(n) * Rational(factorial(n));
          return MatrixSpec(Series::variable(order), p.g, detail::ones_like(p.g), Weights(std::move(a)));
        } else if constexpr (std::is_same_v<P, C3Params>) {
          return MatrixSpec(p.phi, detail::ones_like(p.phi), detail::ones_like(p.phi), p.weights);
        } else if constexpr (std::is_same_v<P, C4Params>) {
          detail::check_phi(p.phi);
          // g_N never reaches an entry (phi^k g with k >= 1 only uses g_0..g_{N-1}),
          // so phi gets a zero t^(N+1) coefficient to give g the full order N.
          std::vector<Rational> c(p.phi.coeffs().begin(), p.phi.coeffs().end());
          c.emplace_back(0);
          const Series g = detail::t_over_power(Series(std::move(c)), p.alpha);
          return MatrixSpec(p.phi, g, detail::ones_like(p.phi), p.weights);
        } else {
          detail::check_c5(p);
          return MatrixSpec(p.phi, p.g, p.h, p.weights);
        }
      },
      params);
}

/// A^s by the corollary's reduced formula.
inline TriMatrix special_power(const CorollaryParams& params, long s) {
  const std::size_t abs_s = static_cast<std::size_t>(s < 0 ? -s : s);
  return std::visit(
      [&](const auto& p) -> TriMatrix {
        using P = std::decay_t<decltype(p)>;
        if constexpr (std::is_same_v<P, C1Params>) {
          detail::check_phi(p.phi);
          detail::check_weights(p.weights, p.phi.order());
          // s >= 0: phi^<s>, prod_{i<s} g(phi^<i>);  s < 0: psi^<|s|>, 1 / prod_{j=1..|s|} g(psi^<j>)
          const Series step = s < 0 ? comp_inverse(p.phi) : p.phi;
          Series iter = Series::variable(p.phi.order());
          Series product = detail::ones_like(p.phi);
          for (std::size_t i = 0; i < abs_s; ++i) {
            if (s > 0) product = product * series_compose(p.g, iter);
            iter = series_compose(step, iter);
            if (s < 0) product = product * series_compose(p.g, iter);
          }
          return matrix_from_row_egf(iter, s < 0 ? series_recip(product) : product, p.weights);
        } else if constexpr (std::is_same_v<P, C2Params>) {
          const std::size_t order = p.g.order();
          detail::check_weights(p.weights, order);
          const Series gs = pow_int(p.g, s);
          TriMatrix m(order);
          for (std::size_t k = 1; k <= order; ++k)
            for (std::size_t n = k; n <= order; ++n) m.set(k, n, p.weights(k) / p.weights(n) * gs[n - k]);
          return m;
        } else if constexpr (std::is_same_v<P, C3Params>) {
          detail::check_phi(p.phi);
          detail::check_weights(p.weights, p.phi.order());
          const Series phi_s = iterate(p.phi, s);
          TriMatrix m(p.phi.order());
          for (std::size_t k = 1; k <= m.order(); ++k)
            for (std::size_t n = k; n <= m.order(); ++n)
              m.set(k, n, p.weights(k) / p.weights(n) * bell_partial(phi_s, n, k));
          return m;
        } else if constexpr (std::is_same_v<P, C4Params>) {
          detail::check_phi(p.phi);
          const std::size_t order = p.phi.order();
          detail::check_weights(p.weights, order);
          if (!is_integer(p.alpha) && p.phi[1] != 1)
            throw error(errc::non_rational_power, "non-integer alpha needs phi'(0) = 1");
          const Series phi_s = iterate(p.phi, s);
          TriMatrix m(order);
          for (std::size_t k = 1; k <= order; ++k) {
            const Series q = detail::t_over_power(phi_s, p.alpha - static_cast<long>(k));
            for (std::size_t n = k; n <= order; ++n)
              m.set(k, n, p.weights(k) / p.weights(n) * Rational(binomial(n, k)) * coeff_deriv_at_zero(q, n - k));
          }
          return m;
        } else {
          detail::check_phi(p.phi);
          detail::check_weights(p.weights, p.phi.order());
          detail::check_c5(p);
          const Series gs = pow_int(series_compose(p.g, comp_inverse(p.phi)), s);
          TriMatrix m(p.phi.order());
          for (std::size_t k = 1; k <= m.order(); ++k)
            for (std::size_t n = k; n <= m.order(); ++n)
              m.set(k, n, p.weights(k) / p.weights(n) * Rational(binomial(n, k)) * coeff_deriv_at_zero(gs, n - k));
          return m;
        }
      },
      params);
}

}  // namespace tripow
