#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tripow/error.hpp"
#include "tripow/rational.hpp"
#include "tripow/series.hpp"

namespace tripow {

/// Nonzero conjugation weights a_1..a_N, accessed 1-based.
class Weights {
 public:
  explicit Weights(std::vector<Rational> a) : a_(std::move(a)) {
    for (std::size_t j = 0; j < a_.size(); ++j)
      if (a_[j] == 0) throw error(errc::invalid_weights, "a_" + std::to_string(j + 1) + " is zero");
  }

  static Weights ones(std::size_t n) { return Weights(std::vector<Rational>(n, Rational(1))); }

  /// a_j = j!
  static Weights factorial(std::size_t n) {
    std::vector<Rational> a(n);
    for (std::size_t j = 1; j <= n; ++j) a[j - 1] = Rational(tripow::factorial(j));
    return Weights(std::move(a));
  }

  std::size_t size() const noexcept { return a_.size(); }
  const Rational& operator()(std::size_t j) const { return a_.at(j - 1); }
  const std::vector<Rational>& values() const noexcept { return a_; }

  friend bool operator==(const Weights&, const Weights&) = default;

 private:
  std::vector<Rational> a_;
};

/// Exact upper-triangular N x N matrix with 1-based indices (k, n), k <= n.
///
/// Only the upper triangle is stored, row by row: entry (k, n) lives at
/// offset (k-1) N - (k-1)(k-2)/2 + (n-k). Reading below the diagonal yields 0
/// and writing there is an index error.
class TriMatrix {
 public:
  explicit TriMatrix(std::size_t order) : n_(order), e_(order * (order + 1) / 2) {}

  static TriMatrix identity(std::size_t order) {
    TriMatrix m(order);
    for (std::size_t n = 1; n <= order; ++n) m.set(n, n, Rational(1));
    return m;
  }

  std::size_t order() const noexcept { return n_; }

  const Rational& operator()(std::size_t k, std::size_t n) const {
    static const Rational zero;
    check_bounds(k, n);
    return k > n ? zero : e_[offset(k, n)];
  }

  void set(std::size_t k, std::size_t n, Rational value) {
    check_bounds(k, n);
    if (k > n) throw error(errc::index, "write below the diagonal");
    e_[offset(k, n)] = std::move(value);
  }

  friend bool operator==(const TriMatrix&, const TriMatrix&) = default;

 private:
  std::size_t offset(std::size_t k, std::size_t n) const { return (k - 1) * n_ - (k - 1) * (k - 2) / 2 + (n - k); }

  void check_bounds(std::size_t k, std::size_t n) const {
    if (k < 1 || n < 1 || k > n_ || n > n_)
      throw error(errc::index, "(" + std::to_string(k) + "," + std::to_string(n) + ") outside order " +
                                   std::to_string(n_));
  }

  std::size_t n_;
  std::vector<Rational> e_;
};

/// The data (phi, g, h, a, N) defining a matrix. The constructor enforces
/// phi(0) = 0 and phi'(0) g(0) h(0) != 0.
class MatrixSpec {
 public:
  MatrixSpec(Series phi, Series g, Series h, Weights weights)
      : phi_(std::move(phi)), g_(std::move(g)), h_(std::move(h)), w_(std::move(weights)) {
    const std::size_t n = phi_.order();
    if (n < 1) throw error(errc::invalid_spec, "order must be at least 1");
    if (g_.order() != n || h_.order() != n || w_.size() != n)
      throw error(errc::invalid_spec, "phi, g, h and weights must share order " + std::to_string(n));
    if (phi_[0] != 0) throw error(errc::invalid_spec, "phi(0) must be 0");
    if (phi_[1] == 0 || g_[0] == 0 || h_[0] == 0)
      throw error(errc::invalid_spec, "phi'(0) g(0) h(0) must be nonzero");
  }

  /// Unit weights.
  MatrixSpec(const Series& phi, const Series& g, const Series& h)
      : MatrixSpec(phi, g, h, Weights::ones(phi.order())) {}

  const Series& phi() const noexcept { return phi_; }
  const Series& g() const noexcept { return g_; }
  const Series& h() const noexcept { return h_; }
  const Weights& weights() const noexcept { return w_; }
  std::size_t order() const noexcept { return phi_.order(); }

  MatrixSpec with_weights(Weights w) const { return MatrixSpec(phi_, g_, h_, std::move(w)); }

 private:
  Series phi_;
  Series g_;
  Series h_;
  Weights w_;
};

/// Stable 64-bit FNV-1a fingerprint over the canonical text of a spec, hex encoded.
inline std::string fingerprint(const MatrixSpec& spec) {
  std::string text = "phi=" + to_string(spec.phi()) + ";g=" + to_string(spec.g()) + ";h=" + to_string(spec.h()) +
                     ";a=[";
  for (std::size_t j = 1; j <= spec.weights().size(); ++j) text += (j > 1 ? "," : "") + to_string(spec.weights()(j));
  text += "]";
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : text) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  static constexpr char hex[] = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i, hash >>= 4) out[static_cast<std::size_t>(i)] = hex[hash & 0xf];
  return out;
}

/// Entries (a_k/a_n) ((n-1)!/k!) [t^(n-1)] h^n (phi^k g)', the derivative form.
inline TriMatrix build_matrix(const MatrixSpec& spec) {
  const std::size_t order = spec.order();
  const Weights& a = spec.weights();
  std::vector<Series> h_powers;  // h^n truncated to order N-1, n = 1..N
  {
    Series hn = Series::constant(Rational(1), order);
    for (std::size_t n = 1; n <= order; ++n) {
      hn = hn * spec.h();
      h_powers.push_back(truncate(hn, order - 1));
    }
  }
  TriMatrix m(order);
  Series phi_k = Series::constant(Rational(1), order);
  for (std::size_t k = 1; k <= order; ++k) {
    phi_k = phi_k * spec.phi();
    const Series d = series_derive(phi_k * spec.g());
    const Rational inv_k_fact = Rational(1) / Rational(factorial(k));
    for (std::size_t n = k; n <= order; ++n) {
      Rational v = coeff_deriv_at_zero(h_powers[n - 1] * d, n - 1) * inv_k_fact;
      m.set(k, n, a(k) / a(n) * v);
    }
  }
  return m;
}

inline TriMatrix mat_mul(const TriMatrix& A, const TriMatrix& B) {
  if (A.order() != B.order()) throw error(errc::order_mismatch, "matrix orders differ");
  const std::size_t order = A.order();
  TriMatrix C(order);
  for (std::size_t k = 1; k <= order; ++k)
    for (std::size_t n = k; n <= order; ++n) {
      Rational acc;
      for (std::size_t j = k; j <= n; ++j) acc += A(k, j) * B(j, n);
      C.set(k, n, std::move(acc));
    }
  return C;
}

/// Inverse by back-substitution, column by column from the diagonal upwards.
inline TriMatrix mat_inverse(const TriMatrix& A) {
  const std::size_t order = A.order();
  for (std::size_t n = 1; n <= order; ++n)
    if (A(n, n) == 0) throw error(errc::singular_matrix, "zero diagonal entry at " + std::to_string(n));
  TriMatrix B(order);
  for (std::size_t n = 1; n <= order; ++n) {
    B.set(n, n, Rational(1) / A(n, n));
    for (std::size_t k = n - 1; k >= 1; --k) {
      Rational acc;
      for (std::size_t j = k + 1; j <= n; ++j) acc += A(k, j) * B(j, n);
      B.set(k, n, -acc / A(k, k));
    }
  }
  return B;
}

/// Entry (k,n) -> (a_k/a_n) B_{k,n}, i.e. conjugation by diag(a).
inline TriMatrix apply_weights(const TriMatrix& B, const Weights& a) {
  if (a.size() != B.order()) throw error(errc::invalid_weights, "weights length differs from matrix order");
  TriMatrix out(B.order());
  for (std::size_t k = 1; k <= B.order(); ++k)
    for (std::size_t n = k; n <= B.order(); ++n) out.set(k, n, a(k) / a(n) * B(k, n));
  return out;
}

/// Brute-force A^s: repeated multiplication of A, or of its back-substitution
/// inverse when s < 0.
inline TriMatrix power_oracle(const MatrixSpec& spec, long s) {
  const TriMatrix A = build_matrix(spec);
  if (s == 0) return TriMatrix::identity(spec.order());
  const TriMatrix base = s < 0 ? mat_inverse(A) : A;
  TriMatrix result = base;
  for (long i = 1; i < (s < 0 ? -s : s); ++i) result = mat_mul(result, base);
  return result;
}

/// Matrix whose row k has exponential generating function (1/k!) inner^k * factor:
/// entry (a_k/a_n) (n!/k!) [t^n] inner^k factor.
inline TriMatrix matrix_from_row_egf(const Series& inner, const Series& factor, const Weights& a) {
  const std::size_t order = inner.order();
  TriMatrix m(order);
  Series inner_k = factor;
  for (std::size_t k = 1; k <= order; ++k) {
    inner_k = inner_k * inner;
    const Rational inv_k_fact = Rational(1) / Rational(factorial(k));
    for (std::size_t n = k; n <= order; ++n) m.set(k, n, a(k) / a(n) * inv_k_fact * coeff_deriv_at_zero(inner_k, n));
  }
  return m;
}

/// Closed-form A^s. With omega = t h(omega) and Phi = phi o omega:
///   s >= 0: row egf (1/k!) Phi^<s>(t)^k prod_{i<s} g(omega(Phi^<i>(t)));
///   s <  0: with psi = phi^<-1> and Psi = psi / (h o psi),
///           row egf (1/k!) Psi^<|s|>(t)^k / prod_{i<|s|} g(psi(Psi^<i>(t))).
/// The empty product is 1, so s = 0 gives the identity.
inline TriMatrix power_closed(const MatrixSpec& spec, long s) {
  const std::size_t order = spec.order();
  const Series one = Series::constant(Rational(1), order);
  if (s >= 0) {
    const Series omega = solve_omega(spec.h());
    const Series Phi = series_compose(spec.phi(), omega);
    const Series g_omega = series_compose(spec.g(), omega);
    Series iter = Series::variable(order);  // Phi^<i>
    Series product = one;
    for (long i = 0; i < s; ++i) {
      product = product * series_compose(g_omega, iter);
      iter = series_compose(Phi, iter);
    }
    return matrix_from_row_egf(iter, product, spec.weights());
  }
  const Series psi = comp_inverse(spec.phi());
  const Series Psi = psi * series_recip(series_compose(spec.h(), psi));
  const Series g_psi = series_compose(spec.g(), psi);
  Series iter = Series::variable(order);  // Psi^<i>
  Series product = one;
  for (long i = 0; i < -s; ++i) {
    product = product * series_compose(g_psi, iter);
    iter = series_compose(Psi, iter);
  }
  return matrix_from_row_egf(iter, series_recip(product), spec.weights());
}

}  // namespace tripow
