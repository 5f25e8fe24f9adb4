#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "tripow/error.hpp"

namespace tripow {

/// Exact rational scalar. GMP keeps results of arithmetic in lowest terms
/// with a positive denominator; values built from a raw numerator and
/// denominator go through make_rational() which canonicalizes.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
  if (den == 0) throw error(errc::domain, "zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

/// Canonical wire form: "p/q" with q > 0, or "p" when q = 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

inline bool is_integer(const Rational& q) { return q.get_den() == 1; }

/// Parses "p" or "p/q" with an optional leading '-'. Whitespace is not allowed.
inline Rational parse_rational(std::string_view text) {
  auto digits = [](std::string_view s) {
    if (s.empty()) return false;
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  auto slash = body.find('/');
  std::string_view num = body.substr(0, slash);
  std::string_view den = slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!digits(num) || !digits(den)) throw error(errc::syntax, "malformed rational '" + std::string(text) + "'");
  Integer n{std::string(num), 10}, d{std::string(den), 10};
  if (d == 0) throw error(errc::domain, "zero denominator in '" + std::string(text) + "'");
  if (negative) n = -n;
  return make_rational(n, d);
}

inline Integer factorial(unsigned long n) {
  Integer r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

inline Integer binomial(unsigned long n, unsigned long k) {
  Integer r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

/// q^e for any integer e; q must be nonzero when e < 0.
inline Rational pow(const Rational& q, long e) {
  if (e < 0) {
    if (q == 0) throw error(errc::domain, "zero to a negative power");
    return pow(Rational(1) / q, -e);
  }
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), q.get_num_mpz_t(), static_cast<unsigned long>(e));
  mpz_pow_ui(den.get_mpz_t(), q.get_den_mpz_t(), static_cast<unsigned long>(e));
  return make_rational(num, den);
}

}  // namespace tripow
