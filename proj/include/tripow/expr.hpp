#pragma once

#include <algorithm>
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "tripow/error.hpp"
#include "tripow/rational.hpp"
#include "tripow/series.hpp"

// Series expressions in t, for example "t/(1-2*t)", "(1+t)^(1/2)-1" or
// "exp(t)-1". Grammar (whitespace-insensitive):
//
//   expr     := term (("+" | "-") term)*
//   term     := factor (("*" | "/") factor)*
//   factor   := atom ("^" exponent)?          chains of "^" need parentheses
//   atom     := rational | "t" | name "(" expr ")" | "(" expr ")"
//   exponent := rational | "(" rational ")"
//   rational := ["-"] integer ["/" positive-integer]
//
// A literal "p/q" directly followed by "^" is read as p / (q^e), so that
// "1/2^3" means 1/8.

namespace tripow {

enum class NodeKind { rational, var_t, add, sub, mul, div, pow, call };

struct SourcePos {
  std::size_t line = 1;
  std::size_t column = 1;
};

struct Expr {
  NodeKind kind = NodeKind::rational;
  Rational value;     // literal value, or the exponent of a pow node
  std::string name;   // function name of a call node
  std::vector<Expr> children;
  SourcePos pos;
};

inline std::string to_string(const Expr& e) {
  auto binary = [&](const char* op) { return std::string(op) + "(" + to_string(e.children[0]) + ", " + to_string(e.children[1]) + ")"; };
  switch (e.kind) {
    case NodeKind::rational: return to_string(e.value);
    case NodeKind::var_t: return "t";
    case NodeKind::add: return binary("Add");
    case NodeKind::sub: return binary("Sub");
    case NodeKind::mul: return binary("Mul");
    case NodeKind::div: return binary("Div");
    case NodeKind::pow: return "Pow(" + to_string(e.children[0]) + ", " + to_string(e.value) + ")";
    case NodeKind::call: return "Call(" + e.name + ", " + to_string(e.children[0]) + ")";
  }
  return "?";
}

namespace detail {

class ExprParser {
 public:
  static constexpr std::size_t max_depth = 200;

  explicit ExprParser(std::string_view text) : text_(text) {}

  Expr parse() {
    skip_space();
    if (at_end()) fail(errc::syntax, "empty expression");
    Expr e = expr();
    skip_space();
    if (!at_end()) fail(errc::syntax, std::string("unexpected '") + peek() + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(errc code, const std::string& msg) const { fail_at(code, here(), msg); }

  [[noreturn]] static void fail_at(errc code, SourcePos pos, const std::string& msg) {
    throw error(code, "line " + std::to_string(pos.line) + ", column " + std::to_string(pos.column) + ": " + msg);
  }

  bool at_end() const { return i_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[i_]; }
  SourcePos here() const { return pos_; }

  void advance() {
    if (text_[i_] == '\n') {
      ++pos_.line;
      pos_.column = 1;
    } else {
      ++pos_.column;
    }
    ++i_;
  }

  void skip_space() {
    while (!at_end() && (peek() == ' ' || peek() == '\t' || peek() == '\n' || peek() == '\r')) advance();
  }

  static bool is_digit(char c) { return c >= '0' && c <= '9'; }
  static bool is_alpha(char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; }

  bool accept(char c) {
    skip_space();
    if (peek() != c) return false;
    advance();
    return true;
  }

  void expect(char c) {
    if (!accept(c)) fail(errc::syntax, std::string("expected '") + c + "'");
  }

  /// Lookahead: after optional space, is the next character `c` followed
  /// (after optional space) by a digit? Does not consume.
  bool next_is_char_then_digit(char c) const {
    std::size_t j = i_;
    auto space = [&] {
      while (j < text_.size() && (text_[j] == ' ' || text_[j] == '\t' || text_[j] == '\n' || text_[j] == '\r')) ++j;
    };
    space();
    if (j >= text_.size() || text_[j] != c) return false;
    ++j;
    space();
    return j < text_.size() && is_digit(text_[j]);
  }

  Integer integer() {
    skip_space();
    if (!is_digit(peek())) fail(errc::syntax, "expected a number");
    std::string digits;
    while (!at_end() && is_digit(peek())) {
      digits += peek();
      advance();
    }
    return Integer(digits, 10);
  }

  /// ["-"] integer ["/" positive-integer]
  Rational rational() {
    skip_space();
    const bool negative = accept('-');
    Integer num = integer();
    Integer den(1);
    if (next_is_char_then_digit('/')) {
      expect('/');
      skip_space();
      const SourcePos den_pos = here();
      den = integer();
      if (den == 0) fail_at(errc::syntax, den_pos, "zero denominator");
    }
    return make_rational(negative ? Integer(-num) : num, den);
  }

  struct DepthGuard {
    ExprParser& p;
    explicit DepthGuard(ExprParser& parser) : p(parser) {
      if (++p.depth_ > max_depth) p.fail(errc::syntax, "expression nested too deeply");
    }
    ~DepthGuard() { --p.depth_; }
  };

  static Expr node(NodeKind kind, SourcePos pos, std::vector<Expr> children) {
    Expr e;
    e.kind = kind;
    e.pos = pos;
    e.children = std::move(children);
    return e;
  }

  static Expr literal(Rational v, SourcePos pos) {
    Expr e;
    e.kind = NodeKind::rational;
    e.value = std::move(v);
    e.pos = pos;
    return e;
  }

  Expr expr() {
    DepthGuard guard(*this);
    Expr lhs = term();
    for (;;) {
      skip_space();
      const SourcePos pos = here();
      if (accept('+'))
        lhs = node(NodeKind::add, pos, {std::move(lhs), term()});
      else if (accept('-'))
        lhs = node(NodeKind::sub, pos, {std::move(lhs), term()});
      else
        return lhs;
    }
  }

  Expr term() {
    Expr lhs = factor();
    for (;;) {
      skip_space();
      const SourcePos pos = here();
      if (accept('*'))
        lhs = node(NodeKind::mul, pos, {std::move(lhs), factor()});
      else if (accept('/'))  // "t/2/3" is (t/2)/3, so no fraction literal right after '/'
        lhs = node(NodeKind::div, pos, {std::move(lhs), factor(false)});
      else
        return lhs;
    }
  }

  Rational exponent() {
    skip_space();
    if (accept('(')) {
      Rational r = rational();
      expect(')');
      return r;
    }
    return rational();
  }

  Expr with_exponent(Expr base) {
    skip_space();
    const SourcePos pos = here();
    if (!accept('^')) return base;
    Expr p = node(NodeKind::pow, pos, {std::move(base)});
    p.value = exponent();
    skip_space();
    if (peek() == '^') fail(errc::syntax, "chained '^' needs parentheses");
    return p;
  }

  Expr factor(bool allow_fraction = true) {
    skip_space();
    const SourcePos pos = here();
    if (!is_digit(peek()) && peek() != '-') return with_exponent(atom());
    if (peek() == '-' && !next_is_char_then_digit('-')) fail(errc::syntax, "'-' must start a number here");
    const bool negative = accept('-');
    Integer num = integer();
    if (negative) num = -num;
    if (!allow_fraction || !next_is_char_then_digit('/')) return with_exponent(literal(Rational(num), pos));
    expect('/');
    skip_space();
    const SourcePos den_pos = here();
    Integer den = integer();
    skip_space();
    if (peek() == '^')
      return node(NodeKind::div, pos, {literal(Rational(num), pos), with_exponent(literal(Rational(den), den_pos))});
    if (den == 0) fail_at(errc::syntax, den_pos, "zero denominator");
    return literal(make_rational(num, den), pos);
  }

  Expr atom() {
    skip_space();
    const SourcePos pos = here();
    if (accept('(')) {
      Expr inner = expr();
      expect(')');
      return inner;
    }
    if (is_alpha(peek())) {
      std::string name;
      while (!at_end() && (is_alpha(peek()) || is_digit(peek()))) {
        name += peek();
        advance();
      }
      if (name == "t") return node(NodeKind::var_t, pos, {});
      skip_space();
      if (peek() != '(') fail_at(errc::syntax, pos, "unknown identifier '" + name + "'");
      if (name != "exp" && name != "log") fail_at(errc::unknown_function, pos, "unknown function '" + name + "'");
      expect('(');
      Expr call = node(NodeKind::call, pos, {expr()});
      call.name = std::move(name);
      expect(')');
      return call;
    }
    if (at_end()) fail(errc::syntax, "unexpected end of input");
    fail(errc::syntax, std::string("unexpected '") + peek() + "'");
  }

  std::string_view text_;
  std::size_t i_ = 0;
  SourcePos pos_;
  std::size_t depth_ = 0;
};

}  // namespace detail

inline Expr parse_series_expr(std::string_view text) { return detail::ExprParser(text).parse(); }

/// Largest |integer exponent| accepted by elaborate().
inline constexpr long max_integer_exponent = 1L << 20;

/// Bound on (coefficient bits of the base) * |exponent| for integer powers.
inline constexpr std::size_t max_power_bits = std::size_t{1} << 22;

namespace detail {

inline std::size_t coefficient_bits(const Series& f) {
  std::size_t bits = 1;
  for (const Rational& c : f.coeffs())
    bits = std::max(bits, mpz_sizeinbase(c.get_num_mpz_t(), 2) + mpz_sizeinbase(c.get_den_mpz_t(), 2));
  return bits;
}

}  // namespace detail

/// Lowers an expression onto truncated series of the given order.
inline Series elaborate(const Expr& e, std::size_t order) {
  auto fail = [&](const std::string& msg) -> Series {
    throw error(errc::semantic,
                "line " + std::to_string(e.pos.line) + ", column " + std::to_string(e.pos.column) + ": " + msg);
  };
  switch (e.kind) {
    case NodeKind::rational: return Series::constant(e.value, order);
    case NodeKind::var_t: return Series::variable(order);
    case NodeKind::add: return elaborate(e.children[0], order) + elaborate(e.children[1], order);
    case NodeKind::sub: return elaborate(e.children[0], order) - elaborate(e.children[1], order);
    case NodeKind::mul: return elaborate(e.children[0], order) * elaborate(e.children[1], order);
    case NodeKind::div: {
      Series divisor = elaborate(e.children[1], order);
      if (divisor[0] == 0) return fail("divisor has zero constant term");
      return elaborate(e.children[0], order) * series_recip(divisor);
    }
    case NodeKind::pow: {
      Series base = elaborate(e.children[0], order);
      if (is_integer(e.value)) {
        if (!e.value.get_num().fits_slong_p() || abs(e.value) > max_integer_exponent) return fail("exponent too large");
        const long m = e.value.get_num().get_si();
        if (detail::coefficient_bits(base) * static_cast<std::size_t>(m < 0 ? -m : m) > max_power_bits)
          return fail("power would produce coefficients that are too large");
        if (m < 0 && base[0] == 0) return fail("negative power of a series with zero constant term");
        return pow_int(base, m);
      }
      if (base[0] != 1) return fail("fractional power needs base constant term 1");
      return pow_rat(base, e.value);
    }
    case NodeKind::call: {
      Series arg = elaborate(e.children[0], order);
      if (e.name == "exp") {
        if (arg[0] != 0) return fail("exp needs argument constant term 0");
        return detail::exp_series(arg);
      }
      if (arg[0] != 1) return fail("log needs argument constant term 1");
      return detail::log_series(arg);
    }
  }
  return fail("unhandled node");
}

inline Series elaborate(std::string_view text, std::size_t order) { return elaborate(parse_series_expr(text), order); }

}  // namespace tripow
