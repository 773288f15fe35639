#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "hwcls/cls.hpp"
#include "hwcls/errors.hpp"
#include "hwcls/function_spec.hpp"
#include "hwcls/scalar.hpp"

namespace hwcls {

/* Recursive-descent parsers for the four textual grammars. All are
   whitespace-insensitive; failures throw ParseError with the byte offset. */
class Parser {
public:
  explicit Parser(std::string_view text) : s_(text) {}

  // value := symbol (('+'|'-') rational)? | rational
  ScalarValue parse_value() {
    skip_ws();
    if (at_end())
      fail("a value");
    const char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+')
      return ScalarValue(parse_rational());
    if (!(std::isalpha(static_cast<unsigned char>(c)) || c == '_'))
      fail("a value");
    std::string label = parse_symbol();
    skip_ws();
    if (!at_end() && (peek() == '+' || peek() == '-')) {
      const bool neg = peek() == '-';
      ++pos_;
      Rational off = parse_unsigned_rational();
      return ScalarValue(std::move(label), neg ? -off : off);
    }
    return ScalarValue(std::move(label), Rational(0));
  }

  // function := segment (';' segment)*
  FunctionSpec parse_function() {
    std::vector<Segment> segs;
    segs.push_back(parse_segment());
    skip_ws();
    while (!at_end() && peek() == ';') {
      ++pos_;
      segs.push_back(parse_segment());
      skip_ws();
    }
    expect_end();
    return FunctionSpec(std::move(segs));
  }

  // order := block (';' block)*, block := 'fin(' k ')' | 'omega' | 'omega*'
  BorelOrder parse_order() {
    std::vector<OrderBlock> blocks;
    blocks.push_back(parse_order_block());
    skip_ws();
    while (!at_end() && peek() == ';') {
      ++pos_;
      blocks.push_back(parse_order_block());
      skip_ws();
    }
    expect_end();
    return BorelOrder(std::move(blocks));
  }

  // clsexpr := term+, terms multiply
  ClsCanonical parse_cls() {
    ClsCanonical acc = ClsCanonical::identity();
    bool any = false;
    for (;;) {
      skip_ws();
      if (at_end())
        break;
      acc = cls_mul(acc, parse_cls_term());
      any = true;
    }
    if (!any)
      fail("a c.l.s. term");
    expect_end();
    return acc;
  }

  // values := value (',' value)*
  std::vector<ScalarValue> parse_values_csv() {
    std::vector<ScalarValue> vals;
    vals.push_back(parse_value());
    skip_ws();
    while (!at_end() && peek() == ',') {
      ++pos_;
      vals.push_back(parse_value());
      skip_ws();
    }
    expect_end();
    return vals;
  }

  void expect_end() {
    skip_ws();
    if (!at_end())
      fail("end of input");
  }

private:
  bool at_end() const { return pos_ >= s_.size(); }
  char peek() const { return s_[pos_]; }
  void skip_ws() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek())))
      ++pos_;
  }
  [[noreturn]] void fail(const std::string& expected) const { throw ParseError(pos_, expected); }

  void expect(char c) {
    skip_ws();
    if (at_end() || peek() != c)
      fail(std::string("'") + c + "'");
    ++pos_;
  }

  bool try_keyword(std::string_view kw) {
    skip_ws();
    if (s_.substr(pos_, kw.size()) != kw)
      return false;
    pos_ += kw.size();
    return true;
  }

  long long parse_uint() {
    skip_ws();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek())))
      fail("a number");
    long long n = 0;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) {
      n = n * 10 + (peek() - '0');
      ++pos_;
    }
    return n;
  }

  Rational parse_unsigned_rational() {
    const long long num = parse_uint();
    if (!at_end() && peek() == '/') {
      ++pos_;
      const std::size_t at = pos_;
      const long long den = parse_uint();
      if (den == 0)
        throw ParseError(at, "a nonzero denominator");
      return Rational(num, den);
    }
    return Rational(num);
  }

  Rational parse_rational() {
    skip_ws();
    bool neg = false;
    if (!at_end() && (peek() == '-' || peek() == '+')) {
      neg = peek() == '-';
      ++pos_;
    }
    Rational r = parse_unsigned_rational();
    return neg ? -r : r;
  }

  std::string parse_symbol() {
    skip_ws();
    if (at_end() || !(std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_'))
      fail("a symbol or number");
    std::string sym;
    while (!at_end() &&
           (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      sym += peek();
      ++pos_;
    }
    return sym;
  }

  std::vector<ScalarValue> parse_bracketed_values() {
    expect('[');
    std::vector<ScalarValue> vals;
    vals.push_back(parse_value());
    skip_ws();
    while (!at_end() && peek() == ',') {
      ++pos_;
      vals.push_back(parse_value());
      skip_ws();
    }
    expect(']');
    return vals;
  }

  Segment parse_segment() {
    skip_ws();
    if (at_end())
      fail("a segment");
    if (peek() == '[')
      return Segment::fin(parse_bracketed_values());
    if (try_keyword("omega*"))
      return parse_infinite_segment(true);
    if (try_keyword("omega"))
      return parse_infinite_segment(false);
    fail("'[', 'omega' or 'omega*'");
  }

  Segment parse_infinite_segment(bool star) {
    expect('(');
    ScalarValue tail = parse_value();
    skip_ws();
    if (!at_end() && peek() == ';') {
      ++pos_;
      if (!try_keyword(star ? "top" : "head"))
        fail(star ? "'top'" : "'head'");
      expect('=');
      std::vector<ScalarValue> vals = parse_bracketed_values();
      expect(')');
      return star ? Segment::omega_star(std::move(tail), std::move(vals))
                  : Segment::omega(std::move(tail), std::move(vals));
    }
    if (!at_end() && peek() == ',') {
      ++pos_;
      if (!try_keyword("step"))
        fail("'step'");
      expect('=');
      Rational st = parse_rational();
      expect(')');
      return star ? Segment::omega_star_arith(std::move(tail), std::move(st))
                  : Segment::omega_arith(std::move(tail), std::move(st));
    }
    expect(')');
    return star ? Segment::omega_star(std::move(tail)) : Segment::omega(std::move(tail));
  }

  OrderBlock parse_order_block() {
    skip_ws();
    if (try_keyword("omega*"))
      return OrderBlock::omega_star();
    if (try_keyword("omega"))
      return OrderBlock::omega();
    if (try_keyword("fin")) {
      expect('(');
      const long long n = parse_uint();
      expect(')');
      return OrderBlock::fin(n);
    }
    fail("'fin', 'omega' or 'omega*'");
  }

  long long parse_paren_uint() {
    expect('(');
    const long long n = parse_uint();
    expect(')');
    return n;
  }

  long long parse_optional_power() {
    skip_ws();
    if (!at_end() && peek() == '^') {
      ++pos_;
      return parse_uint();
    }
    return 1;
  }

  ClsCanonical parse_cls_term() {
    skip_ws();
    if (!at_end() && peek() == '1') {
      ++pos_;
      return ClsCanonical::identity();
    }
    if (try_keyword("Linf"))
      return ClsCanonical::make(parse_paren_uint(), {}, 0, 0, {});
    if (try_keyword("L")) {
      const long long idx = parse_paren_uint();
      const long long exp = parse_optional_power();
      return ClsCanonical::make(0, {{idx, exp}}, 0, 0, {});
    }
    if (try_keyword("Einf"))
      return ClsCanonical::e_infinity();
    if (try_keyword("E"))
      return ClsCanonical::make(0, {}, parse_optional_power(), 0, {});
    if (try_keyword("Rinf"))
      return ClsCanonical::make(0, {}, 0, parse_paren_uint(), {});
    if (try_keyword("R")) {
      const long long idx = parse_paren_uint();
      const long long exp = parse_optional_power();
      return ClsCanonical::make(0, {}, 0, 0, {{idx, exp}});
    }
    fail("'Linf', 'L', 'Einf', 'E', 'Rinf', 'R' or '1'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

inline ScalarValue parse_value(std::string_view s) {
  Parser p(s);
  ScalarValue v = p.parse_value();
  p.expect_end();
  return v;
}

inline std::vector<ScalarValue> parse_values(std::string_view s) {
  return Parser(s).parse_values_csv();
}

inline FunctionSpec parse_function(std::string_view s) { return Parser(s).parse_function(); }

inline BorelOrder parse_order(std::string_view s) { return Parser(s).parse_order(); }

inline ClsCanonical parse_cls(std::string_view s) { return Parser(s).parse_cls(); }

} // namespace hwcls
