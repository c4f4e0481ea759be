#include <cctype>

#include "curvepencil/mvpoly.hpp"

namespace curvepencil {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  uint8_t mask;

  explicit Parser(const std::string& text, uint8_t m) : s(text), mask(m) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) pos++;
  }

  bool peek(char c) {
    skip_ws();
    return pos < s.size() && s[pos] == c;
  }

  bool eat(char c) {
    if (peek(c)) {
      pos++;
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& msg) { throw ParseError(msg, pos); }

  Int parse_integer() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) pos++;
    if (pos == start) fail("expected a number");
    return Int(s.substr(start, pos - start));
  }

  // number := integer [ '/' integer ]   (rational literals only)
  Rat parse_number() {
    Int n = parse_integer();
    if (eat('/')) {
      Int d = parse_integer();
      if (d == 0) fail("zero denominator");
      return make_rat(n, d);
    }
    return Rat(n);
  }

  int var_index(char c) const {
    for (int v = 0; v < kNumVars; v++)
      if (kVarName[v] == c && (mask & (1u << v))) return v;
    return -1;
  }

  bool starts_primary() {
    skip_ws();
    if (pos >= s.size()) return false;
    char c = s[pos];
    return std::isdigit(static_cast<unsigned char>(c)) || c == '(' || var_index(c) >= 0;
  }

  MPoly parse_primary() {
    skip_ws();
    if (pos >= s.size()) fail("unexpected end of input");
    char c = s[pos];
    if (std::isdigit(static_cast<unsigned char>(c))) return mp_const(mask, parse_number());
    if (c == '(') {
      pos++;
      MPoly e = parse_expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    int v = var_index(c);
    if (v < 0) fail(std::string("unexpected character '") + c + "'");
    pos++;
    return mp_var(mask, v);
  }

  MPoly parse_power() {
    MPoly base = parse_primary();
    skip_ws();
    if (eat('^')) {
      Int e = parse_integer();
      if (e < 0 || e > 200) fail("exponent out of range");
      return mp_pow(base, static_cast<int>(e.get_si()));
    }
    return base;
  }

  // factors chained by '*' or juxtaposition: 3xyz, 2(x+y), x^2y
  MPoly parse_term() {
    MPoly acc = parse_power();
    while (true) {
      skip_ws();
      if (eat('*')) {
        acc = acc * parse_power();
        continue;
      }
      if (starts_primary()) {
        acc = acc * parse_power();
        continue;
      }
      return acc;
    }
  }

  MPoly parse_signed_term() {
    skip_ws();
    bool negate = false;
    while (true) {
      if (eat('-')) {
        negate = !negate;
        continue;
      }
      if (eat('+')) continue;
      break;
    }
    MPoly t = parse_term();
    return negate ? neg(t) : t;
  }

  MPoly parse_expr() {
    MPoly acc = parse_signed_term();
    while (true) {
      skip_ws();
      if (pos >= s.size()) return acc;
      char c = s[pos];
      if (c == '+') {
        pos++;
        acc = acc + parse_signed_term();
      } else if (c == '-') {
        pos++;
        acc = acc - parse_signed_term();
      } else {
        return acc;
      }
    }
  }
};

}  // namespace

MPoly parse_poly(const std::string& text, uint8_t mask) {
  Parser p(text, mask);
  MPoly out = p.parse_expr();
  p.skip_ws();
  if (p.pos != text.size()) p.fail("trailing input");
  return out;
}

HomPoly parse_hom(const std::string& text, uint8_t mask) { return HomPoly(parse_poly(text, mask)); }

}  // namespace curvepencil
