#pragma once

#include <cctype>

#include "gcred/scalar_expr.hpp"

namespace gcred {

struct parse_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Infix expression sub-language used by scene files: rational literals
// ("3", "2/5"), declared names, + - * / ^, parentheses, unary minus.
// Exponents are integer literals (negative allowed).
class ExprParser {
 public:
  explicit ExprParser(FieldPtr spec) : spec_(std::move(spec)) {}

  ScalarExpr parse(const std::string& src) const {
    State st{src, 0};
    ScalarExpr e = parse_sum(st);
    skip_ws(st);
    if (st.pos != src.size())
      throw parse_error("trailing input at column " + std::to_string(st.pos + 1) + " in: " + src);
    return e;
  }

 private:
  struct State {
    const std::string& s;
    std::size_t pos;
  };

  static void skip_ws(State& st) {
    while (st.pos < st.s.size() && std::isspace(static_cast<unsigned char>(st.s[st.pos]))) ++st.pos;
  }

  static bool eat(State& st, char c) {
    skip_ws(st);
    if (st.pos < st.s.size() && st.s[st.pos] == c) {
      ++st.pos;
      return true;
    }
    return false;
  }

  static char peek(State& st) {
    skip_ws(st);
    return st.pos < st.s.size() ? st.s[st.pos] : '\0';
  }

  ScalarExpr parse_sum(State& st) const {
    ScalarExpr acc = parse_product(st);
    for (;;) {
      if (eat(st, '+')) {
        acc = acc + parse_product(st);
      } else if (eat(st, '-')) {
        acc = acc - parse_product(st);
      } else {
        return acc;
      }
    }
  }

  ScalarExpr parse_product(State& st) const {
    ScalarExpr acc = parse_factor(st);
    for (;;) {
      if (eat(st, '*')) {
        acc = acc * parse_factor(st);
      } else if (eat(st, '/')) {
        acc = acc / parse_factor(st);
      } else {
        return acc;
      }
    }
  }

  ScalarExpr parse_factor(State& st) const {
    if (eat(st, '-')) return -parse_factor(st);
    ScalarExpr base = parse_atom(st);
    if (eat(st, '^')) return base.pow(parse_int_exponent(st));
    return base;
  }

  int parse_int_exponent(State& st) const {
    skip_ws(st);
    bool paren = eat(st, '(');
    bool neg = eat(st, '-');
    skip_ws(st);
    std::size_t start = st.pos;
    while (st.pos < st.s.size() && std::isdigit(static_cast<unsigned char>(st.s[st.pos]))) ++st.pos;
    if (st.pos == start) throw parse_error("expected integer exponent at column " + std::to_string(start + 1));
    int v = std::stoi(st.s.substr(start, st.pos - start));
    if (paren && !eat(st, ')')) throw parse_error("unclosed exponent parenthesis");
    return neg ? -v : v;
  }

  ScalarExpr parse_atom(State& st) const {
    skip_ws(st);
    if (st.pos >= st.s.size()) throw parse_error("unexpected end of expression");
    char c = st.s[st.pos];
    if (c == '(') {
      ++st.pos;
      ScalarExpr e = parse_sum(st);
      if (!eat(st, ')')) throw parse_error("missing ')' at column " + std::to_string(st.pos + 1));
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = st.pos;
      while (st.pos < st.s.size() && std::isdigit(static_cast<unsigned char>(st.s[st.pos]))) ++st.pos;
      return ScalarExpr::constant(spec_, parse_rat(st.s.substr(start, st.pos - start)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = st.pos;
      while (st.pos < st.s.size() &&
             (std::isalnum(static_cast<unsigned char>(st.s[st.pos])) || st.s[st.pos] == '_'))
        ++st.pos;
      std::string name = st.s.substr(start, st.pos - start);
      auto idx = spec_->find(name);
      if (!idx)
        throw name_error("unknown name '" + name + "' at column " + std::to_string(start + 1));
      return ScalarExpr::symbol(spec_, *idx);
    }
    throw parse_error(std::string("unexpected character '") + c + "' at column " +
                      std::to_string(st.pos + 1));
  }

  FieldPtr spec_;
};

inline ScalarExpr parse_expr(const FieldPtr& spec, const std::string& src) {
  return ExprParser(spec).parse(src);
}

}  // namespace gcred
