#ifndef XYK_PARSE_HPP
#define XYK_PARSE_HPP

#include <cctype>
#include <limits>
#include <string>
#include <string_view>

#include "xyk/order.hpp"
#include "xyk/polynomial.hpp"

namespace xyk {

// Grammar (ASCII):
//   polynomial := ['-'] term (('+'|'-') term)*
//   term       := factor ('*' factor)*          -- implicit multiplication forbidden
//   factor     := primary ['^' natural]
//   primary    := variable | literal | '(' polynomial ')'
//   variable   := 'x' '[' nat ']' '[' nat ']' | 'y' '[' nat ']'
//   literal    := nat ['/' nat] | nat 'mod' nat  -- the latter only over GF(p)
// Orders:
//   order      := 'order' 'lex' ':' variable ('>' variable)* ['>' '...rest']
// A trailing '...rest' asks for the deterministic completion (remaining
// x-variables row-major, then y_1..y_n).

namespace detail {

struct Lexer {
  std::string_view text;
  size_t pos = 0;
  int line = 1, col = 1;

  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line, col); }

  void skip_ws() {
    while (pos < text.size()) {
      char c = text[pos];
      if (c == '\n') {
        ++line;
        col = 1;
        ++pos;
      } else if (c == ' ' || c == '\t' || c == '\r') {
        ++col;
        ++pos;
      } else {
        break;
      }
    }
  }

  bool eof() {
    skip_ws();
    return pos == text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  void advance(size_t k = 1) {
    col += static_cast<int>(k);
    pos += k;
  }

  bool accept(char c) {
    if (peek() == c) {
      advance();
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool accept_word(std::string_view w) {
    skip_ws();
    if (text.substr(pos, w.size()) == w) {
      // words must not run into an identifier character
      size_t after = pos + w.size();
      if (after < text.size() && (std::isalnum(static_cast<unsigned char>(text[after])) != 0))
        return false;
      advance(w.size());
      return true;
    }
    return false;
  }

  std::string natural() {
    skip_ws();
    if (pos >= text.size() || std::isdigit(static_cast<unsigned char>(text[pos])) == 0)
      fail("expected a number");
    std::string s;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos])) != 0) {
      s += text[pos];
      advance();
    }
    return s;
  }

  int small_natural(const char* what) {
    std::string s = natural();
    if (s.size() > 9) fail(std::string(what) + " out of range");
    return std::stoi(s);
  }

  int bracketed_index() {
    expect('[');
    int v = small_natural("index");
    expect(']');
    return v;
  }

  Variable variable(const Ring& ring) {
    skip_ws();
    int at_line = line, at_col = col;
    char c = peek();
    if (c == 'x') {
      advance();
      int i = bracketed_index();
      int j = bracketed_index();
      Variable v = Variable::x(i, j);
      if (!ring.find(v))
        throw ParseError("unknown variable " + v.str() + " in " + ring.str(), at_line, at_col);
      return v;
    }
    if (c == 'y') {
      advance();
      int j = bracketed_index();
      Variable v = Variable::y(j);
      if (!ring.find(v))
        throw ParseError("unknown variable " + v.str() + " in " + ring.str(), at_line, at_col);
      return v;
    }
    fail("expected a variable");
  }
};

template <class F>
class PolyParser {
 public:
  using K = typename F::Element;

  PolyParser(RingPtr ring, std::string_view text, const F& field)
      : ring_(std::move(ring)), field_(field) {
    lx_.text = text;
  }

  Polynomial<K> run() {
    Polynomial<K> p = polynomial();
    if (!lx_.eof()) lx_.fail("unexpected trailing input");
    return p;
  }

 private:
  Polynomial<K> polynomial() {
    bool neg = false;
    if (lx_.accept('-'))
      neg = true;
    else
      lx_.accept('+');
    Polynomial<K> acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (lx_.accept('+')) {
        acc = acc + term();
      } else if (lx_.accept('-')) {
        acc = acc - term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<K> term() {
    Polynomial<K> acc = factor();
    while (lx_.accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial<K> factor() {
    Polynomial<K> base = primary();
    if (lx_.accept('^')) {
      int e = exponent();
      base = base.pow(e);
    }
    return base;
  }

  int exponent() {
    std::string s = lx_.natural();
    if (s.size() > 9) lx_.fail("exponent overflow");
    long v = std::stol(s);
    if (v > std::numeric_limits<int>::max()) lx_.fail("exponent overflow");
    return static_cast<int>(v);
  }

  Polynomial<K> primary() {
    char c = lx_.peek();
    if (c == '(') {
      lx_.advance();
      Polynomial<K> p = polynomial();
      lx_.expect(')');
      return p;
    }
    if (c == 'x' || c == 'y') {
      Variable v = lx_.variable(*ring_);
      return Polynomial<K>::variable(ring_, *ring_->find(v), field_.one());
    }
    if (std::isdigit(static_cast<unsigned char>(c)) != 0) return literal();
    lx_.fail("expected a variable, literal, or '('");
  }

  Polynomial<K> literal() {
    std::string num = lx_.natural();
    if (lx_.accept_word("mod")) {
      std::string mod = lx_.natural();
      return modular_literal(num, mod);
    }
    std::string den;
    if (lx_.accept('/')) den = lx_.natural();
    return Polynomial<K>::constant(ring_, field_.from_literal(num, den));
  }

  Polynomial<K> modular_literal(const std::string& num, const std::string& mod) {
    if constexpr (std::is_same_v<F, PrimeField>) {
      if (std::stoull(mod) != field_.p)
        throw ParseError("literal modulus " + mod + " does not match the session field " +
                             field_.name(),
                         lx_.line, lx_.col);
      return Polynomial<K>::constant(ring_, field_.from_literal(num, ""));
    } else {
      lx_.fail("modular literal in a rational session");
    }
  }

  RingPtr ring_;
  const F& field_;
  Lexer lx_;
};

}  // namespace detail

template <class F>
Polynomial<typename F::Element> parse_polynomial(RingPtr ring, std::string_view text,
                                                 const F& field) {
  detail::PolyParser<F> p(std::move(ring), text, field);
  return p.run();
}

inline MonomialOrder parse_order(RingPtr ring, std::string_view text) {
  detail::Lexer lx;
  lx.text = text;
  if (!lx.accept_word("order")) lx.fail("expected 'order'");
  if (!lx.accept_word("lex")) lx.fail("expected 'lex'");
  lx.expect(':');
  std::vector<int> chain;
  bool rest = false;
  for (;;) {
    if (lx.accept_word("...rest")) {
      rest = true;
      break;
    }
    Variable v = lx.variable(*ring);
    int idx = *ring->find(v);
    for (int seen : chain)
      if (seen == idx) lx.fail("variable " + v.str() + " listed twice");
    chain.push_back(idx);
    if (!lx.accept('>')) break;
  }
  if (!lx.eof()) lx.fail("unexpected trailing input");
  if (!rest && static_cast<int>(chain.size()) != ring->var_count())
    lx.fail("order must list every variable (or end with '...rest')");
  return MonomialOrder::lex_completed(std::move(ring), std::move(chain), "custom");
}

}  // namespace xyk

#endif
