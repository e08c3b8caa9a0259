#include <cctype>
#include <cstdint>

#include "sphereforge/polynomial.hpp"

namespace sphereforge {

namespace {

// expr   := ['+'|'-'] term { ('+'|'-') term }
// term   := factor { '*' factor }
// factor := base [ '^' INT ]
// base   := INT | IDENT | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const std::string& text, const RingPtr& ring)
      : text_(text), ring_(ring) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size())
      throw SyntaxError("unexpected trailing input in polynomial", pos_);
    return p;
  }

 private:
  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (peek() == '+' || peek() == '-') negate = (text_[pos_++] == '-');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      skip_ws();
      char c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      Polynomial t = term();
      acc = (c == '+') ? acc + t : acc - t;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      skip_ws();
      if (peek() != '*') break;
      ++pos_;
      acc = acc * factor();
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    skip_ws();
    if (peek() == '^') {
      ++pos_;
      skip_ws();
      b = b.pow(integer_literal());
    }
    return b;
  }

  Polynomial base() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_++;
      Polynomial p = expr();
      skip_ws();
      if (peek() != ')') throw SyntaxError("unbalanced parenthesis", open);
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num(number_text());
      skip_ws();
      // Integer fractions (n/d) are accepted so that emitted certificates
      // with rational cofactors round-trip through this grammar.
      if (peek() == '/') {
        std::size_t slash = pos_++;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw SyntaxError("expected integer denominator", pos_);
        Integer den(number_text());
        if (den == 0) throw SyntaxError("zero denominator", slash);
        return Polynomial::constant(ring_, Rational(num, den));
      }
      return Polynomial::constant(ring_, Rational(num));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      std::string name = identifier();
      auto idx = ring_->variable_index(name);
      if (!idx)
        throw SyntaxError("unknown variable '" + name + "'", start);
      return Polynomial::variable(ring_, *idx);
    }
    throw SyntaxError("expected integer, variable, or '('", pos_);
  }

  std::uint32_t integer_literal() {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      throw SyntaxError("expected integer exponent", pos_);
    std::size_t start = pos_;
    std::string digits = number_text();
    if (digits.size() > 6) throw SyntaxError("exponent too large", start);
    return static_cast<std::uint32_t>(std::stoul(digits));
  }

  std::string number_text() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           std::isdigit(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  std::string identifier() {
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
            text_[pos_] == '_'))
      ++pos_;
    return text_.substr(start, pos_ - start);
  }

  void skip_ws() {
    while (pos_ < text_.size() &&
           std::isspace(static_cast<unsigned char>(text_[pos_])))
      ++pos_;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  const std::string& text_;
  RingPtr ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const std::string& text, const RingPtr& ring) {
  return PolyParser(text, ring).parse();
}

}  // namespace sphereforge
