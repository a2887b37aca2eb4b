#include "locsym/poly_parser.hpp"

#include <cctype>

#include "locsym/error.hpp"

namespace locsym {

namespace {

class Parser {
 public:
  Parser(std::string_view text, Space space) : text_(text), space_(space) {}

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorKind::ParseError,
                what + " at column " + std::to_string(pos_ + 1) + " in \"" + std::string(text_) + "\"");
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() != c) return false;
    ++pos_;
    return true;
  }
  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }
  bool at_end() { return peek() == '\0'; }

  int variable_index(char c) const {
    for (int i = 0; i < variable_count(space_); ++i)
      if (variable_name(space_, i) == c) return i;
    return -1;
  }

  BigInt integer() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return BigInt(std::string(text_.substr(start, pos_ - start)));
  }

  long signed_exponent() {
    bool neg = false;
    if (accept('-')) neg = true;
    else accept('+');
    BigInt v = integer();
    if (!v.fits_slong_p() || v > 1000) fail("exponent too large");
    return neg ? -v.get_si() : v.get_si();
  }

  // Polynomial grammar.
  Poly expr() {
    Poly result = term();
    while (true) {
      if (accept('+')) result += term();
      else if (accept('-')) result -= term();
      else return result;
    }
  }

  bool starts_factor() {
    char c = peek();
    return c == '(' || std::isdigit(static_cast<unsigned char>(c)) || variable_index(c) >= 0;
  }

  Poly term() {
    Poly result = unary();
    while (true) {
      if (accept('*')) {
        result = result * unary();
      } else if (accept('/')) {
        Poly d = unary();
        if (!d.is_constant() || d.is_zero()) fail("division by a nonconstant or zero polynomial");
        result *= BigRational(1) / d.leading_coefficient();
      } else if (starts_factor()) {
        result = result * power();
      } else {
        return result;
      }
    }
  }

  Poly unary() {
    if (accept('-')) return -unary();
    if (accept('+')) return unary();
    return power();
  }

  Poly power() {
    Poly base = primary();
    if (accept('^')) {
      BigInt e = integer();
      if (!e.fits_slong_p() || e > 1000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  Poly primary() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(space_, BigRational(integer()));
    int v = variable_index(c);
    if (v >= 0) {
      ++pos_;
      return Poly::variable(space_, v);
    }
    if (c == '\0') fail("unexpected end of input");
    fail(std::string("unexpected character '") + c + "'");
  }

  // Factored grammar.
  FactoredFunction function(bool trust) {
    std::vector<std::pair<Poly, long>> factors;
    BigRational constant(1);
    if (accept('-')) constant = -1;
    long sign = 1;
    while (true) {
      char c = peek();
      Poly base(space_);
      if (c == '(') {
        ++pos_;
        base = expr();
        expect(')');
      } else if (std::isdigit(static_cast<unsigned char>(c))) {
        base = Poly(space_, BigRational(integer()));
      } else if (variable_index(c) >= 0) {
        ++pos_;
        base = Poly::variable(space_, variable_index(c));
      } else {
        fail(c == '\0' ? "unexpected end of input" : std::string("unexpected character '") + c + "'");
      }
      long e = accept('^') ? signed_exponent() : 1;
      if (base.is_zero()) fail("zero factor");
      factors.emplace_back(std::move(base), sign * e);
      if (accept('*')) sign = 1;
      else if (accept('/')) sign = -1;
      else break;
    }
    if (!at_end()) fail("trailing input");
    return FactoredFunction::make(space_, constant, std::move(factors), trust);
  }

  std::string_view text_;
  Space space_;
  size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, Space space) {
  Parser p(text, space);
  Poly result = p.expr();
  if (!p.at_end()) p.fail("trailing input");
  return result;
}

FactoredFunction parse_function(std::string_view text, Space space, bool trust_irreducible) {
  Parser p(text, space);
  return p.function(trust_irreducible);
}

std::vector<BigRational> parse_coordinates(std::string_view text) {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  text = strip(text);
  if (text.size() < 2 || text.front() != '[' || text.back() != ']')
    throw Error(ErrorKind::ParseError, "point must be written as [a:b] or [a:b:c], got \"" + std::string(text) + "\"");
  text = text.substr(1, text.size() - 2);
  std::vector<BigRational> out;
  while (true) {
    size_t colon = text.find(':');
    out.push_back(parse_rational(strip(text.substr(0, colon))));
    if (colon == std::string_view::npos) break;
    text = text.substr(colon + 1);
  }
  return out;
}

}  // namespace locsym
