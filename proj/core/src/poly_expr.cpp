#include "leechcert/bounds.hpp"
#include "leechcert/errors.hpp"

#include <cctype>

namespace leechcert {

namespace {

class Parser {
 public:
  explicit Parser(std::string text) : s_(std::move(text)) {}

  RationalPolynomial product() {
    RationalPolynomial p = factor();
    skip();
    while (peek() == '*') {
      ++pos_;
      p *= factor();
      skip();
    }
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return p;
  }

 private:
  RationalPolynomial factor() {
    skip();
    RationalPolynomial base;
    if (peek() == '(') {
      ++pos_;
      skip();
      if (peek() != 'x') fail("expected 'x' after '('");
      ++pos_;
      skip();
      Rational shift = 0;
      if (peek() == '+' || peek() == '-') {
        const bool negative = s_[pos_++] == '-';
        skip();
        shift = rational();
        if (negative) shift = -shift;
        skip();
      }
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      base = RationalPolynomial::linear(shift);
    } else if (peek() == 'x') {
      ++pos_;
      base = RationalPolynomial::monomial(1);
    } else {
      base = RationalPolynomial::constant(signed_rational());
    }
    skip();
    if (peek() == '^') {
      ++pos_;
      skip();
      const std::size_t start = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (start == pos_ || pos_ - start > 3) fail("expected a small nonnegative exponent");
      base = base.pow(static_cast<unsigned>(std::stoul(s_.substr(start, pos_ - start))));
    }
    return base;
  }

  Rational signed_rational() {
    bool negative = false;
    if (peek() == '-' || peek() == '+') negative = s_[pos_++] == '-';
    Rational r = rational();
    return negative ? Rational(-r) : r;
  }

  Rational rational() {
    const std::size_t start = pos_;
    while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    if (start == pos_) fail("expected a number");
    if (peek() == '/') {
      ++pos_;
      const std::size_t d = pos_;
      while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
      if (d == pos_) fail("expected a denominator");
    }
    return parse_rational(s_.substr(start, pos_ - start));
  }

  char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }
  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("polynomial '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

  std::string s_;
  std::size_t pos_ = 0;
};

}  // namespace

RationalPolynomial parse_polynomial(const std::string& text) {
  if (text.find('x') == std::string::npos) {
    std::vector<Rational> coeffs;
    std::size_t start = 0;
    for (;;) {
      const std::size_t comma = text.find(',', start);
      coeffs.push_back(parse_rational(text.substr(start, comma == std::string::npos ? std::string::npos : comma - start)));
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    return RationalPolynomial(std::move(coeffs));
  }
  return Parser(text).product();
}

}  // namespace leechcert
