#include "forge/parser.hpp"

#include <cctype>

#include "forge/error.hpp"

namespace forge {

namespace {

class ExpressionParser {
public:
  ExpressionParser(std::string_view text, const RingPtr& ring, const Bindings* bindings)
      : text_(text), ring_(ring), bindings_(bindings) {}

  Polynomial parse() {
    skip_space();
    if (pos_ == text_.size()) fail("empty expression");
    Polynomial p = expr();
    skip_space();
    if (pos_ != text_.size()) fail(std::string("unexpected '") + text_[pos_] + "'");
    return p;
  }

private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool negate_first = false;
    if (accept('-')) negate_first = true;
    else accept('+');
    Polynomial first = term();
    acc = negate_first ? -first : first;
    for (;;) {
      if (accept('+')) acc = acc + term();
      else if (accept('-')) acc = acc - term();
      else break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * factor();
      } else if (c == '/') {
        fail("division is not supported");
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    if (accept('-')) return -factor();
    return power_expr();
  }

  Polynomial power_expr() {
    Polynomial base = atom();
    if (accept('^')) {
      skip_space();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
        fail("exponent must be a non-negative integer literal");
      mpz_class e = integer_literal();
      if (e > 100000) fail("exponent too large");
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  mpz_class integer_literal() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return mpz_class(std::string(text_.substr(start, pos_ - start)));
  }

  Polynomial atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of expression");
    char c = text_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t literal_start = pos_;
      Scalar value(integer_literal());
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        std::size_t slash = pos_;
        ++pos_;
        skip_space();
        bool denominator_follows = pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
        if (ring_->coefficients().kind() != CoefficientRing::Kind::Rationals || !denominator_follows) {
          pos_ = slash;
          fail("division is not supported");
        }
        mpz_class den = integer_literal();
        if (den == 0) {
          pos_ = literal_start;
          fail("zero denominator");
        }
        value = Scalar(value.get_num(), den);
        value.canonicalize();
      }
      return Polynomial::constant(ring_, value);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      std::string name(text_.substr(start, pos_ - start));
      if (auto i = ring_->index_of(name)) return Polynomial::variable(ring_, *i);
      if (bindings_) {
        if (auto it = bindings_->find(name); it != bindings_->end()) {
          if (!same_ring(it->second.ring(), ring_))
            throw RingMismatch("'" + name + "' is defined over " + it->second.ring()->to_string());
          return it->second;
        }
      }
      pos_ = start;
      fail("unknown variable '" + name + "'");
    }
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view text_;
  const RingPtr& ring_;
  const Bindings* bindings_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, const Bindings* bindings) {
  return ExpressionParser(text, ring, bindings).parse();
}

}  // namespace forge
