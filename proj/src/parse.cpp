#include "dkit/parse.hpp"

#include <cctype>
#include <limits>

namespace dkit {

namespace {

bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  Parser(std::string_view text, const RingPtr& ring) : text_(text), ring_(ring) {}

  Poly parse() {
    Poly p = expr();
    skip_space();
    if (pos_ != text_.size()) throw SyntaxError(std::string("unexpected '") + text_[pos_] + "'", pos_);
    return p;
  }

private:
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

  Poly expr() {
    Poly acc = term();
    for (;;) {
      if (accept('+'))
        acc = acc + term();
      else if (accept('-'))
        acc = acc - term();
      else
        return acc;
    }
  }

  Poly term() {
    Poly acc = unary();
    for (;;) {
      if (accept('*')) {
        acc = acc * unary();
      } else if (accept('/')) {
        skip_space();
        const std::size_t at = pos_;
        Poly d = unary();
        if (d.is_zero() || d.size() != 1 || !d.lead().is_constant())
          throw SyntaxError("divisor must be a nonzero constant", at);
        acc = acc.scaled(d.lead_coef().inverse());
      } else {
        return acc;
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
    if (!accept('^')) return base;
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw SyntaxError("expected exponent", pos_);
    unsigned long e = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      e = e * 10 + static_cast<unsigned long>(text_[pos_++] - '0');
      if (e > std::numeric_limits<Exponent>::max()) throw SyntaxError("exponent too large", at);
    }
    Poly result = Vect::constant(ring_, 1);
    for (unsigned long i = 0; i < e; ++i) result = result * base;
    return result;
  }

  Poly primary() {
    skip_space();
    if (pos_ >= text_.size()) throw SyntaxError("unexpected end of input", pos_);
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (!accept(')')) throw SyntaxError("expected ')'", pos_);
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const mpz_class value(std::string(text_.substr(start, pos_ - start)));
      return Vect::constant(ring_, ring_->field().from_mpz(value));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) return variable();
    throw SyntaxError(std::string("unexpected '") + c + "'", pos_);
  }

  // Longest declared name at this position that is not followed by another
  // identifier character; names may contain parentheses, e.g. "u(3)".
  Poly variable() {
    std::size_t best = std::string::npos, best_len = 0;
    for (std::size_t i = 0; i < ring_->nvars(); ++i) {
      const std::string& name = ring_->var_name(i);
      if (name.size() <= best_len || text_.substr(pos_, name.size()) != name) continue;
      const std::size_t end = pos_ + name.size();
      if (end < text_.size() && ident_char(text_[end])) continue;
      best = i;
      best_len = name.size();
    }
    if (best == std::string::npos) {
      std::size_t end = pos_;
      while (end < text_.size() && ident_char(text_[end])) ++end;
      throw UnknownVariable(std::string(text_.substr(pos_, end - pos_)), pos_);
    }
    pos_ += best_len;
    return Vect::variable(ring_, best);
  }

  std::string_view text_;
  const RingPtr& ring_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const RingPtr& ring) { return Parser(text, ring).parse(); }

}  // namespace dkit
