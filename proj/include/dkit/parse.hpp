#pragma once

#include "dkit/ring.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace dkit {

/// Base for polynomial text errors; offset is a byte position in the input.
class ParseError : public std::invalid_argument {
public:
  ParseError(const std::string& what, std::size_t offset)
      : std::invalid_argument(what + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

private:
  std::size_t offset_;
};

class SyntaxError : public ParseError {
public:
  using ParseError::ParseError;
};

class UnknownVariable : public ParseError {
public:
  UnknownVariable(std::string name, std::size_t offset)
      : ParseError("unknown variable '" + name + "'", offset), name_(std::move(name)) {}
  const std::string& name() const { return name_; }

private:
  std::string name_;
};

/// Parse a polynomial over ring.
///
/// Grammar: integer literals, declared variable names, + - * / ^ and
/// parentheses. ^ binds tighter than * and /, which bind tighter than + and -.
/// Multiplication must be written out; "x2" is an unknown variable, not x^2.
/// A divisor must evaluate to a nonzero constant, which is how rational
/// coefficients such as 1/3*x are written.
Poly parse_poly(std::string_view text, const RingPtr& ring);

}  // namespace dkit
