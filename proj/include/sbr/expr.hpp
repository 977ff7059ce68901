#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sbr/stream.hpp"

namespace sbr {

/// Parse diagnostic carrying the byte offset of the first error.
class ExprError : public std::runtime_error {
 public:
  ExprError(std::size_t offset, const std::string& message)
      : std::runtime_error(message + " at offset " + std::to_string(offset)), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Syntax tree over rational literals, unary minus, + - *, and the
/// two-argument forms min(,), max(,), avg(,).  Precedence: unary minus,
/// then *, then binary + and -.
struct Expression {
  enum class Kind { literal, negate, add, subtract, multiply, minimum, maximum, average };

  Kind kind = Kind::literal;
  Rational value;  // literal only
  std::unique_ptr<Expression> lhs, rhs;
};

Expression parse_expression(std::string_view text);  // throws ExprError

/// Evaluation over signed-bit streams; avg(x,y) is (x+y)/2 via scaling.
SignedBitNumber eval_signed_bit(const Expression& e);

}  // namespace sbr
