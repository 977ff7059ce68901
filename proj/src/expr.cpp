#include "sbr/expr.hpp"

#include <cctype>

#include "sbr/arithmetic.hpp"

namespace sbr {

namespace {

Expression make_leaf(Rational value) {
  Expression e;
  e.kind = Expression::Kind::literal;
  e.value = std::move(value);
  return e;
}

Expression make_unary(Expression::Kind kind, Expression a) {
  Expression e;
  e.kind = kind;
  e.lhs = std::make_unique<Expression>(std::move(a));
  return e;
}

Expression make_binary(Expression::Kind kind, Expression a, Expression b) {
  Expression e;
  e.kind = kind;
  e.lhs = std::make_unique<Expression>(std::move(a));
  e.rhs = std::make_unique<Expression>(std::move(b));
  return e;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  Expression run() {
    Expression e = parse_sum();
    skip_ws();
    if (pos_ != text_.size()) throw ExprError(pos_, "trailing input");
    return e;
  }

 private:
  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool at_end() {
    skip_ws();
    return pos_ == text_.size();
  }

  char peek() { return text_[pos_]; }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Expression parse_sum() {
    Expression e = parse_product();
    for (;;) {
      if (eat('+'))
        e = make_binary(Expression::Kind::add, std::move(e), parse_product());
      else if (eat('-'))
        e = make_binary(Expression::Kind::subtract, std::move(e), parse_product());
      else
        return e;
    }
  }

  Expression parse_product() {
    Expression e = parse_factor();
    while (eat('*')) e = make_binary(Expression::Kind::multiply, std::move(e), parse_factor());
    return e;
  }

  Expression parse_factor() {
    if (eat('-')) return make_unary(Expression::Kind::negate, parse_factor());
    return parse_primary();
  }

  Expression parse_primary() {
    skip_ws();
    if (pos_ == text_.size()) throw ExprError(pos_, "unexpected end of input");
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_;
      ++pos_;
      Expression e = parse_sum();
      if (!eat(')')) throw ExprError(open, "unbalanced parenthesis");
      return e;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return parse_rational();
    if (std::isalpha(static_cast<unsigned char>(c))) return parse_function();
    throw ExprError(pos_, "unexpected character '" + std::string(1, c) + "'");
  }

  std::string lex_digits(const char* what) {
    if (pos_ == text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_])))
      throw ExprError(pos_, std::string("expected ") + what);
    std::string out;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_])))
      out += text_[pos_++];
    return out;
  }

  Expression parse_rational() {
    std::string num = lex_digits("digit");
    std::string den = "1";
    // the slash binds to the literal only when it directly follows
    if (pos_ < text_.size() && text_[pos_] == '/') {
      ++pos_;
      den = lex_digits("denominator digit");
    }
    auto r = Rational::parse(num + "/" + den);
    if (!r) throw ExprError(pos_, "malformed rational");
    return make_leaf(*r);
  }

  Expression parse_function() {
    std::size_t start = pos_;
    std::string name;
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_])))
      name += text_[pos_++];
    Expression::Kind kind;
    if (name == "min")
      kind = Expression::Kind::minimum;
    else if (name == "max")
      kind = Expression::Kind::maximum;
    else if (name == "avg")
      kind = Expression::Kind::average;
    else
      throw ExprError(start, "unknown identifier '" + name + "'");
    skip_ws();
    std::size_t open = pos_;
    if (!eat('(')) throw ExprError(pos_, "expected '(' after " + name);
    Expression a = parse_sum();
    if (!eat(',')) throw ExprError(pos_, "expected ',' in " + name);
    Expression b = parse_sum();
    if (!eat(')')) throw ExprError(open, "unbalanced parenthesis");
    return make_binary(kind, std::move(a), std::move(b));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Expression parse_expression(std::string_view text) { return Parser(text).run(); }

SignedBitNumber eval_signed_bit(const Expression& e) {
  switch (e.kind) {
    case Expression::Kind::literal:
      return from_rational(e.value);
    case Expression::Kind::negate:
      return negate(eval_signed_bit(*e.lhs));
    case Expression::Kind::add:
      return add(eval_signed_bit(*e.lhs), eval_signed_bit(*e.rhs));
    case Expression::Kind::subtract:
      return add(eval_signed_bit(*e.lhs), negate(eval_signed_bit(*e.rhs)));
    case Expression::Kind::multiply:
      return mul(eval_signed_bit(*e.lhs), eval_signed_bit(*e.rhs));
    case Expression::Kind::minimum:
      return min_sb(eval_signed_bit(*e.lhs), eval_signed_bit(*e.rhs));
    case Expression::Kind::maximum:
      return max_sb(eval_signed_bit(*e.lhs), eval_signed_bit(*e.rhs));
    case Expression::Kind::average:
    default:
      return scale(Rational(1, 2), add(eval_signed_bit(*e.lhs), eval_signed_bit(*e.rhs)));
  }
}

}  // namespace sbr
