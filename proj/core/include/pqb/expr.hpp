#pragma once

// Expressions over x and y for user-supplied target functions.
//
// Grammar (standard precedence, '^' right associative and tighter than
// unary minus, so -x^2 == -(x^2) and 2^-1 == 2^(-1)):
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' unary)?
//   primary := number | 'x' | 'y' | 'pi' | func '(' expr (',' expr)* ')' | '(' expr ')'
//
// Functions: sin cos exp abs sqrt (one argument), min max (two arguments).

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "pqb/numeric.hpp"

namespace pqb {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::string message, std::size_t offset, std::vector<std::string> expected);

  /// Byte offset into the source text.
  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }
  /// "message at offset N (expected: a, b)".
  std::string describe() const;

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// Evaluation outside the expression's domain (sqrt of a negative, division
/// by zero, non-finite result).
class EvalError : public DomainError {
 public:
  EvalError(const std::string& message, std::size_t offset)
      : DomainError(message), offset_(offset) {}
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

struct ExprNode;

class Expr {
 public:
  explicit Expr(std::shared_ptr<const ExprNode> root) : root_(std::move(root)) {}

  double eval(double x, double y) const;
  double operator()(double x, double y) const { return eval(x, y); }

  /// Canonical AST print, e.g. Add(Pow(x,2),Pow(y,2)).
  std::string to_string() const;

 private:
  std::shared_ptr<const ExprNode> root_;
};

Expr parse_expr(std::string_view text);

}  // namespace pqb
