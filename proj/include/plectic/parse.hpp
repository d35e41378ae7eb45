#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "plectic/errors.hpp"
#include "plectic/exterior.hpp"

namespace plectic {

/// Malformed input. offset() is the byte position of the offending token.
class SyntaxError : public Error {
 public:
  SyntaxError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// A sum of terms with different degrees. offset() points at the operator.
class DegreeMixError : public Error {
 public:
  DegreeMixError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

enum class ExprKind { kForm, kMultivector };

/// Syntax tree of a form or multivector expression.
///
///   expr   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor (('*' | '/' | '^') factor)*
///   factor := '-' factor | integer | 'x'<i> ['**' integer] | 'dx'<i> | 'e'<i>
///           | 'd(' expr ')' | '(' expr ')'
///
/// '^' is the wedge product, '*' multiplies by a degree-0 factor, '/' divides
/// by a nonzero degree-0 factor; all three are left-associative at the same
/// precedence. Indices are 1-based in the text.
struct FormExpr {
  enum class Op { kNumber, kVariable, kBasis, kNegate, kAdd, kSubtract, kMultiply, kDivide,
                  kWedge, kDerivative };

  Op op;
  std::size_t offset;  // byte offset of the node's leading token
  int degree;          // syntactic degree
  std::string number;  // kNumber: decimal digits
  int index = 0;       // kVariable, kBasis: 0-based coordinate
  int power = 1;       // kVariable
  std::vector<std::unique_ptr<FormExpr>> children;
};

/// Throws SyntaxError, DegreeMixError or IndexError.
std::unique_ptr<FormExpr> parse_expr(std::string_view text, std::size_t chart_dim, ExprKind kind);

Form evaluate_form(const FormExpr& expr, std::size_t chart_dim);
Multivector evaluate_multivector(const FormExpr& expr, std::size_t chart_dim);

Form parse_form(std::string_view text, std::size_t chart_dim);
Multivector parse_multivector(std::string_view text, std::size_t chart_dim);

}  // namespace plectic
