#include "plectic/parse.hpp"

#include <cctype>
#include <charconv>

#include "plectic/cartan.hpp"

namespace plectic {

SyntaxError::SyntaxError(const std::string& message, std::size_t offset)
    : Error("syntax error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

DegreeMixError::DegreeMixError(const std::string& message, std::size_t offset)
    : Error("degree mix at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

namespace {

using Node = std::unique_ptr<FormExpr>;

Node make_node(FormExpr::Op op, std::size_t offset, int degree) {
  auto node = std::make_unique<FormExpr>();
  node->op = op;
  node->offset = offset;
  node->degree = degree;
  return node;
}

Node make_binary(FormExpr::Op op, std::size_t offset, int degree, Node lhs, Node rhs) {
  Node node = make_node(op, offset, degree);
  node->children.push_back(std::move(lhs));
  node->children.push_back(std::move(rhs));
  return node;
}

class Parser {
 public:
  Parser(std::string_view text, std::size_t dim, ExprKind kind)
      : text_(text), dim_(dim), kind_(kind) {}

  Node parse() {
    Node node = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return node;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }
  [[noreturn]] void fail_at(const std::string& message, std::size_t at) const {
    throw SyntaxError(message, at);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip_space();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool peek_str(std::string_view s) {
    skip_space();
    return text_.substr(pos_, s.size()) == s;
  }

  void expect(char c) {
    if (!peek(c)) {
      fail(pos_ < text_.size() ? "expected '" + std::string(1, c) + "'"
                               : "expected '" + std::string(1, c) + "' before end of input");
    }
    ++pos_;
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected a number");
    return std::string(text_.substr(start, pos_ - start));
  }

  int small_integer(std::size_t at, int limit) {
    const std::string s = digits();
    int value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec != std::errc() || ptr != s.data() + s.size() || value > limit) {
      fail_at("number " + s + " is too large", at);
    }
    return value;
  }

  int coordinate(std::size_t at) {
    const int i = small_integer(pos_, 1 << 20);
    if (i < 1 || static_cast<std::size_t>(i) > dim_) {
      throw IndexError("index " + std::to_string(i) + " at offset " + std::to_string(at) +
                       " outside chart of dimension " + std::to_string(dim_));
    }
    return i - 1;
  }

  Node expr() {
    skip_space();
    const std::size_t start = pos_;
    Node node;
    if (peek('+')) {
      ++pos_;
      node = term();
    } else if (peek('-')) {
      ++pos_;
      Node inner = term();
      node = make_node(FormExpr::Op::kNegate, start, inner->degree);
      node->children.push_back(std::move(inner));
    } else {
      node = term();
    }
    for (;;) {
      FormExpr::Op op;
      if (peek('+')) {
        op = FormExpr::Op::kAdd;
      } else if (peek('-')) {
        op = FormExpr::Op::kSubtract;
      } else {
        break;
      }
      const std::size_t at = pos_++;
      Node rhs = term();
      if (rhs->degree != node->degree) {
        throw DegreeMixError("sum of a degree-" + std::to_string(node->degree) +
                                 " and a degree-" + std::to_string(rhs->degree) + " term",
                             at);
      }
      const int degree = node->degree;
      node = make_binary(op, at, degree, std::move(node), std::move(rhs));
    }
    return node;
  }

  Node term() {
    Node node = factor();
    for (;;) {
      FormExpr::Op op;
      if (peek_str("**")) {
        fail("'**' only raises a coordinate x<i> to an integer power");
      } else if (peek('*')) {
        op = FormExpr::Op::kMultiply;
      } else if (peek('/')) {
        op = FormExpr::Op::kDivide;
      } else if (peek('^')) {
        op = FormExpr::Op::kWedge;
      } else {
        break;
      }
      const std::size_t at = pos_++;
      Node rhs = factor();
      int degree = node->degree + rhs->degree;
      if (op == FormExpr::Op::kMultiply && node->degree != 0 && rhs->degree != 0) {
        fail_at("'*' needs a degree-0 operand; use '^' to wedge graded factors", at);
      }
      if (op == FormExpr::Op::kDivide && rhs->degree != 0) {
        fail_at("divisor must have degree 0", at);
      }
      node = make_binary(op, at, degree, std::move(node), std::move(rhs));
    }
    return node;
  }

  Node factor() {
    skip_space();
    const std::size_t at = pos_;
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '-') {
      ++pos_;
      Node inner = factor();
      Node node = make_node(FormExpr::Op::kNegate, at, inner->degree);
      node->children.push_back(std::move(inner));
      return node;
    }
    if (c == '(') {
      ++pos_;
      Node inner = expr();
      expect(')');
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Node node = make_node(FormExpr::Op::kNumber, at, 0);
      node->number = digits();
      return node;
    }
    if (text_.substr(pos_, 2) == "dx") {
      if (kind_ != ExprKind::kForm) fail("form basis 'dx' in a multivector expression");
      pos_ += 2;
      Node node = make_node(FormExpr::Op::kBasis, at, 1);
      node->index = coordinate(at);
      return node;
    }
    if (c == 'd') {
      ++pos_;
      if (!peek('(')) fail("expected 'dx<i>' or 'd('");
      if (kind_ != ExprKind::kForm) fail_at("d( ) applies to forms only", at);
      ++pos_;
      Node inner = expr();
      expect(')');
      Node node = make_node(FormExpr::Op::kDerivative, at, inner->degree + 1);
      node->children.push_back(std::move(inner));
      return node;
    }
    if (c == 'x') {
      ++pos_;
      Node node = make_node(FormExpr::Op::kVariable, at, 0);
      node->index = coordinate(at);
      if (peek_str("**")) {
        pos_ += 2;
        skip_space();
        node->power = small_integer(pos_, 65535);
      }
      return node;
    }
    if (c == 'e') {
      if (kind_ != ExprKind::kMultivector) fail("multivector basis 'e' in a form expression");
      ++pos_;
      Node node = make_node(FormExpr::Op::kBasis, at, 1);
      node->index = coordinate(at);
      return node;
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::size_t dim_;
  ExprKind kind_;
  std::size_t pos_ = 0;
};

template <class Kind>
RationalFn as_function(const Graded<Kind>& g, std::size_t dim) {
  if (g.is_zero()) return RationalFn(dim);
  return g.coefficient({});
}

template <class Kind>
Graded<Kind> evaluate(const FormExpr& e, std::size_t dim) {
  using G = Graded<Kind>;
  switch (e.op) {
    case FormExpr::Op::kNumber:
      return G::function(RationalFn::constant(dim, Rational(e.number)));
    case FormExpr::Op::kVariable:
      return G::function(RationalFn(Poly::variable(dim, static_cast<std::size_t>(e.index),
                                                   e.power)));
    case FormExpr::Op::kBasis:
      return G::basis(dim, {e.index});
    case FormExpr::Op::kNegate:
      return -evaluate<Kind>(*e.children[0], dim);
    case FormExpr::Op::kAdd:
    case FormExpr::Op::kSubtract: {
      G lhs = evaluate<Kind>(*e.children[0], dim);
      G rhs = evaluate<Kind>(*e.children[1], dim);
      // Keep the syntactic degree even when one side cancels to zero.
      G out(dim, e.degree);
      out += lhs;
      if (e.op == FormExpr::Op::kAdd) {
        out += rhs;
      } else {
        out -= rhs;
      }
      return out;
    }
    case FormExpr::Op::kMultiply: {
      G lhs = evaluate<Kind>(*e.children[0], dim);
      G rhs = evaluate<Kind>(*e.children[1], dim);
      if (e.children[0]->degree == 0) {
        G out = rhs.scaled(as_function(lhs, dim));
        return out.is_zero() ? G(dim, e.degree) : out;
      }
      G out = lhs.scaled(as_function(rhs, dim));
      return out.is_zero() ? G(dim, e.degree) : out;
    }
    case FormExpr::Op::kDivide: {
      G lhs = evaluate<Kind>(*e.children[0], dim);
      const RationalFn divisor = as_function(evaluate<Kind>(*e.children[1], dim), dim);
      if (divisor.is_zero()) throw DivisionByZero("division by zero at offset " +
                                                  std::to_string(e.offset));
      G out = lhs.scaled(divisor.inverse());
      return out.is_zero() ? G(dim, e.degree) : out;
    }
    case FormExpr::Op::kWedge: {
      G out = wedge(evaluate<Kind>(*e.children[0], dim), evaluate<Kind>(*e.children[1], dim));
      return out.is_zero() ? G(dim, e.degree) : out;
    }
    case FormExpr::Op::kDerivative:
      if constexpr (std::is_same_v<Kind, FormKind>) {
        return exterior_derivative(evaluate<Kind>(*e.children[0], dim));
      } else {
        throw SyntaxError("d( ) applies to forms only", e.offset);
      }
  }
  throw SyntaxError("unknown node", e.offset);
}

}  // namespace

std::unique_ptr<FormExpr> parse_expr(std::string_view text, std::size_t chart_dim,
                                     ExprKind kind) {
  return Parser(text, chart_dim, kind).parse();
}

Form evaluate_form(const FormExpr& expr, std::size_t chart_dim) {
  return evaluate<FormKind>(expr, chart_dim);
}

Multivector evaluate_multivector(const FormExpr& expr, std::size_t chart_dim) {
  return evaluate<VectorKind>(expr, chart_dim);
}

Form parse_form(std::string_view text, std::size_t chart_dim) {
  return evaluate_form(*parse_expr(text, chart_dim, ExprKind::kForm), chart_dim);
}

Multivector parse_multivector(std::string_view text, std::size_t chart_dim) {
  return evaluate_multivector(*parse_expr(text, chart_dim, ExprKind::kMultivector), chart_dim);
}

}  // namespace plectic
