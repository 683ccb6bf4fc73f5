#pragma once

// Expression trees for entire functions F and weight components l_j over
// the variables z1..zn.
//
// Grammar (whitespace-insensitive, case-sensitive):
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := '-' unary | power
//   power   := primary ('^' int)?          int := '-'? digits | '(' '-'? digits ')'
//   primary := number | number 'i' | 'i' | var | func '(' expr ')' | '(' expr ')'
//   var     := 'z1' .. 'z9'  ('z' alone is accepted when n = 1)
//   func    := exp | sin | cos | abs | re | im
// so '^' binds tighter than unary minus: -z1^2 is -(z1^2).

#include <complex>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lindex/polydisc.hpp"
#include "lindex/scaled.hpp"

namespace lindex {

enum class Op : std::uint8_t {
  Literal, Variable,
  Neg, Exp, Sin, Cos, Abs, Re, Im,
  Add, Sub, Mul, Div, Pow,
};

const char* op_name(Op op);

/// Immutable expression tree with shared subtrees. Cheap to copy.
class Expr {
public:
  struct Node;

  Expr();  // the literal 0

  static Expr literal(Complex value);
  /// Zero-based variable index: variable(0) is z1.
  static Expr variable(int index);
  static Expr unary(Op op, Expr arg);
  static Expr binary(Op op, Expr lhs, Expr rhs);
  static Expr power(Expr base, int exponent);

  Op op() const noexcept;
  Complex literal_value() const;
  int variable_index() const;
  int exponent() const;
  Expr child(std::size_t i) const;
  std::size_t arity_of_node() const noexcept;

  /// No abs/re/im anywhere in the tree.
  bool holomorphic() const noexcept;
  /// One plus the largest variable index used, 0 for constants.
  int variables_used() const noexcept;
  /// Node count of the tree (shared subtrees counted once per use).
  std::size_t size() const noexcept;
  bool is_literal(Complex v) const noexcept;

  const Node* node() const noexcept { return node_.get(); }

  /// Structural equality; literals compare bitwise.
  friend bool operator==(const Expr& a, const Expr& b);

private:
  explicit Expr(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

Expr operator+(const Expr& a, const Expr& b);
Expr operator-(const Expr& a, const Expr& b);
Expr operator*(const Expr& a, const Expr& b);
Expr operator/(const Expr& a, const Expr& b);
Expr operator-(const Expr& a);

/// Parses `text` over `arity` variables. Literal-only subtrees are folded.
/// Throws ParseError (with byte position) on syntax errors, variables beyond
/// the arity and non-integer exponents.
Expr parse_expression(std::string_view text, int arity);

/// Text that parses back to an identical tree.
std::string unparse(const Expr& e);

/// Exact d/dz_j (zero-based j). Throws DomainError for non-holomorphic input.
Expr symbolic_partial(const Expr& e, int j);

/// Compiled form of one or more trees: a flat instruction list over the
/// shared DAG, so common subexpressions (e.g. exp(z1*z2) inside every
/// derivative of exp(z1*z2)) are evaluated once per point.
class Program {
public:
  Program() = default;
  explicit Program(std::span<const Expr> outputs, int arity);
  Program(const Expr& output, int arity) : Program(std::span<const Expr>(&output, 1), arity) {}

  int arity() const noexcept { return arity_; }
  std::size_t output_count() const noexcept { return outputs_.size(); }
  std::size_t instruction_count() const noexcept { return code_.size(); }

  /// Evaluates every output at z. Throws NumericalError on division by zero.
  std::vector<Scaled> run(std::span<const Complex> z) const;
  Scaled run_single(std::span<const Complex> z) const;

private:
  struct Instr {
    Op op;
    int a = -1;
    int b = -1;
    int aux = 0;
    Complex literal{};
  };
  int arity_ = 0;
  std::vector<Instr> code_;
  std::vector<int> outputs_;
};

/// Plain complex evaluation (may return infinities when |F| exceeds double
/// range). Throws DomainError on arity mismatch, NumericalError on division
/// by zero.
Complex evaluate(const Expr& e, const CPoint& z);

}  // namespace lindex
