#include "lindex/expr.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <unordered_map>

#include "lindex/error.hpp"

namespace lindex {

struct Expr::Node {
  Op op = Op::Literal;
  Complex literal{};
  int index = 0;  // variable index or integer exponent
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
  bool holomorphic = true;
  int vars = 0;
  std::size_t size = 1;
};

namespace {

using NodePtr = std::shared_ptr<const Expr::Node>;

bool finite(Complex c) { return std::isfinite(c.real()) && std::isfinite(c.imag()); }

bool is_unary(Op op) {
  switch (op) {
    case Op::Neg: case Op::Exp: case Op::Sin: case Op::Cos:
    case Op::Abs: case Op::Re: case Op::Im:
      return true;
    default:
      return false;
  }
}

bool is_binary(Op op) {
  return op == Op::Add || op == Op::Sub || op == Op::Mul || op == Op::Div;
}

Complex fold_unary(Op op, Complex v) {
  switch (op) {
    case Op::Neg: return -v;
    case Op::Exp: return std::exp(v);
    case Op::Sin: return std::sin(v);
    case Op::Cos: return std::cos(v);
    case Op::Abs: return std::abs(v);
    case Op::Re: return v.real();
    case Op::Im: return v.imag();
    default: return v;
  }
}

}  // namespace

const char* op_name(Op op) {
  switch (op) {
    case Op::Literal: return "literal";
    case Op::Variable: return "variable";
    case Op::Neg: return "neg";
    case Op::Exp: return "exp";
    case Op::Sin: return "sin";
    case Op::Cos: return "cos";
    case Op::Abs: return "abs";
    case Op::Re: return "re";
    case Op::Im: return "im";
    case Op::Add: return "+";
    case Op::Sub: return "-";
    case Op::Mul: return "*";
    case Op::Div: return "/";
    case Op::Pow: return "^";
  }
  return "?";
}

Expr::Expr() : Expr(literal(Complex{})) {}

Expr Expr::literal(Complex value) {
  auto n = std::make_shared<Node>();
  n->op = Op::Literal;
  n->literal = value;
  return Expr(std::move(n));
}

Expr Expr::variable(int index) {
  if (index < 0) throw DomainError("variable index must be nonnegative");
  auto n = std::make_shared<Node>();
  n->op = Op::Variable;
  n->index = index;
  n->vars = index + 1;
  return Expr(std::move(n));
}

Expr Expr::unary(Op op, Expr arg) {
  if (!is_unary(op)) throw DomainError("not a unary operator");
  if (arg.op() == Op::Literal) {
    const Complex v = fold_unary(op, arg.literal_value());
    if (finite(v)) return literal(v);
  }
  if (op == Op::Neg && arg.op() == Op::Neg) return arg.child(0);
  auto n = std::make_shared<Node>();
  n->op = op;
  n->holomorphic = arg.holomorphic() && op != Op::Abs && op != Op::Re && op != Op::Im;
  n->vars = arg.variables_used();
  n->size = 1 + arg.size();
  n->a = arg.node_;
  return Expr(std::move(n));
}

Expr Expr::binary(Op op, Expr lhs, Expr rhs) {
  if (!is_binary(op)) throw DomainError("not a binary operator");
  const bool lit_l = lhs.op() == Op::Literal;
  const bool lit_r = rhs.op() == Op::Literal;
  if (lit_l && lit_r) {
    const Complex x = lhs.literal_value();
    const Complex y = rhs.literal_value();
    Complex v;
    bool fold = true;
    switch (op) {
      case Op::Add: v = x + y; break;
      case Op::Sub: v = x - y; break;
      case Op::Mul: v = x * y; break;
      default:
        fold = y != Complex{};
        if (fold) v = x / y;
        break;
    }
    if (fold && finite(v)) return literal(v);
  }
  switch (op) {
    case Op::Add:
      if (lhs.is_literal(0)) return rhs;
      if (rhs.is_literal(0)) return lhs;
      break;
    case Op::Sub:
      if (rhs.is_literal(0)) return lhs;
      if (lhs.is_literal(0)) return unary(Op::Neg, rhs);
      break;
    case Op::Mul:
      if (lhs.is_literal(0) || rhs.is_literal(0)) return literal(0);
      if (lhs.is_literal(1)) return rhs;
      if (rhs.is_literal(1)) return lhs;
      if (lhs.is_literal(-1)) return unary(Op::Neg, rhs);
      if (rhs.is_literal(-1)) return unary(Op::Neg, lhs);
      if (lit_r && !lit_l) return binary(Op::Mul, rhs, lhs);
      if (lit_l && rhs.op() == Op::Mul && rhs.child(0).op() == Op::Literal) {
        return binary(Op::Mul, literal(lhs.literal_value() * rhs.child(0).literal_value()),
                      rhs.child(1));
      }
      break;
    case Op::Div:
      if (rhs.is_literal(1)) return lhs;
      break;
    default:
      break;
  }
  auto n = std::make_shared<Node>();
  n->op = op;
  n->holomorphic = lhs.holomorphic() && rhs.holomorphic();
  n->vars = std::max(lhs.variables_used(), rhs.variables_used());
  n->size = 1 + lhs.size() + rhs.size();
  n->a = lhs.node_;
  n->b = rhs.node_;
  return Expr(std::move(n));
}

Expr Expr::power(Expr base, int exponent) {
  if (exponent == 0) return literal(1);
  if (exponent == 1) return base;
  if (base.op() == Op::Literal) {
    const Complex v = scaled_pow(Scaled(base.literal_value()), exponent).value();
    if (finite(v)) return literal(v);
  }
  auto n = std::make_shared<Node>();
  n->op = Op::Pow;
  n->index = exponent;
  n->holomorphic = base.holomorphic();
  n->vars = base.variables_used();
  n->size = 1 + base.size();
  n->a = base.node_;
  return Expr(std::move(n));
}

Op Expr::op() const noexcept { return node_->op; }

Complex Expr::literal_value() const {
  if (node_->op != Op::Literal) throw DomainError("not a literal");
  return node_->literal;
}

int Expr::variable_index() const {
  if (node_->op != Op::Variable) throw DomainError("not a variable");
  return node_->index;
}

int Expr::exponent() const {
  if (node_->op != Op::Pow) throw DomainError("not a power");
  return node_->index;
}

Expr Expr::child(std::size_t i) const {
  const NodePtr& c = i == 0 ? node_->a : node_->b;
  if (!c) throw DomainError("child index out of range");
  return Expr(c);
}

std::size_t Expr::arity_of_node() const noexcept {
  return node_->b ? 2 : (node_->a ? 1 : 0);
}

bool Expr::holomorphic() const noexcept { return node_->holomorphic; }

int Expr::variables_used() const noexcept { return node_->vars; }

std::size_t Expr::size() const noexcept { return node_->size; }

bool Expr::is_literal(Complex v) const noexcept {
  return node_->op == Op::Literal && node_->literal == v;
}

bool operator==(const Expr& x, const Expr& y) {
  const Expr::Node* a = x.node();
  const Expr::Node* b = y.node();
  if (a == b) return true;
  if (a->op != b->op || a->index != b->index) return false;
  if (a->op == Op::Literal) return a->literal == b->literal;
  if (x.arity_of_node() != y.arity_of_node()) return false;
  for (std::size_t i = 0; i < x.arity_of_node(); ++i) {
    if (!(x.child(i) == y.child(i))) return false;
  }
  return true;
}

Expr operator+(const Expr& a, const Expr& b) { return Expr::binary(Op::Add, a, b); }
Expr operator-(const Expr& a, const Expr& b) { return Expr::binary(Op::Sub, a, b); }
Expr operator*(const Expr& a, const Expr& b) { return Expr::binary(Op::Mul, a, b); }
Expr operator/(const Expr& a, const Expr& b) { return Expr::binary(Op::Div, a, b); }
Expr operator-(const Expr& a) { return Expr::unary(Op::Neg, a); }

// ---------------------------------------------------------------- parsing

namespace {

class Parser {
public:
  Parser(std::string_view text, int arity) : s_(text), arity_(arity) {}

  Expr parse() {
    skip();
    if (pos_ >= s_.size()) fail("empty expression");
    Expr e = expr();
    skip();
    if (pos_ < s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!accept(c)) fail(std::string("expected '") + c + "'");
  }

  bool alnum_at(std::size_t p) const {
    return p < s_.size() && std::isalnum(static_cast<unsigned char>(s_[p]));
  }

  Expr expr() {
    Expr e = term();
    for (;;) {
      if (accept('+')) e = e + term();
      else if (accept('-')) e = e - term();
      else return e;
    }
  }

  Expr term() {
    Expr e = unary();
    for (;;) {
      if (accept('*')) e = e * unary();
      else if (accept('/')) e = e / unary();
      else return e;
    }
  }

  Expr unary() {
    if (accept('-')) return -unary();
    return power();
  }

  Expr power() {
    Expr base = primary();
    if (!accept('^')) return base;
    const int k = integer_exponent();
    skip();
    if (pos_ < s_.size() && s_[pos_] == '^') fail("chained exponent; use parentheses");
    return Expr::power(base, k);
  }

  int integer_exponent() {
    skip();
    const bool paren = accept('(');
    const bool neg = accept('-');
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == start) {
      pos_ = start;
      fail("exponent must be an integer literal");
    }
    if (pos_ < s_.size() && (s_[pos_] == '.' || s_[pos_] == 'e' || s_[pos_] == 'E' ||
                             s_[pos_] == 'i')) {
      fail("non-integer exponent");
    }
    int k = 0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, k);
    if (ec != std::errc{} || k > 4096) {
      pos_ = start;
      fail("exponent out of range");
    }
    (void)ptr;
    if (paren) expect(')');
    return neg ? -k : k;
  }

  Expr number() {
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ < s_.size() && s_[pos_] == '.') {
      ++pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    if (pos_ < s_.size() && (s_[pos_] == 'e' || s_[pos_] == 'E')) {
      std::size_t p = pos_ + 1;
      if (p < s_.size() && (s_[p] == '+' || s_[p] == '-')) ++p;
      if (p < s_.size() && std::isdigit(static_cast<unsigned char>(s_[p]))) {
        pos_ = p;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      }
    }
    double v = 0.0;
    const auto [ptr, ec] = std::from_chars(s_.data() + start, s_.data() + pos_, v);
    if (ec != std::errc{} || ptr != s_.data() + pos_ || !std::isfinite(v)) {
      pos_ = start;
      fail("malformed number");
    }
    if (pos_ < s_.size() && s_[pos_] == 'i' && !alnum_at(pos_ + 1)) {
      ++pos_;
      return Expr::literal({0.0, v});
    }
    if (alnum_at(pos_)) fail("unexpected character after number");
    return Expr::literal({v, 0.0});
  }

  Expr primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of expression");
    const char c = s_[pos_];
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') return number();
    if (accept('(')) {
      Expr e = expr();
      expect(')');
      return e;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalpha(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      const std::string_view word = s_.substr(start, pos_ - start);
      if (word == "i") return Expr::literal({0.0, 1.0});
      if (word == "z") return variable(start);
      static constexpr std::pair<std::string_view, Op> kFuncs[] = {
          {"exp", Op::Exp}, {"sin", Op::Sin}, {"cos", Op::Cos},
          {"abs", Op::Abs}, {"re", Op::Re},   {"im", Op::Im}};
      for (const auto& [name, op] : kFuncs) {
        if (word == name) {
          expect('(');
          Expr arg = expr();
          expect(')');
          return Expr::unary(op, arg);
        }
      }
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail(std::string("unexpected '") + c + "'");
  }

  Expr variable(std::size_t start) {
    const std::size_t digits = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (pos_ == digits) {
      if (arity_ == 1) return Expr::variable(0);
      pos_ = start;
      fail("bare 'z' is only allowed for one variable; write z1..z" + std::to_string(arity_));
    }
    if (alnum_at(pos_)) fail("malformed variable name");
    int idx = 0;
    std::from_chars(s_.data() + digits, s_.data() + pos_, idx);
    if (idx < 1 || idx > arity_) {
      pos_ = start;
      fail("variable z" + std::to_string(idx) + " out of range for " +
           std::to_string(arity_) + " variable(s)");
    }
    return Expr::variable(idx - 1);
  }

  std::string_view s_;
  int arity_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------- printing

constexpr int kPrecAdd = 1;
constexpr int kPrecMul = 2;
constexpr int kPrecNeg = 3;
constexpr int kPrecPow = 4;
constexpr int kPrecAtom = 5;

std::string format_real(double v) {
  char buf[64];
  const auto [end, ec] = std::to_chars(buf, buf + sizeof buf, v);
  (void)ec;
  return std::string(buf, end);
}

std::string format_literal(Complex v) {
  const double re = v.real();
  const double im = v.imag();
  if (im == 0.0) {
    return re < 0 ? "(" + format_real(re) + ")" : format_real(re);
  }
  if (re == 0.0) {
    return im < 0 ? "(-" + format_real(-im) + "i)" : format_real(im) + "i";
  }
  return "(" + format_real(re) + (im < 0 ? "-" : "+") + format_real(std::abs(im)) + "i)";
}

int precedence(const Expr& e) {
  switch (e.op()) {
    case Op::Add: case Op::Sub: return kPrecAdd;
    case Op::Mul: case Op::Div: return kPrecMul;
    case Op::Neg: return kPrecNeg;
    case Op::Pow: return kPrecPow;
    default: return kPrecAtom;
  }
}

void print(const Expr& e, std::string& out);

void print_child(const Expr& c, int min_prec, std::string& out) {
  if (precedence(c) < min_prec) {
    out += '(';
    print(c, out);
    out += ')';
  } else {
    print(c, out);
  }
}

void print(const Expr& e, std::string& out) {
  switch (e.op()) {
    case Op::Literal:
      out += format_literal(e.literal_value());
      return;
    case Op::Variable:
      out += 'z';
      out += std::to_string(e.variable_index() + 1);
      return;
    case Op::Neg:
      out += '-';
      print_child(e.child(0), kPrecNeg, out);
      return;
    case Op::Exp: case Op::Sin: case Op::Cos: case Op::Abs: case Op::Re: case Op::Im:
      out += op_name(e.op());
      out += '(';
      print(e.child(0), out);
      out += ')';
      return;
    case Op::Add: case Op::Sub: case Op::Mul: case Op::Div: {
      const int p = precedence(e);
      print_child(e.child(0), p, out);
      out += ' ';
      out += op_name(e.op());
      out += ' ';
      const Expr rhs = e.child(1);
      // Right operands of equal precedence and negations are bracketed.
      print_child(rhs, rhs.op() == Op::Neg ? kPrecAtom : p + 1, out);
      return;
    }
    case Op::Pow:
      print_child(e.child(0), kPrecAtom, out);
      out += '^';
      out += e.exponent() < 0 ? "(" + std::to_string(e.exponent()) + ")"
                              : std::to_string(e.exponent());
      return;
  }
}

// ---------------------------------------------------------- differentiation

class Differentiator {
public:
  explicit Differentiator(int j) : j_(j) {}

  Expr d(const Expr& e) {
    if (auto it = memo_.find(e.node()); it != memo_.end()) return it->second;
    Expr r = compute(e);
    memo_.emplace(e.node(), r);
    return r;
  }

private:
  Expr compute(const Expr& e) {
    switch (e.op()) {
      case Op::Literal:
        return Expr::literal(0);
      case Op::Variable:
        return Expr::literal(e.variable_index() == j_ ? 1 : 0);
      case Op::Neg:
        return -d(e.child(0));
      case Op::Add:
        return d(e.child(0)) + d(e.child(1));
      case Op::Sub:
        return d(e.child(0)) - d(e.child(1));
      case Op::Mul: {
        const Expr a = e.child(0);
        const Expr b = e.child(1);
        return d(a) * b + a * d(b);
      }
      case Op::Div: {
        const Expr a = e.child(0);
        const Expr b = e.child(1);
        return (d(a) * b - a * d(b)) / Expr::power(b, 2);
      }
      case Op::Pow: {
        const Expr u = e.child(0);
        const int k = e.exponent();
        return Expr::literal(static_cast<double>(k)) * Expr::power(u, k - 1) * d(u);
      }
      case Op::Exp:
        return e * d(e.child(0));
      case Op::Sin:
        return Expr::unary(Op::Cos, e.child(0)) * d(e.child(0));
      case Op::Cos:
        return -(Expr::unary(Op::Sin, e.child(0)) * d(e.child(0)));
      case Op::Abs: case Op::Re: case Op::Im:
        break;
    }
    throw DomainError(std::string("cannot differentiate non-holomorphic node '") +
                      op_name(e.op()) + "'");
  }

  int j_;
  std::unordered_map<const Expr::Node*, Expr> memo_;
};

}  // namespace

Expr parse_expression(std::string_view text, int arity) {
  if (arity < 1 || arity > 9) throw DomainError("arity must be between 1 and 9");
  return Parser(text, arity).parse();
}

std::string unparse(const Expr& e) {
  std::string out;
  print(e, out);
  return out;
}

Expr symbolic_partial(const Expr& e, int j) {
  if (j < 0) throw DomainError("variable index must be nonnegative");
  if (!e.holomorphic()) {
    throw DomainError("symbolic_partial requires a holomorphic expression (no abs/re/im)");
  }
  return Differentiator(j).d(e);
}

Complex evaluate(const Expr& e, const CPoint& z) {
  if (static_cast<int>(z.size()) < e.variables_used()) {
    throw DomainError("evaluate: point has fewer coordinates than the expression uses");
  }
  return Program(e, static_cast<int>(z.size())).run_single(z.coords()).value();
}

}  // namespace lindex
