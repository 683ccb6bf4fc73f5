#include <unordered_map>

#include "lindex/error.hpp"
#include "lindex/expr.hpp"

namespace lindex {

Program::Program(std::span<const Expr> outputs, int arity) : arity_(arity) {
  std::unordered_map<const Expr::Node*, int> slot;
  // Iterative post-order walk so deep derivative trees cannot overflow the
  // call stack.
  auto emit = [&](const Expr& root) -> int {
    struct Frame {
      Expr e;
      bool expanded;
    };
    std::vector<Frame> stack{{root, false}};
    while (!stack.empty()) {
      Frame f = stack.back();
      stack.pop_back();
      if (slot.count(f.e.node())) continue;
      const std::size_t nc = f.e.arity_of_node();
      if (!f.expanded && nc > 0) {
        stack.push_back({f.e, true});
        for (std::size_t i = nc; i-- > 0;) stack.push_back({f.e.child(i), false});
        continue;
      }
      Instr in{f.e.op()};
      switch (f.e.op()) {
        case Op::Literal:
          in.literal = f.e.literal_value();
          break;
        case Op::Variable:
          in.aux = f.e.variable_index();
          if (in.aux >= arity_) throw DomainError("expression uses more variables than arity");
          break;
        case Op::Pow:
          in.aux = f.e.exponent();
          in.a = slot.at(f.e.child(0).node());
          break;
        default:
          in.a = slot.at(f.e.child(0).node());
          if (nc == 2) in.b = slot.at(f.e.child(1).node());
          break;
      }
      slot.emplace(f.e.node(), static_cast<int>(code_.size()));
      code_.push_back(in);
    }
    return slot.at(root.node());
  };
  for (const Expr& e : outputs) outputs_.push_back(emit(e));
}

std::vector<Scaled> Program::run(std::span<const Complex> z) const {
  if (static_cast<int>(z.size()) != arity_) throw DomainError("evaluation: arity mismatch");
  std::vector<Scaled> reg(code_.size());
  for (std::size_t i = 0; i < code_.size(); ++i) {
    const Instr& in = code_[i];
    switch (in.op) {
      case Op::Literal: reg[i] = Scaled(in.literal); break;
      case Op::Variable: reg[i] = Scaled(z[static_cast<std::size_t>(in.aux)]); break;
      case Op::Neg: reg[i] = -reg[in.a]; break;
      case Op::Exp: reg[i] = scaled_exp(reg[in.a]); break;
      case Op::Sin: reg[i] = scaled_sin(reg[in.a]); break;
      case Op::Cos: reg[i] = scaled_cos(reg[in.a]); break;
      case Op::Abs: reg[i] = scaled_abs(reg[in.a]); break;
      case Op::Re: reg[i] = scaled_re(reg[in.a]); break;
      case Op::Im: reg[i] = scaled_im(reg[in.a]); break;
      case Op::Add: reg[i] = reg[in.a] + reg[in.b]; break;
      case Op::Sub: reg[i] = reg[in.a] - reg[in.b]; break;
      case Op::Mul: reg[i] = reg[in.a] * reg[in.b]; break;
      case Op::Div: reg[i] = reg[in.a] / reg[in.b]; break;
      case Op::Pow: reg[i] = scaled_pow(reg[in.a], in.aux); break;
    }
  }
  std::vector<Scaled> out;
  out.reserve(outputs_.size());
  for (int s : outputs_) out.push_back(reg[static_cast<std::size_t>(s)]);
  return out;
}

Scaled Program::run_single(std::span<const Complex> z) const {
  if (outputs_.size() != 1) throw DomainError("run_single on a multi-output program");
  return run(z).front();
}

}  // namespace lindex
