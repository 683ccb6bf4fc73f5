#include "lindex/catalog.hpp"

#include "lindex/error.hpp"

namespace lindex::catalog {

const std::vector<FunctionEntry>& functions() {
  static const std::vector<FunctionEntry> list{
      {"exp_z1z2", "exp(z1*z2)", 2},
      {"exp", "exp(z)", 1},
      {"sin", "sin(z)", 1},
      {"cos", "cos(z)", 1},
      {"cubic", "z^3", 1},
      {"square", "z^2", 1},
      {"poly2", "z1^2*z2 + 3*z2 - 1", 2},
      {"exp_z2", "exp(z^2)", 1},
  };
  return list;
}

const std::vector<WeightEntry>& weights() {
  static const std::vector<WeightEntry> list{
      {"one", {"1"}, 1},
      {"one2", {"1", "1"}, 2},
      {"linear", {"1+abs(z)"}, 1},
      {"swap", {"abs(z2)+1", "abs(z1)+1"}, 2},
      {"exp_abs", {"abs(exp(z))+1"}, 1},
      {"double_exp", {"exp(exp(abs(z)))"}, 1},
      {"decaying", {"1/(1+abs(z)^2)"}, 1},
      {"decreasing", {"1+1/(1+abs(z))"}, 1},
  };
  return list;
}

const std::vector<KnownPair>& known_pairs() {
  static const std::vector<KnownPair> list{
      {"exp_z1z2/swap", "exp(z1*z2)", {"abs(z2)+1", "abs(z1)+1"}, 2, 0},
      {"exp/one", "exp(z)", {"1"}, 1, 0},
      {"sin/one", "sin(z)", {"1"}, 1, 1},
      {"cos/one", "cos(z)", {"1"}, 1, 1},
      {"cubic/one", "z^3", {"1"}, 1, 3},
  };
  return list;
}

const FunctionEntry& function(const std::string& name) {
  for (const auto& e : functions()) {
    if (e.name == name) return e;
  }
  throw DomainError("no catalog function named " + name);
}

const WeightEntry& weight(const std::string& name) {
  for (const auto& e : weights()) {
    if (e.name == name) return e;
  }
  throw DomainError("no catalog weight named " + name);
}

EntireFunction make_function(const FunctionEntry& e) { return EntireFunction::parse(e.text, e.arity); }

WeightVector make_weight(const WeightEntry& e) { return WeightVector::parse(e.components, e.arity, e.name); }

}  // namespace lindex::catalog
