#pragma once

// Shipped test subjects: entire functions, weights, and (F, L) pairs whose
// joint index is known in closed form.

#include <string>
#include <vector>

#include "lindex/function.hpp"

namespace lindex::catalog {

struct FunctionEntry {
  std::string name;
  std::string text;
  int arity = 1;
};

struct WeightEntry {
  std::string name;
  std::vector<std::string> components;
  int arity = 1;
};

struct KnownPair {
  std::string name;
  std::string function;
  std::vector<std::string> weights;
  int arity = 1;
  int N = 0;
};

const std::vector<FunctionEntry>& functions();
const std::vector<WeightEntry>& weights();
const std::vector<KnownPair>& known_pairs();

const FunctionEntry& function(const std::string& name);
const WeightEntry& weight(const std::string& name);

EntireFunction make_function(const FunctionEntry& e);
WeightVector make_weight(const WeightEntry& e);

}  // namespace lindex::catalog
