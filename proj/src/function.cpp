#include "lindex/function.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "lindex/error.hpp"
#include "lindex/numeric.hpp"
#include "lindex/parallel.hpp"

namespace lindex {

namespace {

std::string shortest(double x) {
  char buf[32];
  auto [end, ec] = std::to_chars(buf, buf + sizeof buf, x);
  (void)ec;
  return std::string(buf, end);
}

constexpr double kEps = std::numeric_limits<double>::epsilon();

}  // namespace

std::string format_point(const CPoint& z) {
  std::string s = "(";
  for (std::size_t j = 0; j < z.size(); ++j) {
    if (j) s += ", ";
    const Complex c = z[j];
    s += shortest(c.real());
    if (c.imag() != 0.0) {
      s += c.imag() < 0 ? "-" : "+";
      s += shortest(std::abs(c.imag()));
      s += "i";
    }
  }
  return s + ")";
}

// ---- EntireFunction ---------------------------------------------------------

EntireFunction::EntireFunction(Expr ast, int arity, std::string text)
    : ast_(std::move(ast)), arity_(arity), text_(std::move(text)) {
  if (arity_ < 1 || arity_ > 9) throw DomainError("arity must be between 1 and 9");
  if (!ast_.holomorphic()) {
    throw DomainError("an entire function may not use abs, re or im");
  }
  if (ast_.variables_used() > arity_) throw DomainError("function uses more variables than arity");
  if (text_.empty()) text_ = unparse(ast_);
  program_ = std::make_shared<const Program>(ast_, arity_);
}

EntireFunction EntireFunction::parse(std::string_view text, int arity) {
  return EntireFunction(parse_expression(text, arity), arity, std::string(text));
}

// ---- weights ----------------------------------------------------------------

WeightComponent::WeightComponent(Expr ast, int arity, std::string text)
    : ast_(std::move(ast)), arity_(arity), text_(std::move(text)) {
  if (arity_ < 1 || arity_ > 9) throw DomainError("arity must be between 1 and 9");
  if (ast_.variables_used() > arity_) throw DomainError("weight uses more variables than arity");
  if (text_.empty()) text_ = unparse(ast_);
  program_ = std::make_shared<const Program>(ast_, arity_);
}

WeightComponent WeightComponent::parse(std::string_view text, int arity) {
  return WeightComponent(parse_expression(text, arity), arity, std::string(text));
}

namespace {

double checked_log_weight(const Scaled& s, const std::string& text, const CPoint& z) {
  const double re = s.mantissa.real();
  const double im = s.mantissa.imag();
  if (!(re > 0.0) || std::abs(im) > 1e-12 * re) {
    std::ostringstream msg;
    msg << "weight " << text << " is not real and positive at z = " << format_point(z);
    throw NumericalError(msg.str());
  }
  return std::log(re) + static_cast<double>(s.exponent) * std::numbers::ln2;
}

}  // namespace

double WeightComponent::log_value(const CPoint& z) const {
  return checked_log_weight(program_->run_single(z.coords()), text_, z);
}

double WeightComponent::value(const CPoint& z) const {
  const Scaled s = program_->run_single(z.coords());
  const double lv = checked_log_weight(s, text_, z);
  const double v = s.exponent == 0 ? s.mantissa.real() : std::exp(lv);
  if (!std::isfinite(v)) {
    throw NumericalError("weight " + text_ + " leaves double range at z = " + format_point(z));
  }
  return v;
}

WeightVector::WeightVector(std::vector<WeightComponent> components, std::string label)
    : components_(std::move(components)), label_(std::move(label)) {
  if (components_.empty()) throw DomainError("weight vector is empty");
  const int n = static_cast<int>(components_.size());
  for (const auto& c : components_) {
    if (c.arity() != n) throw DomainError("weight vector needs one component per variable");
  }
}

WeightVector WeightVector::parse(std::span<const std::string> texts, int arity, std::string label) {
  if (static_cast<int>(texts.size()) != arity) {
    throw DomainError("expected " + std::to_string(arity) + " weight components, got " +
                      std::to_string(texts.size()));
  }
  std::vector<WeightComponent> c;
  c.reserve(texts.size());
  for (const auto& t : texts) c.push_back(WeightComponent::parse(t, arity));
  return WeightVector(std::move(c), std::move(label));
}

WeightVector WeightVector::constant(int arity, double value) {
  if (!(value > 0.0) || !std::isfinite(value)) throw DomainError("constant weight must be positive");
  std::vector<WeightComponent> c;
  for (int j = 0; j < arity; ++j) c.emplace_back(Expr::literal(value), arity);
  return WeightVector(std::move(c), "constant " + shortest(value));
}

std::vector<double> WeightVector::values(const CPoint& z) const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& c : components_) out.push_back(c.value(z));
  return out;
}

std::vector<double> WeightVector::log_values(const CPoint& z) const {
  std::vector<double> out;
  out.reserve(size());
  for (const auto& c : components_) out.push_back(c.log_value(z));
  return out;
}

WeightVector WeightVector::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("weight scale factor must be positive");
  std::vector<WeightComponent> c;
  for (const auto& w : components_) {
    c.emplace_back(Expr::literal(factor) * w.ast(), w.arity());
  }
  return WeightVector(std::move(c), shortest(factor) + "*" + label_);
}

// ---- symbolic derivatives ---------------------------------------------------

DerivativeSet::DerivativeSet(const EntireFunction& f, int max_norm)
    : max_norm_(max_norm) {
  if (max_norm < 0) throw DomainError("derivative order must be nonnegative");
  if (max_norm > kMaxFactorialNorm) {
    throw DomainError("derivative order above " + std::to_string(kMaxFactorialNorm) +
                      " exceeds the factorial guard");
  }
  const auto n = static_cast<std::size_t>(f.arity());
  indices_ = multi_indices_up_to(n, max_norm);
  std::map<MultiIndex, std::size_t> where;
  trees_.reserve(indices_.size());
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    const MultiIndex& k = indices_[i];
    where.emplace(k, i);
    if (k.norm() == 0) {
      trees_.push_back(f.ast());
      continue;
    }
    std::size_t j = 0;
    while (k[j] == 0) ++j;
    const Expr& parent = trees_[where.at(k.minus_basis(j))];
    trees_.push_back(symbolic_partial(parent, static_cast<int>(j)));
  }
  program_ = Program(trees_, f.arity());
}

std::size_t DerivativeSet::position(const MultiIndex& k) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), k,
                             [](const MultiIndex& a, const MultiIndex& b) {
                               if (a.norm() != b.norm()) return a.norm() < b.norm();
                               return a > b;
                             });
  if (it == indices_.end() || *it != k) {
    throw DomainError("multi-index " + k.to_string() + " outside the derivative set");
  }
  return static_cast<std::size_t>(it - indices_.begin());
}

std::vector<double> log_normalized_derivatives(const DerivativeSet& set, const WeightVector& L,
                                               const CPoint& z) {
  const std::vector<double> logl = L.log_values(z);
  const std::vector<Scaled> d = set.evaluate(z);
  std::vector<double> out(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const MultiIndex& k = set.indices()[i];
    double denom = std::log(static_cast<double>(k.factorial()));
    for (std::size_t j = 0; j < k.size(); ++j) denom += k[j] * logl[j];
    out[i] = d[i].log_abs() - denom;
  }
  return out;
}

double normalized_derivative(const EntireFunction& f, const WeightVector& L, const CPoint& z,
                             const MultiIndex& k, DerivativeMethod method) {
  if (static_cast<int>(k.size()) != f.arity() || L.arity() != f.arity() ||
      static_cast<int>(z.size()) != f.arity()) {
    throw DomainError("normalized derivative: dimension mismatch");
  }
  const std::vector<double> logl = L.log_values(z);
  double log_denom = std::log(static_cast<double>(k.factorial()));
  for (std::size_t j = 0; j < k.size(); ++j) log_denom += k[j] * logl[j];
  double log_num = 0.0;
  if (method == DerivativeMethod::Symbolic) {
    Expr t = f.ast();
    for (std::size_t j = 0; j < k.size(); ++j) {
      for (int r = 0; r < k[j]; ++r) t = symbolic_partial(t, static_cast<int>(j));
    }
    log_num = Program(t, f.arity()).run_single(z.coords()).log_abs();
  } else {
    log_num = std::log(std::abs(derivative_cauchy(f, z, k, default_cauchy_radius(L, z)).value));
  }
  return std::exp(log_num - log_denom);
}

// ---- Cauchy quadrature ------------------------------------------------------

std::vector<int> default_cauchy_resolution(const MultiIndex& k) {
  std::vector<int> m;
  m.reserve(k.size());
  for (std::size_t j = 0; j < k.size(); ++j) {
    int p = 64;
    while (p < 4 * (k[j] + 1)) p *= 2;
    m.push_back(p);
  }
  return m;
}

PolyRadius default_cauchy_radius(const WeightVector& L, const CPoint& z0) {
  std::vector<double> r;
  for (double l : L.values(z0)) r.push_back(std::min(1.0, 1.0 / l));
  return PolyRadius(std::move(r));
}

namespace {

std::size_t checked_product(std::span<const int> dims, std::size_t cap) {
  std::size_t total = 1;
  for (int m : dims) {
    if (m < 2) throw DomainError("angular resolution must be at least 2");
    if (total > cap / static_cast<std::size_t>(m)) {
      throw DomainError("Cauchy grid exceeds the sample cap of " + std::to_string(cap));
    }
    total *= static_cast<std::size_t>(m);
  }
  return total;
}

// F on the product grid z0_j + rho_j e^{2 pi i t_j / m_j}, row-major.
std::vector<Complex> skeleton_values(const EntireFunction& f, const CPoint& z0,
                                     const PolyRadius& rho, std::span<const int> dims,
                                     std::size_t cap) {
  const std::size_t n = dims.size();
  const std::size_t total = checked_product(dims, cap);
  return parallel_map(total, [&](std::size_t flat) {
    CPoint z(n);
    std::size_t rest = flat;
    for (std::size_t j = n; j-- > 0;) {
      const auto m = static_cast<std::size_t>(dims[j]);
      const std::size_t t = rest % m;
      rest /= m;
      z[j] = z0[j] + rho[j] * unit_root(static_cast<long long>(t), dims[j]);
    }
    const Complex v = f(z);
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) {
      throw NumericalError("function overflows on the Cauchy skeleton at z = " + format_point(z));
    }
    return v;
  });
}

void check_cauchy_inputs(const EntireFunction& f, const CPoint& z0, const MultiIndex& k,
                         const PolyRadius& rho) {
  const auto n = static_cast<std::size_t>(f.arity());
  if (z0.size() != n || k.size() != n || rho.size() != n) {
    throw DomainError("Cauchy derivative: dimension mismatch");
  }
  if (!rho.all_positive()) throw DomainError("Cauchy radius must be positive on every axis");
  (void)k.factorial();
}

struct CauchyGrid {
  std::vector<int> fine;
  std::vector<Complex> values;
};

// Evaluates on the doubled grid when it fits; its even-index subgrid is the
// coarse grid, so both sums come from one set of samples. Otherwise the
// requested grid is the fine one and its half is the comparison.
CauchyGrid cauchy_grid(const EntireFunction& f, const CPoint& z0, const MultiIndex& k,
                       const PolyRadius& rho, std::vector<int> coarse, std::size_t cap) {
  const std::size_t n = coarse.size();
  std::vector<int> fine(n);
  bool doubled = true;
  {
    std::size_t total = 1;
    for (std::size_t j = 0; j < n; ++j) {
      fine[j] = 2 * coarse[j];
      if (total > cap / static_cast<std::size_t>(fine[j])) doubled = false;
      else total *= static_cast<std::size_t>(fine[j]);
    }
  }
  if (!doubled) {
    fine = coarse;
    for (std::size_t j = 0; j < n; ++j) {
      if (coarse[j] % 2 != 0 || coarse[j] / 2 <= k[j]) {
        throw DomainError("Cauchy grid too small to estimate convergence within the sample cap");
      }
    }
  }
  std::vector<Complex> values = skeleton_values(f, z0, rho, fine, cap);
  return {std::move(fine), std::move(values)};
}

CauchyResult cauchy_reduce(const CauchyGrid& g, const CPoint& z0, const MultiIndex& k,
                           const PolyRadius& rho) {
  const std::size_t n = g.fine.size();
  const std::vector<int>& fine = g.fine;
  std::vector<Complex> all_terms;
  std::vector<Complex> even_terms;
  all_terms.reserve(g.values.size());
  std::vector<std::vector<Complex>> roots(n);
  for (std::size_t j = 0; j < n; ++j) {
    roots[j].resize(static_cast<std::size_t>(fine[j]));
    for (int tj = 0; tj < fine[j]; ++tj) {
      roots[j][static_cast<std::size_t>(tj)] = unit_root(-static_cast<long long>(k[j]) * tj, fine[j]);
    }
  }
  double max_abs = 0.0;
  std::vector<std::size_t> t(n, 0);
  for (std::size_t flat = 0; flat < g.values.size(); ++flat) {
    Complex w = g.values[flat];
    max_abs = std::max(max_abs, std::abs(w));
    bool even = true;
    for (std::size_t j = 0; j < n; ++j) {
      w *= roots[j][t[j]];
      even = even && (t[j] % 2 == 0);
    }
    all_terms.push_back(w);
    if (even) even_terms.push_back(w);
    for (std::size_t j = n; j-- > 0;) {
      if (++t[j] < static_cast<std::size_t>(fine[j])) break;
      t[j] = 0;
    }
  }
  double scale = static_cast<double>(k.factorial());
  for (std::size_t j = 0; j < n; ++j) scale /= std::pow(rho[j], k[j]);
  const Complex fine_value = pairwise_sum(all_terms) * (scale / static_cast<double>(all_terms.size()));
  const Complex coarse_value =
      pairwise_sum(even_terms) * (scale / static_cast<double>(even_terms.size()));
  const double diff = std::abs(fine_value - coarse_value);
  const double floor = 1e3 * kEps * scale * max_abs;
  const double tol = 1e-8 * (1.0 + std::abs(fine_value)) + floor;
  if (!(diff <= tol)) {
    std::ostringstream msg;
    msg << "Cauchy quadrature for K = " << k.to_string() << " at z0 = " << format_point(z0)
        << " did not converge: refinement changed the value by " << diff;
    throw NumericalError(msg.str());
  }
  return {fine_value, diff + floor, fine};
}

CauchyResult cauchy_with(const EntireFunction& f, const CPoint& z0, const MultiIndex& k,
                         const PolyRadius& rho, std::vector<int> coarse, std::size_t cap) {
  return cauchy_reduce(cauchy_grid(f, z0, k, rho, std::move(coarse), cap), z0, k, rho);
}

}  // namespace

CauchyResult derivative_cauchy(const EntireFunction& f, const CPoint& z0, const MultiIndex& k,
                               const PolyRadius& rho, const GridSpec& grid) {
  grid.validate();
  check_cauchy_inputs(f, z0, k, rho);
  if (grid.angular_resolution < 2 * k.max_entry() + 8) {
    throw DomainError("angular resolution " + std::to_string(grid.angular_resolution) +
                      " is below 2 max(K) + 8 for K = " + k.to_string());
  }
  return cauchy_with(f, z0, k, rho, std::vector<int>(k.size(), grid.angular_resolution),
                     grid.sample_cap);
}

CauchyResult derivative_cauchy(const EntireFunction& f, const CPoint& z0, const MultiIndex& k,
                               const PolyRadius& rho) {
  check_cauchy_inputs(f, z0, k, rho);
  return cauchy_with(f, z0, k, rho, default_cauchy_resolution(k), GridSpec{}.sample_cap);
}

std::vector<CauchyResult> derivative_cauchy(const EntireFunction& f, const CPoint& z0,
                                            std::span<const MultiIndex> ks, const PolyRadius& rho) {
  std::vector<CauchyResult> out(ks.size());
  // Orders sharing a default resolution share one skeleton evaluation.
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < ks.size(); ++i) {
    check_cauchy_inputs(f, z0, ks[i], rho);
    groups[default_cauchy_resolution(ks[i])].push_back(i);
  }
  const std::size_t cap = GridSpec{}.sample_cap;
  for (const auto& [coarse, members] : groups) {
    std::vector<int> top(ks[members.front()].size(), 0);
    for (std::size_t i : members) {
      for (std::size_t j = 0; j < top.size(); ++j) top[j] = std::max(top[j], ks[i][j]);
    }
    const CauchyGrid g = cauchy_grid(f, z0, MultiIndex(std::move(top)), rho, coarse, cap);
    for (std::size_t i : members) out[i] = cauchy_reduce(g, z0, ks[i], rho);
  }
  return out;
}

std::vector<Complex> cauchy_derivative_box(const EntireFunction& f, const CPoint& z0,
                                           const PolyRadius& rho, const MultiIndex& max_orders,
                                           std::span<const int> resolution,
                                           std::size_t sample_cap) {
  check_cauchy_inputs(f, z0, max_orders, rho);
  const std::size_t n = max_orders.size();
  if (resolution.size() != n) throw DomainError("one angular resolution per axis expected");
  for (std::size_t j = 0; j < n; ++j) {
    if (resolution[j] < 2 * max_orders[j] + 8) {
      throw DomainError("angular resolution below 2 k_j + 8 on axis " + std::to_string(j + 1));
    }
  }
  std::vector<Complex> data = skeleton_values(f, z0, rho, resolution, sample_cap);
  std::vector<std::size_t> dims(resolution.begin(), resolution.end());

  // Contract one axis at a time: T'[.., k, ..] = (1/m) sum_t T[.., t, ..] w^{-k t}.
  for (std::size_t axis = 0; axis < n; ++axis) {
    const std::size_t m = dims[axis];
    const auto kcount = static_cast<std::size_t>(max_orders[axis] + 1);
    std::size_t outer = 1;
    for (std::size_t j = 0; j < axis; ++j) outer *= dims[j];
    std::size_t inner = 1;
    for (std::size_t j = axis + 1; j < n; ++j) inner *= dims[j];
    std::vector<Complex> next(outer * kcount * inner);
    std::vector<Complex> terms(m);
    for (std::size_t o = 0; o < outer; ++o) {
      for (std::size_t kk = 0; kk < kcount; ++kk) {
        for (std::size_t in = 0; in < inner; ++in) {
          for (std::size_t t = 0; t < m; ++t) {
            terms[t] = data[(o * m + t) * inner + in] *
                       unit_root(-static_cast<long long>(kk * t), static_cast<long long>(m));
          }
          next[(o * kcount + kk) * inner + in] = pairwise_sum(terms) / static_cast<double>(m);
        }
      }
    }
    data = std::move(next);
    dims[axis] = kcount;
  }

  // Coefficients c_K to derivatives K! c_K / rho^K.
  std::vector<int> kk(n, 0);
  for (std::size_t flat = 0; flat < data.size(); ++flat) {
    double scale = 1.0;
    for (std::size_t j = 0; j < n; ++j) {
      scale *= static_cast<double>(factorial(kk[j])) / std::pow(rho[j], kk[j]);
    }
    data[flat] *= scale;
    for (std::size_t j = n; j-- > 0;) {
      if (++kk[j] <= max_orders[j]) break;
      kk[j] = 0;
    }
  }
  return data;
}

}  // namespace lindex
