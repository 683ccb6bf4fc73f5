#pragma once

// Entire functions F, weight vectors L = (l_1, ..., l_n) and the two
// independent derivative routes: exact symbolic trees and Cauchy contour
// quadrature on the skeleton T^n(z0, rho).

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lindex/expr.hpp"
#include "lindex/polydisc.hpp"

namespace lindex {

class EntireFunction {
public:
  /// Throws DomainError when the tree contains abs/re/im.
  EntireFunction(Expr ast, int arity, std::string text = {});
  static EntireFunction parse(std::string_view text, int arity);

  const Expr& ast() const noexcept { return ast_; }
  int arity() const noexcept { return arity_; }
  const std::string& text() const noexcept { return text_; }
  bool is_zero_literal() const noexcept { return ast_.is_literal(0); }

  Scaled eval_scaled(const CPoint& z) const { return program_->run_single(z.coords()); }
  Complex operator()(const CPoint& z) const { return eval_scaled(z).value(); }
  /// ln|F(z)| without overflow.
  double log_abs(const CPoint& z) const { return eval_scaled(z).log_abs(); }

private:
  Expr ast_;
  int arity_;
  std::string text_;
  std::shared_ptr<const Program> program_;
};

/// One weight component l_j: any expression (abs/re/im allowed) that must be
/// real and positive wherever it is sampled.
class WeightComponent {
public:
  WeightComponent(Expr ast, int arity, std::string text = {});
  static WeightComponent parse(std::string_view text, int arity);

  const Expr& ast() const noexcept { return ast_; }
  int arity() const noexcept { return arity_; }
  const std::string& text() const noexcept { return text_; }

  /// ln l(z); valid beyond double range (e.g. exp(exp(abs(z))) at |z| = 20).
  /// Throws NumericalError, naming the point, when l(z) is not real and > 0.
  double log_value(const CPoint& z) const;
  /// l(z); throws NumericalError when nonpositive or beyond double range.
  double value(const CPoint& z) const;

private:
  Expr ast_;
  int arity_;
  std::string text_;
  std::shared_ptr<const Program> program_;
};

class WeightVector {
public:
  WeightVector(std::vector<WeightComponent> components, std::string label = {});
  static WeightVector parse(std::span<const std::string> texts, int arity, std::string label = {});
  /// l_j == value for every j.
  static WeightVector constant(int arity, double value = 1.0);

  std::size_t size() const noexcept { return components_.size(); }
  int arity() const noexcept { return static_cast<int>(components_.size()); }
  const WeightComponent& operator[](std::size_t j) const { return components_[j]; }
  const std::string& label() const noexcept { return label_; }

  std::vector<double> values(const CPoint& z) const;
  std::vector<double> log_values(const CPoint& z) const;
  /// factor * L, built as the expression factor * (l_j).
  WeightVector scaled(double factor) const;

private:
  std::vector<WeightComponent> components_;
  std::string label_;
};

std::string format_point(const CPoint& z);

/// Symbolic derivative trees F^{(K)} for every ||K|| <= max_norm, compiled
/// into one shared program. Immutable after construction.
class DerivativeSet {
public:
  DerivativeSet(const EntireFunction& f, int max_norm);

  int max_norm() const noexcept { return max_norm_; }
  const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
  std::size_t position(const MultiIndex& k) const;
  const Expr& tree(const MultiIndex& k) const { return trees_[position(k)]; }

  /// F^{(K)}(z) for all K in indices() order.
  std::vector<Scaled> evaluate(const CPoint& z) const { return program_.run(z.coords()); }

private:
  int max_norm_;
  std::vector<MultiIndex> indices_;
  std::vector<Expr> trees_;
  Program program_;
};

/// ln( |F^{(K)}(z)| / (K! L^K(z)) ) for every K of the set, in index order.
/// -inf marks a vanishing derivative.
std::vector<double> log_normalized_derivatives(const DerivativeSet& set, const WeightVector& L,
                                               const CPoint& z);

enum class DerivativeMethod { Symbolic, Cauchy };

/// |F^{(K)}(z)| / (K! L^K(z)).
double normalized_derivative(const EntireFunction& f, const WeightVector& L, const CPoint& z,
                             const MultiIndex& k,
                             DerivativeMethod method = DerivativeMethod::Symbolic);

struct CauchyResult {
  Complex value;
  /// |difference| between the result on the working grid and on the grid
  /// with half the angles per axis.
  double convergence_estimate = 0.0;
  std::vector<int> resolution;
};

/// Smallest power of two >= max(64, 4 (k_j + 1)) for each axis.
std::vector<int> default_cauchy_resolution(const MultiIndex& k);

/// rho_j = min(1, 1 / l_j(z0)).
PolyRadius default_cauchy_radius(const WeightVector& L, const CPoint& z0);

/// F^{(K)}(z0) = K! / (2 pi i)^n  \oint F(z) / prod (z_j - z0_j)^{k_j + 1} dz
/// by the product trapezoid rule on T^n(z0, rho). Uses
/// grid.angular_resolution angles per axis (must be >= 2 max(K) + 8).
/// Convergence is judged against the half-resolution result; a disagreement
/// above 1e-8 (1 + |value|) plus the roundoff floor of the rule throws
/// NumericalError.
CauchyResult derivative_cauchy(const EntireFunction& f, const CPoint& z0, const MultiIndex& k,
                               const PolyRadius& rho, const GridSpec& grid);
/// Same, with default_cauchy_resolution(k) and the sample cap of GridSpec{}.
CauchyResult derivative_cauchy(const EntireFunction& f, const CPoint& z0, const MultiIndex& k,
                               const PolyRadius& rho);
/// One result per order in `ks`; orders with the same default resolution
/// are read off a single skeleton evaluation.
std::vector<CauchyResult> derivative_cauchy(const EntireFunction& f, const CPoint& z0,
                                            std::span<const MultiIndex> ks, const PolyRadius& rho);

/// All derivatives F^{(K)}(z0) with K <= max_orders componentwise, from one
/// grid evaluation with `resolution[j]` angles on axis j (the all-orders
/// coefficient extraction). Row-major over the box of orders.
std::vector<Complex> cauchy_derivative_box(const EntireFunction& f, const CPoint& z0,
                                           const PolyRadius& rho, const MultiIndex& max_orders,
                                           std::span<const int> resolution,
                                           std::size_t sample_cap = 1'000'000);

}  // namespace lindex
