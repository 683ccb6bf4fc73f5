#include "lindex/index.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lindex/error.hpp"
#include "lindex/growth.hpp"
#include "lindex/parallel.hpp"

namespace lindex {

namespace {

// Dominance tolerance in log space.
constexpr double kLogTol = 1e-12;

struct PointScan {
  int order = 0;
  std::vector<double> logs;
  std::vector<double> prefix;  // prefix[m] = max over ||K|| <= m
};

PointScan scan_point(const DerivativeSet& set, const WeightVector& L, const CPoint& z) {
  PointScan s;
  s.logs = log_normalized_derivatives(set, L, z);
  s.prefix.assign(static_cast<std::size_t>(set.max_norm()) + 1, -INFINITY);
  for (std::size_t i = 0; i < s.logs.size(); ++i) {
    if (std::isnan(s.logs[i])) throw NumericalError("derivative evaluation failed at z = " + format_point(z));
    auto& p = s.prefix[static_cast<std::size_t>(set.indices()[i].norm())];
    p = std::max(p, s.logs[i]);
  }
  for (std::size_t m = 1; m < s.prefix.size(); ++m) s.prefix[m] = std::max(s.prefix[m], s.prefix[m - 1]);
  const double top = s.prefix.back();
  if (top == -INFINITY) return s;  // every derivative vanishes here: no constraint
  while (s.prefix[static_cast<std::size_t>(s.order)] < top - kLogTol) ++s.order;
  return s;
}

}  // namespace

IndexEstimate estimate_joint_index(const EntireFunction& f, const WeightVector& L,
                                   const std::vector<CPoint>& z_grid, int m_max,
                                   std::optional<int> j_max_opt) {
  if (f.is_zero_literal()) throw DomainError("the zero function has no index");
  if (z_grid.empty()) throw DomainError("index estimate needs a nonempty grid");
  if (L.arity() != f.arity()) throw DomainError("weight and function arity differ");
  if (m_max < 0) throw DomainError("m_max must be nonnegative");
  const int j_max = j_max_opt.value_or(m_max + 4);
  if (j_max < m_max + 2) throw DomainError("j_max must be at least m_max + 2");
  if (j_max > kMaxFactorialNorm) throw DomainError("j_max above 20 exceeds the factorial guard");

  const DerivativeSet set(f, j_max);
  const auto scans = parallel_map(z_grid.size(), [&](std::size_t i) {
    return scan_point(set, L, z_grid[i]);
  });

  IndexEstimate est;
  est.m_max = m_max;
  est.j_max = j_max;
  est.grid_size = z_grid.size();
  bool any_nonzero = false;
  std::size_t order_arg = 0;
  for (std::size_t i = 0; i < scans.size(); ++i) {
    est.point_orders.push_back(scans[i].order);
    any_nonzero = any_nonzero || scans[i].prefix.back() != -INFINITY;
    if (scans[i].order > scans[order_arg].order) order_arg = i;
  }
  if (!any_nonzero) throw DomainError("the function and its derivatives vanish on the whole grid");
  const int observed = scans[order_arg].order;
  est.bounded = observed <= m_max;
  est.N = observed;
  const int reference = est.bounded ? observed : m_max;

  est.worst_margin = INFINITY;
  est.witness_point = z_grid[order_arg];
  est.witness_J = MultiIndex::zero(static_cast<std::size_t>(f.arity()));
  for (std::size_t i = 0; i < scans.size(); ++i) {
    const double rhs = scans[i].prefix[static_cast<std::size_t>(reference)];
    for (std::size_t k = 0; k < scans[i].logs.size(); ++k) {
      const MultiIndex& J = set.indices()[k];
      if (J.norm() <= reference) continue;
      const double lhs = scans[i].logs[k];
      if (lhs == -INFINITY) continue;
      const double margin = rhs - lhs;
      if (margin < est.worst_margin) {
        est.worst_margin = margin;
        est.witness_point = z_grid[i];
        est.witness_J = J;
      }
    }
  }
  return est;
}

double index_margin(const EntireFunction& f, const WeightVector& L, const CPoint& z,
                    const MultiIndex& J, int N) {
  if (N < 0) throw DomainError("N must be nonnegative");
  const DerivativeSet set(f, std::max(N, J.norm()));
  const PointScan s = scan_point(set, L, z);
  return s.prefix[static_cast<std::size_t>(N)] - s.logs[set.position(J)];
}

LocalBehaviorReport local_behavior_ratio(const EntireFunction& f, const WeightVector& L,
                                         const PolyRadius& R_inner, const PolyRadius& R_outer,
                                         const std::vector<CPoint>& z0_grid, const GridSpec& grid) {
  const auto n = static_cast<std::size_t>(f.arity());
  if (z0_grid.empty()) throw DomainError("local behaviour needs a nonempty grid");
  if (R_inner.size() != n || R_outer.size() != n || L.size() != n) {
    throw DomainError("local behaviour: dimension mismatch");
  }
  for (std::size_t j = 0; j < n; ++j) {
    if (!(R_inner[j] > 0.0 && R_inner[j] < std::numbers::e && std::numbers::e < R_outer[j])) {
      throw DomainError("radii must satisfy 0 < inner < e < outer on every axis");
    }
  }
  auto rows = parallel_map(z0_grid.size(), [&](std::size_t i) {
    const CPoint& z0 = z0_grid[i];
    const std::vector<double> logl = L.log_values(z0);
    std::vector<double> in(n);
    std::vector<double> out(n);
    for (std::size_t j = 0; j < n; ++j) {
      in[j] = std::exp(std::log(R_inner[j]) - logl[j]);
      out[j] = std::exp(std::log(R_outer[j]) - logl[j]);
      if (!(in[j] > 0.0) || !std::isfinite(out[j])) {
        throw NumericalError("degenerate weight at z0 = " + format_point(z0));
      }
    }
    LocalBehaviorRow row;
    row.z0 = z0;
    double sq = 0.0;
    for (double m : z0.moduli()) sq += m * m;
    row.modulus = std::sqrt(sq);
    row.log_max_inner = max_on_skeleton(f, z0, PolyRadius(in), grid).log_value;
    row.log_max_outer = max_on_skeleton(f, z0, PolyRadius(out), grid).log_value;
    if (row.log_max_inner == -INFINITY) {
      throw NumericalError("function vanishes on the inner skeleton at z0 = " + format_point(z0));
    }
    row.log_ratio = row.log_max_outer - row.log_max_inner;
    row.ratio = std::exp(row.log_ratio);
    return row;
  });
  std::stable_sort(rows.begin(), rows.end(),
                   [](const LocalBehaviorRow& a, const LocalBehaviorRow& b) { return a.modulus < b.modulus; });

  LocalBehaviorReport rep;
  rep.R_inner = R_inner;
  rep.R_outer = R_outer;
  rep.log_p1 = -INFINITY;
  for (const auto& r : rows) rep.log_p1 = std::max(rep.log_p1, r.log_ratio);
  rep.p1_estimate = std::exp(rep.log_p1);
  rep.trace = std::move(rows);

  const std::size_t third = std::max<std::size_t>(1, rep.trace.size() / 3);
  double first = -INFINITY;
  double last = -INFINITY;
  for (std::size_t i = 0; i < third; ++i) first = std::max(first, rep.trace[i].log_ratio);
  for (std::size_t i = rep.trace.size() - third; i < rep.trace.size(); ++i) {
    last = std::max(last, rep.trace[i].log_ratio);
  }
  rep.growing = rep.trace.size() >= 2 && last > first + std::numbers::ln2;
  std::ostringstream d;
  if (rep.growing) {
    d << "ratio grows from " << std::exp(first) << " to " << std::exp(last)
      << " along increasing |z0|: not consistent with bounded index";
  } else {
    d << "ratio does not grow along increasing |z0| (p1 ~ " << rep.p1_estimate
      << "): consistent with bounded index";
  }
  rep.diagnostic = d.str();
  return rep;
}

}  // namespace lindex
