#pragma once

// Brute-force estimate of the joint L-index N(F, L) on a finite grid, and
// the two-skeleton local behaviour ratio.

#include <optional>
#include <string>
#include <vector>

#include "lindex/function.hpp"

namespace lindex {

struct IndexEstimate {
  /// True when some m <= m_max dominates on the whole grid.
  bool bounded = false;
  /// The least such m; when !bounded, the largest per-point order observed
  /// (which exceeds m_max).
  int N = 0;
  int m_max = 0;
  int j_max = 0;
  std::size_t grid_size = 0;
  /// min over z and N < ||J|| <= j_max of
  ///   ln max_{||K|| <= N} |F^{(K)}|/(K! L^K)  -  ln |F^{(J)}|/(J! L^J)
  /// (with m_max in place of N when unbounded). +inf when no J is left.
  double worst_margin = 0.0;
  CPoint witness_point;
  MultiIndex witness_J;
  /// Per-point least dominating order, in grid order.
  std::vector<int> point_orders;
};

/// Every grid point is scanned in order; ties keep the first point.
/// Throws DomainError for the zero function, j_max < m_max + 2 or
/// j_max > 20, and NumericalError for a nonpositive weight.
IndexEstimate estimate_joint_index(const EntireFunction& f, const WeightVector& L,
                                   const std::vector<CPoint>& z_grid, int m_max = 6,
                                   std::optional<int> j_max = std::nullopt);

/// The margin of the defining inequality at one (z, J) against order N,
/// recomputed from scratch.
double index_margin(const EntireFunction& f, const WeightVector& L, const CPoint& z,
                    const MultiIndex& J, int N);

struct LocalBehaviorRow {
  CPoint z0;
  double modulus = 0.0;
  double log_max_inner = 0.0;
  double log_max_outer = 0.0;
  double log_ratio = 0.0;
  double ratio = 1.0;
};

struct LocalBehaviorReport {
  PolyRadius R_inner;
  PolyRadius R_outer;
  double p1_estimate = 1.0;
  double log_p1 = 0.0;
  /// Sorted by |z0| (Euclidean), ties in grid order.
  std::vector<LocalBehaviorRow> trace;
  /// The largest ratio over the last third of the trace exceeds twice the
  /// largest over the first third.
  bool growing = false;
  std::string diagnostic;
};

/// Per z0, max |F| on T^n(z0, R_outer / L(z0)) over max |F| on
/// T^n(z0, R_inner / L(z0)). Requires 0 < R_inner < e < R_outer on every axis.
LocalBehaviorReport local_behavior_ratio(const EntireFunction& f, const WeightVector& L,
                                         const PolyRadius& R_inner, const PolyRadius& R_outer,
                                         const std::vector<CPoint>& z0_grid, const GridSpec& grid);

}  // namespace lindex
