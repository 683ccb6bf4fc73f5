#pragma once

// Distortion of L over the small polydiscs D^n[z0, R / L(z0)], membership
// scans for the classes Q^n (bounded distortion) and K^n (bounded angular
// ratio), the derivative criterion that builds a Q^n weight L* = c + |l|,
// and the divergence probe |z_j| l_j -> infinity.

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lindex/function.hpp"

namespace lindex {

/// Sampled inf and sup of l_j(z) / l_j(z0) over D^n[z0, R / L(z0)].
/// Both are also kept as logarithms so weights beyond double range work.
struct LambdaPair {
  double lambda1 = 1.0;
  double lambda2 = 1.0;
  double log_lambda1 = 0.0;
  double log_lambda2 = 0.0;
  CPoint argmin;
  CPoint argmax;
};

/// One pair per component j. R may contain zeros (the disc then collapses
/// on that axis). The sampled inf is >= the true inf and the sampled sup
/// <= the true sup.
std::vector<LambdaPair> lambda_bounds(const WeightVector& L, const CPoint& z0, const PolyRadius& R,
                                      const GridSpec& grid);

enum class Verdict { Satisfied, Violated, Inconclusive };
const char* verdict_name(Verdict v);

struct ClassThresholds {
  /// A sampled extremal value above this (or a lambda_1 below its reciprocal)
  /// is a blowup.
  double blowup = 1e6;
  /// Growth by more than this factor between consecutive radii is a blowup,
  /// as is a nondecreasing trace whose total growth exceeds it.
  double growth_factor = 10.0;
};

struct ClassTracePoint {
  /// |z0| for Q^n scans, ||R|| for K^n scans.
  double parameter = 0.0;
  double log_value = 0.0;
};

struct ClassVerdict {
  Verdict verdict = Verdict::Inconclusive;
  /// Q^n: max over j of max(Lambda2_j, 1 / Lambda1_j); K^n: the empirical c.
  double extremal_value = 1.0;
  double log_extremal = 0.0;
  /// Per-j Lambda1_j = inf over z0 of lambda1, Lambda2_j = sup of lambda2
  /// (Q^n only).
  std::vector<double> lambda1;
  std::vector<double> lambda2;
  std::optional<CPoint> witness_point;
  std::optional<PolyRadius> witness_radius;
  /// K^n only: the angles attaining the largest and smallest value.
  std::vector<double> witness_theta_max;
  std::vector<double> witness_theta_min;
  std::size_t witness_component = 0;
  std::vector<ClassTracePoint> trace;
  std::string scanned_range;
  std::string reason;
  ClassThresholds thresholds;
};

ClassVerdict qn_scan(const WeightVector& L, const PolyRadius& R, const std::vector<CPoint>& z0_grid,
                     const GridSpec& grid, const ClassThresholds& thresholds = {});

/// For each R of the grid and each j, max over Theta_1, Theta_2 of
/// l_j(R e^{i Theta_2}) / l_j(R e^{i Theta_1}) on the angle grid of
/// `grid.angular_resolution` points per axis.
ClassVerdict kn_scan(const WeightVector& L, const std::vector<PolyRadius>& R_grid,
                     const GridSpec& grid, const ClassThresholds& thresholds = {});

/// 1/2 (d/dx_m - i d/dy_m) of an arbitrary expression by central
/// differences with step 1e-5 (1 + |z_m|). Zero-based m.
Complex wirtinger_derivative(const Expr& l, const CPoint& z, int m);

struct Prop1Result {
  /// max over grid, j, m of |d l_j / d z_m| / (c + |l_j|).
  double P = 0.0;
  double c = 1.0;
  CPoint witness;
  std::size_t witness_component = 0;
  std::size_t witness_variable = 0;
  /// L* = (c + |l_1|, ..., c + |l_n|).
  WeightVector star;

  /// exp((P / c) ||R||): upper envelope for lambda2 of L*, reciprocal for lambda1.
  double envelope(const PolyRadius& R) const;
};

/// Holomorphic components are differentiated exactly, others by Wirtinger
/// differences.
Prop1Result prop1_check(const std::vector<Expr>& l_raw, double c, const std::vector<CPoint>& domain_grid);

struct EnvelopeRow {
  PolyRadius R;
  double envelope = 1.0;
  /// max over j and z0 of lambda2, min of lambda1.
  double lambda2 = 1.0;
  double lambda1 = 1.0;
  bool contained = true;
};

/// Samples lambda_bounds of L* over z0_grid for each R and checks
/// lambda2 <= envelope (1 + 1e-6) and lambda1 >= (1 - 1e-6) / envelope.
std::vector<EnvelopeRow> prop1_envelope_scan(const Prop1Result& prop, const std::vector<PolyRadius>& R_grid,
                                             const std::vector<CPoint>& z0_grid, const GridSpec& grid);

struct ProbeRow {
  double r = 0.0;
  double product = 0.0;
  double log_product = 0.0;
};

struct ProbeResult {
  std::vector<ProbeRow> rows;
  /// Tail (last third) strictly increasing and the last product >= bound.
  bool consistent = false;
  std::string diagnostic;
};

/// r l_j(z* + r e^{i theta} e_j) for r in r_list (increasing, positive).
/// Zero-based j.
ProbeResult qn_growth_probe(const WeightVector& L, const CPoint& z_star, std::size_t j,
                            const std::vector<double>& r_list, double theta, double bound = 10.0);

}  // namespace lindex
