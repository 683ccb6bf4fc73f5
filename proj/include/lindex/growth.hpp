#pragma once

// Maximum modulus on skeletons and the growth estimates built on it: the
// permutation/angle minimised weight integral, the derivative-based bound
// with its beta/gamma integrands, the weight-decay constant C, the limsup
// verdict, and log-convexity of ln M.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "lindex/function.hpp"

namespace lindex {

// ---- maximum modulus --------------------------------------------------------

struct MaxModulus {
  double log_value = 0.0;
  /// exp(log_value); may be +inf.
  double value = 0.0;
  /// Angles of the best sample.
  std::vector<double> theta;
  /// Gain in log_value during the last refinement pass.
  double refinement_delta = 0.0;
  std::size_t evaluations = 0;
};

/// max |F| over T^n(center, R): the angular grid of `grid`, then
/// grid.refinement_depth pattern-search passes around the best sample, each
/// halving the angular step. A lower bound for the true maximum.
MaxModulus max_on_skeleton(const EntireFunction& f, const CPoint& center, const PolyRadius& R,
                           const GridSpec& grid);

/// M(F, R) = max |F| on T^n(0, R).
MaxModulus max_modulus(const EntireFunction& f, const PolyRadius& R, const GridSpec& grid);

// ---- angle and permutation sets ----------------------------------------------

/// 16 angles per axis for n <= 2, 8 for n = 3, 512 seeded uniform samples
/// of [0, 2 pi)^n for n >= 4.
std::vector<std::vector<double>> theta_grid(std::size_t n, std::uint64_t seed);

/// All permutations of 0..n-1 for n <= 4; for larger n the n rotations of
/// the identity and their reversals.
std::vector<std::vector<int>> default_permutations(std::size_t n);

// ---- weight integral over the staircase path --------------------------------

/// How the path coordinate k is placed while integrating along axis j.
/// Verbatim: base radius when sigma(k) < j, t when k = j, full radius
/// otherwise. Composed: the same with sigma(k) compared against sigma(j).
enum class CaseMode { Verbatim, Composed };
const char* case_mode_name(CaseMode m);

struct Thm2Config {
  /// Base radius; defaults to (1, ..., 1) when empty.
  PolyRadius R0;
  /// Defaults to default_permutations(n) when empty.
  std::vector<std::vector<int>> permutations;
  /// Defaults to theta_grid(n, seed) when empty.
  std::vector<std::vector<double>> thetas;
  CaseMode mode = CaseMode::Verbatim;
  double rel_tol = 1e-6;
  std::uint64_t seed = 0;
};

/// The radius vector R(j, sigma, t). Zero-based j; sigma holds 0..n-1.
std::vector<double> staircase_radius(const PolyRadius& R, const PolyRadius& R0,
                                     const std::vector<int>& sigma, std::size_t j, double t,
                                     CaseMode mode);

struct Thm2Result {
  double value = 0.0;
  std::vector<int> sigma;
  std::vector<double> theta;
  CaseMode mode = CaseMode::Verbatim;
  /// Some r_j is below the base radius.
  bool below_base = false;
};

/// min over sigma and Theta of sum_j int_0^{r_j} l_j(R(j, sigma, t) e^{i Theta}) dt,
/// each integral by adaptive Simpson to cfg.rel_tol.
Thm2Result thm2_integral(const WeightVector& L, const PolyRadius& R, const Thm2Config& cfg);

/// The integral for base radii factor * (1, ..., 1), one value per factor.
std::vector<Thm2Result> thm2_base_sweep(const WeightVector& L, const PolyRadius& R,
                                        const Thm2Config& cfg, const std::vector<double>& factors);

struct Thm2Row {
  double r = 0.0;
  double norm = 0.0;
  double ln_M = 0.0;
  double bound = 0.0;
  double ratio = 0.0;
  std::vector<int> sigma;
  std::vector<double> theta;
};

struct Thm2Scan {
  std::vector<Thm2Row> rows;
  /// ratio(last) / ratio(last - 3) (or against the first row when shorter).
  double tail_growth = 1.0;
  /// Largest ratio(i) / ratio(i - 1) over the last three steps.
  double step_growth = 1.0;
  /// step_growth <= 1.1.
  bool consistent = true;
  /// tail_growth >= 2.
  bool diverging = false;
};

/// Along R = r * direction: ln M / integral. Throws NumericalError on a
/// zero integral.
Thm2Scan thm2_ratio_scan(const EntireFunction& f, const WeightVector& L, const PolyRadius& direction,
                         const std::vector<double>& r_seq, const Thm2Config& cfg, const GridSpec& grid);

// ---- derivative bound ---------------------------------------------------------

/// Uniform Simpson intervals on [0, r_m] for beta, gamma and C.
inline constexpr int kGrowthIntervals = 2048;

struct BetaGammaTrace {
  std::size_t pivot = 0;
  std::vector<double> alpha;
  std::vector<double> t;
  std::vector<double> beta;
  std::vector<double> gamma;
  /// sum_j alpha_j l_j along the ray.
  std::vector<double> weighted_sum;
  /// u'_j(t), one row per j.
  std::vector<std::vector<double>> du;
};

struct Thm3Result {
  double rhs = 0.0;
  double lhs = 0.0;
  double log_base = 0.0;
  double beta_integral = 0.0;
  double gamma_integral = 0.0;
  /// lhs <= rhs + 1e-6 (1 + |rhs|).
  bool holds = true;
  BetaGammaTrace trace;
};

/// Pivot index of the largest radius (first on ties).
std::size_t default_pivot(const PolyRadius& R);

/// ln max_{||K||<=N} |F^{(K)}(0)|/(K! L^K(0)) + int_0^{r_m} (beta + gamma)
/// against ln max_{||K||<=N} |F^{(K)}(R e^{iTheta})|/(K! L^K(R e^{iTheta})).
/// Throws DomainError when r_m = 0 or every normalized derivative vanishes
/// at the origin.
Thm3Result thm3_rhs(const EntireFunction& f, const WeightVector& L, const PolyRadius& R,
                    const std::vector<double>& theta, int N, std::optional<std::size_t> pivot = {},
                    int intervals = kGrowthIntervals);

struct SuplinfRow {
  PolyRadius R;
  /// max over t in [0, r_m], Theta, j.
  double value = 0.0;
  /// max over Theta, j at t = r_m.
  double endpoint = 0.0;
};

struct SuplinfResult {
  /// max over every sampled R, t, Theta, j of (-u_j')^+ / (alpha_j l_j^2).
  double C = 0.0;
  std::optional<PolyRadius> witness_R;
  double witness_t = 0.0;
  std::vector<double> witness_theta;
  std::size_t witness_component = 0;
  std::vector<SuplinfRow> rows;
  /// C = 0 (to 1e-12) or the endpoint value fell to <= 1% of its first value.
  bool vanishing = false;
};

SuplinfResult suplinf_C(const WeightVector& L, const std::vector<PolyRadius>& R_grid,
                        const std::vector<std::vector<double>>& thetas,
                        std::optional<std::size_t> pivot = {}, int intervals = kGrowthIntervals);

struct GrowthRow {
  double r = 0.0;
  PolyRadius R;
  double ln_M = 0.0;
  /// max over Theta of int_0^{r_m} sum_j alpha_j l_j(tau alpha e^{iTheta}) dtau.
  double denominator = 0.0;
  std::vector<double> argmax_theta;
  double ratio = 0.0;
  double thm2_bound = 0.0;
  double thm3_rhs = 0.0;
};

enum class GrowthOutcome { WithinBound, ExceedsBound, HypothesesNotMet };
const char* growth_outcome_name(GrowthOutcome o);

struct GrowthVerdict {
  std::vector<GrowthRow> rows;
  int N = 0;
  double C = 0.0;
  bool vanishing = false;
  double limsup = 0.0;
  /// N + 1 when the decay condition holds, else (C + 1) N + 1.
  double bound = 0.0;
  double bound_general = 0.0;
  double bound_vanishing = 0.0;
  std::size_t pivot = 0;
  GrowthOutcome outcome = GrowthOutcome::WithinBound;
  std::string reason;
  SuplinfResult suplinf;
};

/// limsup is the max ratio over the last ceil(K/3) radii. The denominator
/// must increase strictly and at least double along the ray.
GrowthVerdict growth_verdict(const EntireFunction& f, const WeightVector& L, const PolyRadius& direction,
                             const std::vector<double>& r_seq, int N, const Thm2Config& cfg,
                             const GridSpec& grid, std::optional<std::size_t> pivot = {});

struct GapResult {
  double new_bound = 0.0;
  double old_bound = 0.0;
  double gap = 0.0;
};

/// (N C + N + 1, (C + 1)(N + 1), their difference).
GapResult sheremeta_gap(int N, double C);

struct ConvexityReport {
  std::vector<double> log_r_lo;
  std::vector<double> log_r_hi;
  int points_per_axis = 0;
  /// ln^+ M on the lattice, row-major.
  std::vector<double> values;
  double min_second_difference = 0.0;
  std::vector<std::size_t> worst_position;
  std::size_t worst_axis = 0;
  /// min_second_difference >= -1e-9.
  bool convex = true;
};

/// ln^+ M(F, R) on a lattice uniform in ln r_j between lo and hi (both > 0)
/// with `points` per axis; second differences along each axis.
ConvexityReport convexity_check(const EntireFunction& f, const PolyRadius& lo, const PolyRadius& hi,
                                int points, const GridSpec& grid);

}  // namespace lindex
