#include "lindex/growth.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "lindex/error.hpp"
#include "lindex/numeric.hpp"
#include "lindex/parallel.hpp"

namespace lindex {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Pattern-search moves allowed per refinement level.
constexpr int kMovesPerLevel = 64;

}  // namespace

// ---- maximum modulus --------------------------------------------------------

MaxModulus max_on_skeleton(const EntireFunction& f, const CPoint& center, const PolyRadius& R,
                           const GridSpec& grid) {
  grid.validate();
  const std::size_t n = center.size();
  if (R.size() != n || static_cast<int>(n) != f.arity()) {
    throw DomainError("max modulus: dimension mismatch");
  }
  std::vector<std::size_t> active;
  for (std::size_t j = 0; j < n; ++j) {
    if (R[j] > 0.0) active.push_back(j);
  }
  const std::size_t d = active.size();
  const auto m = static_cast<std::size_t>(grid.angular_resolution);
  std::size_t total = 1;
  for (std::size_t a = 0; a < d; ++a) {
    if (total > grid.sample_cap / m) {
      throw DomainError("skeleton grid exceeds the sample cap of " + std::to_string(grid.sample_cap));
    }
    total *= m;
  }

  auto log_at = [&](const std::vector<double>& theta) {
    std::vector<Complex> z(center.coords().begin(), center.coords().end());
    for (std::size_t a = 0; a < d; ++a) z[active[a]] += std::polar(R[active[a]], theta[a]);
    return f.log_abs(CPoint(std::move(z)));
  };

  const auto coarse = parallel_map(total, [&](std::size_t flat) {
    std::vector<double> theta(d);
    for (std::size_t a = d; a-- > 0;) {
      theta[a] = kTwoPi * static_cast<double>(flat % m) / static_cast<double>(m);
      flat /= m;
    }
    return log_at(theta);
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < total; ++i) {
    if (coarse[i] > coarse[arg]) arg = i;
  }
  std::vector<double> best(d);
  {
    std::size_t flat = arg;
    for (std::size_t a = d; a-- > 0;) {
      best[a] = kTwoPi * static_cast<double>(flat % m) / static_cast<double>(m);
      flat /= m;
    }
  }
  double best_value = coarse[arg];
  MaxModulus out;
  out.evaluations = total;

  if (d > 0 && std::isfinite(best_value)) {
    std::size_t stencil = 1;
    for (std::size_t a = 0; a < d; ++a) stencil *= 3;
    double h = kTwoPi / static_cast<double>(m);
    for (int pass = 0; pass < grid.refinement_depth; ++pass) {
      h *= 0.5;
      const double before = best_value;
      for (int move = 0; move < kMovesPerLevel; ++move) {
        std::vector<double> cand_best = best;
        double cand_value = best_value;
        for (std::size_t s = 0; s < stencil; ++s) {
          std::vector<double> theta = best;
          std::size_t code = s;
          bool centre = true;
          for (std::size_t a = 0; a < d; ++a) {
            const int step = static_cast<int>(code % 3) - 1;
            code /= 3;
            centre = centre && step == 0;
            theta[a] += step * h;
          }
          if (centre) continue;
          const double v = log_at(theta);
          ++out.evaluations;
          if (v > cand_value) {
            cand_value = v;
            cand_best = std::move(theta);
          }
        }
        if (!(cand_value > best_value)) break;
        best_value = cand_value;
        best = std::move(cand_best);
      }
      out.refinement_delta = best_value - before;
    }
  }

  out.log_value = best_value;
  out.value = std::exp(best_value);
  out.theta.assign(n, 0.0);
  for (std::size_t a = 0; a < d; ++a) {
    double t = std::fmod(best[a], kTwoPi);
    if (t < 0) t += kTwoPi;
    out.theta[active[a]] = t;
  }
  return out;
}

MaxModulus max_modulus(const EntireFunction& f, const PolyRadius& R, const GridSpec& grid) {
  return max_on_skeleton(f, CPoint(R.size()), R, grid);
}

// ---- angle and permutation sets ----------------------------------------------

std::vector<std::vector<double>> theta_grid(std::size_t n, std::uint64_t seed) {
  if (n == 0) throw DomainError("theta grid needs n >= 1");
  if (n <= 2) return angle_grid(n, 16, 1'000'000);
  if (n == 3) return angle_grid(n, 8, 1'000'000);
  SeededUniform rng(seed);
  std::vector<std::vector<double>> out(512, std::vector<double>(n));
  for (auto& theta : out) {
    for (double& t : theta) t = rng.next(0.0, kTwoPi);
  }
  return out;
}

std::vector<std::vector<int>> default_permutations(std::size_t n) {
  std::vector<int> id(n);
  for (std::size_t i = 0; i < n; ++i) id[i] = static_cast<int>(i);
  std::vector<std::vector<int>> out;
  if (n <= 4) {
    do out.push_back(id);
    while (std::next_permutation(id.begin(), id.end()));
    return out;
  }
  for (std::size_t shift = 0; shift < n; ++shift) {
    std::vector<int> p(n);
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<int>((i + shift) % n);
    out.push_back(p);
    std::reverse(p.begin(), p.end());
    out.push_back(std::move(p));
  }
  return out;
}

// ---- staircase integral -----------------------------------------------------

const char* case_mode_name(CaseMode m) {
  return m == CaseMode::Verbatim ? "verbatim" : "composed";
}

std::vector<double> staircase_radius(const PolyRadius& R, const PolyRadius& R0,
                                     const std::vector<int>& sigma, std::size_t j, double t,
                                     CaseMode mode) {
  const std::size_t n = R.size();
  std::vector<double> r(n);
  const int pivot = mode == CaseMode::Verbatim ? static_cast<int>(j) : sigma[j];
  for (std::size_t k = 0; k < n; ++k) {
    if (k == j) r[k] = t;
    else if (sigma[k] < pivot) r[k] = R0[k];
    else r[k] = R[k];  // sigma(k) > pivot, or sigma(k) = j in the verbatim table
  }
  return r;
}

namespace {

struct ResolvedThm2 {
  PolyRadius R0;
  std::vector<std::vector<int>> perms;
  std::vector<std::vector<double>> thetas;
};

ResolvedThm2 resolve(const Thm2Config& cfg, std::size_t n) {
  ResolvedThm2 r{cfg.R0.size() ? cfg.R0 : PolyRadius::filled(n, 1.0),
                 cfg.permutations.empty() ? default_permutations(n) : cfg.permutations,
                 cfg.thetas.empty() ? theta_grid(n, cfg.seed) : cfg.thetas};
  if (r.R0.size() != n) throw DomainError("base radius dimension mismatch");
  if (!r.R0.all_positive()) throw DomainError("base radius must be positive");
  for (const auto& p : r.perms) {
    std::vector<int> sorted = p;
    std::sort(sorted.begin(), sorted.end());
    for (std::size_t i = 0; i < n; ++i) {
      if (sorted.size() != n || sorted[i] != static_cast<int>(i)) {
        throw DomainError("permutation entries must be 0..n-1 once each");
      }
    }
  }
  for (const auto& t : r.thetas) {
    if (t.size() != n) throw DomainError("angle vector dimension mismatch");
  }
  if (!(cfg.rel_tol > 0.0)) throw DomainError("quadrature tolerance must be positive");
  return r;
}

}  // namespace

Thm2Result thm2_integral(const WeightVector& L, const PolyRadius& R, const Thm2Config& cfg) {
  const std::size_t n = L.size();
  if (R.size() != n) throw DomainError("radius dimension mismatch");
  const ResolvedThm2 rc = resolve(cfg, n);
  const std::size_t combos = rc.perms.size() * rc.thetas.size();
  const CPoint origin(n);

  const auto values = parallel_map(combos, [&](std::size_t c) {
    const auto& sigma = rc.perms[c / rc.thetas.size()];
    const auto& theta = rc.thetas[c % rc.thetas.size()];
    std::vector<double> parts;
    for (std::size_t j = 0; j < n; ++j) {
      if (R[j] == 0.0) continue;
      auto integrand = [&](double t) {
        const auto radius = staircase_radius(R, rc.R0, sigma, j, t, cfg.mode);
        return L[j].value(on_skeleton(origin, radius, theta));
      };
      parts.push_back(adaptive_simpson(integrand, 0.0, R[j], cfg.rel_tol).value);
    }
    return pairwise_sum(parts);
  });
  std::size_t arg = 0;
  for (std::size_t c = 1; c < combos; ++c) {
    if (values[c] < values[arg]) arg = c;
  }
  Thm2Result out;
  out.value = values[arg];
  out.sigma = rc.perms[arg / rc.thetas.size()];
  out.theta = rc.thetas[arg % rc.thetas.size()];
  out.mode = cfg.mode;
  for (std::size_t j = 0; j < n; ++j) out.below_base = out.below_base || R[j] < rc.R0[j];
  return out;
}

std::vector<Thm2Result> thm2_base_sweep(const WeightVector& L, const PolyRadius& R,
                                        const Thm2Config& cfg, const std::vector<double>& factors) {
  std::vector<Thm2Result> out;
  for (double factor : factors) {
    Thm2Config c = cfg;
    c.R0 = PolyRadius::filled(L.size(), factor);
    out.push_back(thm2_integral(L, R, c));
  }
  return out;
}

Thm2Scan thm2_ratio_scan(const EntireFunction& f, const WeightVector& L, const PolyRadius& direction,
                         const std::vector<double>& r_seq, const Thm2Config& cfg, const GridSpec& grid) {
  if (!direction.all_positive()) throw DomainError("ray direction must be positive");
  if (r_seq.empty()) throw DomainError("empty radius sequence");
  Thm2Scan scan;
  for (double r : r_seq) {
    const PolyRadius R = direction.scaled(r);
    Thm2Row row;
    row.r = r;
    row.norm = R.norm();
    row.ln_M = max_modulus(f, R, grid).log_value;
    const Thm2Result t2 = thm2_integral(L, R, cfg);
    if (!(t2.value > 0.0)) throw NumericalError("weight integral vanishes at r = " + std::to_string(r));
    row.bound = t2.value;
    row.ratio = row.ln_M / row.bound;
    row.sigma = t2.sigma;
    row.theta = t2.theta;
    scan.rows.push_back(std::move(row));
  }
  const std::size_t last = scan.rows.size() - 1;
  const std::size_t ref = last >= 3 ? last - 3 : 0;
  const double a = scan.rows[ref].ratio;
  const double b = scan.rows[last].ratio;
  const auto growth_between = [](double lo, double hi) {
    if (lo > 0.0) return hi / lo;
    return hi <= 0.0 ? 1.0 : INFINITY;
  };
  scan.tail_growth = growth_between(a, b);
  scan.step_growth = 1.0;
  for (std::size_t i = ref + 1; i <= last; ++i) {
    scan.step_growth = std::max(scan.step_growth, growth_between(scan.rows[i - 1].ratio, scan.rows[i].ratio));
  }
  scan.consistent = scan.step_growth <= 1.1;
  scan.diverging = scan.tail_growth >= 2.0;
  return scan;
}

// ---- derivative bound ---------------------------------------------------------

std::size_t default_pivot(const PolyRadius& R) {
  std::size_t m = 0;
  for (std::size_t j = 1; j < R.size(); ++j) {
    if (R[j] > R[m]) m = j;
  }
  return m;
}

namespace {

struct RayProfile {
  std::vector<double> t;
  std::vector<std::vector<double>> u;   // u[j][i]
  std::vector<std::vector<double>> du;  // du[j][i]
};

// u_j(t) = l_j(t alpha e^{i theta}) on a uniform grid over [0, r_m], with
// central differences inside and one-sided ones at the ends.
RayProfile ray_profile(const WeightVector& L, const std::vector<double>& alpha,
                       const std::vector<double>& theta, double r_m, int intervals) {
  const std::size_t n = L.size();
  const auto count = static_cast<std::size_t>(intervals) + 1;
  const double h = r_m / intervals;
  RayProfile p;
  p.t.resize(count);
  p.u.assign(n, std::vector<double>(count));
  p.du.assign(n, std::vector<double>(count));
  const CPoint origin(n);
  std::vector<double> radius(n);
  for (std::size_t i = 0; i < count; ++i) {
    p.t[i] = i + 1 == count ? r_m : h * static_cast<double>(i);
    for (std::size_t j = 0; j < n; ++j) radius[j] = p.t[i] * alpha[j];
    const std::vector<double> lv = L.values(on_skeleton(origin, radius, theta));
    for (std::size_t j = 0; j < n; ++j) p.u[j][i] = lv[j];
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& u = p.u[j];
    auto& du = p.du[j];
    du[0] = (u[1] - u[0]) / h;
    du[count - 1] = (u[count - 1] - u[count - 2]) / h;
    for (std::size_t i = 1; i + 1 < count; ++i) du[i] = (u[i + 1] - u[i - 1]) / (2.0 * h);
  }
  return p;
}

std::vector<double> ray_alpha(const PolyRadius& R, std::size_t pivot) {
  std::vector<double> alpha(R.size());
  for (std::size_t j = 0; j < R.size(); ++j) alpha[j] = R[j] / R[pivot];
  return alpha;
}

std::size_t checked_pivot(const PolyRadius& R, std::optional<std::size_t> pivot) {
  const std::size_t m = pivot.value_or(default_pivot(R));
  if (m >= R.size()) throw DomainError("pivot index out of range");
  if (!(R[m] > 0.0)) throw DomainError("pivot radius must be nonzero");
  return m;
}

}  // namespace

Thm3Result thm3_rhs(const EntireFunction& f, const WeightVector& L, const PolyRadius& R,
                    const std::vector<double>& theta, int N, std::optional<std::size_t> pivot,
                    int intervals) {
  const auto n = static_cast<std::size_t>(f.arity());
  if (L.size() != n || R.size() != n || theta.size() != n) throw DomainError("dimension mismatch");
  if (N < 0) throw DomainError("N must be nonnegative");
  if (intervals < 2 || intervals % 2 != 0) throw DomainError("interval count must be even and >= 2");
  const std::size_t m = checked_pivot(R, pivot);
  const double r_m = R[m];
  const std::vector<double> alpha = ray_alpha(R, m);

  const DerivativeSet set(f, N);
  const CPoint origin(n);
  Thm3Result out;
  {
    const auto logs = log_normalized_derivatives(set, L, origin);
    out.log_base = *std::max_element(logs.begin(), logs.end());
    if (out.log_base == -INFINITY) {
      throw DomainError(
          "base point degenerate: every normalized derivative of order <= N vanishes at the "
          "origin, and shifting the base point is not supported");
    }
  }
  {
    const auto logs = log_normalized_derivatives(set, L, on_skeleton(origin, R.radii(), theta));
    out.lhs = *std::max_element(logs.begin(), logs.end());
  }

  const RayProfile p = ray_profile(L, alpha, theta, r_m, intervals);
  const std::size_t count = p.t.size();
  BetaGammaTrace& tr = out.trace;
  tr.pivot = m;
  tr.alpha = alpha;
  tr.t = p.t;
  tr.du = p.du;
  tr.beta.assign(count, -INFINITY);
  tr.gamma.assign(count, 0.0);
  tr.weighted_sum.assign(count, 0.0);
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < n; ++j) tr.weighted_sum[i] += alpha[j] * p.u[j][i];
    for (const MultiIndex& K : set.indices()) {
      double b = 0.0;
      double g = 0.0;
      for (std::size_t j = 0; j < n; ++j) {
        b += alpha[j] * (K[j] + 1) * p.u[j][i];
        g += K[j] * std::max(-p.du[j][i], 0.0) / p.u[j][i];
      }
      tr.beta[i] = std::max(tr.beta[i], b);
      tr.gamma[i] = std::max(tr.gamma[i], g);
    }
  }
  const double h = r_m / intervals;
  out.beta_integral = simpson_uniform(tr.beta, h);
  out.gamma_integral = simpson_uniform(tr.gamma, h);
  out.rhs = out.log_base + out.beta_integral + out.gamma_integral;
  out.holds = out.lhs <= out.rhs + 1e-6 * (1.0 + std::abs(out.rhs));
  return out;
}

SuplinfResult suplinf_C(const WeightVector& L, const std::vector<PolyRadius>& R_grid,
                        const std::vector<std::vector<double>>& thetas,
                        std::optional<std::size_t> pivot, int intervals) {
  if (R_grid.empty() || thetas.empty()) throw DomainError("decay constant needs nonempty grids");
  if (intervals < 2) throw DomainError("interval count must be >= 2");
  const std::size_t n = L.size();
  SuplinfResult out;
  struct Local {
    double value = 0.0;
    double endpoint = 0.0;
    double t = 0.0;
    std::size_t j = 0;
  };
  for (const PolyRadius& R : R_grid) {
    if (R.size() != n) throw DomainError("radius dimension mismatch");
    const std::size_t m = checked_pivot(R, pivot);
    const std::vector<double> alpha = ray_alpha(R, m);
    const auto local = parallel_map(thetas.size(), [&](std::size_t a) {
      const RayProfile p = ray_profile(L, alpha, thetas[a], R[m], intervals);
      Local best;
      for (std::size_t j = 0; j < n; ++j) {
        if (alpha[j] == 0.0) continue;
        for (std::size_t i = 0; i < p.t.size(); ++i) {
          const double q = std::max(-p.du[j][i], 0.0) / (alpha[j] * p.u[j][i] * p.u[j][i]);
          if (q > best.value) best = {q, best.endpoint, p.t[i], j};
          if (i + 1 == p.t.size()) best.endpoint = std::max(best.endpoint, q);
        }
      }
      return best;
    });
    SuplinfRow row{R, 0.0, 0.0};
    for (std::size_t a = 0; a < local.size(); ++a) {
      row.endpoint = std::max(row.endpoint, local[a].endpoint);
      if (local[a].value > row.value) {
        row.value = local[a].value;
        if (row.value > out.C) {
          out.C = row.value;
          out.witness_R = R;
          out.witness_t = local[a].t;
          out.witness_theta = thetas[a];
          out.witness_component = local[a].j;
        }
      }
    }
    out.rows.push_back(std::move(row));
  }
  out.vanishing = out.C <= 1e-12 ||
                  (out.rows.size() >= 2 && out.rows.back().endpoint <= 0.01 * out.rows.front().endpoint);
  return out;
}

const char* growth_outcome_name(GrowthOutcome o) {
  switch (o) {
    case GrowthOutcome::WithinBound: return "within bound";
    case GrowthOutcome::ExceedsBound: return "exceeds bound";
    case GrowthOutcome::HypothesesNotMet: return "hypotheses not met";
  }
  return "?";
}

GrowthVerdict growth_verdict(const EntireFunction& f, const WeightVector& L, const PolyRadius& direction,
                             const std::vector<double>& r_seq, int N, const Thm2Config& cfg,
                             const GridSpec& grid, std::optional<std::size_t> pivot) {
  const std::size_t n = L.size();
  if (direction.size() != n) throw DomainError("direction dimension mismatch");
  if (!direction.all_positive()) throw DomainError("ray direction must be positive");
  if (r_seq.empty()) throw DomainError("empty radius sequence");
  if (N < 0) throw DomainError("N must be nonnegative");
  const auto thetas = cfg.thetas.empty() ? theta_grid(n, cfg.seed) : cfg.thetas;

  GrowthVerdict v;
  v.N = N;
  v.pivot = checked_pivot(direction, pivot);
  std::vector<PolyRadius> radii;
  const CPoint origin(n);
  for (double r : r_seq) {
    if (!(r > 0.0)) throw DomainError("radii along the ray must be positive");
    GrowthRow row;
    row.r = r;
    row.R = direction.scaled(r);
    radii.push_back(row.R);
    const double r_m = row.R[v.pivot];
    const std::vector<double> alpha = ray_alpha(row.R, v.pivot);
    row.ln_M = max_modulus(f, row.R, grid).log_value;
    const auto dens = parallel_map(thetas.size(), [&](std::size_t a) {
      auto integrand = [&](double tau) {
        std::vector<double> radius(n);
        for (std::size_t j = 0; j < n; ++j) radius[j] = tau * alpha[j];
        const auto lv = L.values(on_skeleton(origin, radius, thetas[a]));
        double s = 0.0;
        for (std::size_t j = 0; j < n; ++j) s += alpha[j] * lv[j];
        return s;
      };
      return adaptive_simpson(integrand, 0.0, r_m, cfg.rel_tol).value;
    });
    std::size_t arg = 0;
    for (std::size_t a = 1; a < dens.size(); ++a) {
      if (dens[a] > dens[arg]) arg = a;
    }
    row.denominator = dens[arg];
    row.argmax_theta = thetas[arg];
    row.ratio = row.ln_M / row.denominator;
    row.thm2_bound = thm2_integral(L, row.R, cfg).value;
    try {
      row.thm3_rhs = thm3_rhs(f, L, row.R, row.argmax_theta, N, v.pivot).rhs;
    } catch (const DomainError&) {
      row.thm3_rhs = NAN;
    }
    v.rows.push_back(std::move(row));
  }

  v.suplinf = suplinf_C(L, radii, thetas, v.pivot);
  v.C = v.suplinf.C;
  v.vanishing = v.suplinf.vanishing;
  v.bound_general = (v.C + 1.0) * N + 1.0;
  v.bound_vanishing = N + 1.0;
  v.bound = v.vanishing ? v.bound_vanishing : v.bound_general;

  const std::size_t K = v.rows.size();
  const std::size_t tail = (K + 2) / 3;
  v.limsup = -INFINITY;
  for (std::size_t i = K - tail; i < K; ++i) v.limsup = std::max(v.limsup, v.rows[i].ratio);

  bool increasing = K >= 2;
  for (std::size_t i = 1; i < K; ++i) {
    increasing = increasing && v.rows[i].denominator > v.rows[i - 1].denominator;
  }
  const bool diverging = K >= 2 && v.rows.back().denominator >= 2.0 * v.rows.front().denominator;
  std::ostringstream why;
  if (!increasing || !diverging) {
    v.outcome = GrowthOutcome::HypothesesNotMet;
    why << "the weight integral does not increase and at least double along the ray";
  } else if (v.limsup <= v.bound * (1.0 + 1e-6)) {
    v.outcome = GrowthOutcome::WithinBound;
    why << "limsup ratio " << v.limsup << " <= bound " << v.bound;
  } else {
    v.outcome = GrowthOutcome::ExceedsBound;
    why << "limsup ratio " << v.limsup << " > bound " << v.bound;
  }
  v.reason = why.str();
  return v;
}

GapResult sheremeta_gap(int N, double C) {
  if (N < 0) throw DomainError("N must be nonnegative");
  if (!(C >= 0.0) || !std::isfinite(C)) throw DomainError("C must be finite and nonnegative");
  const double nb = N * C + N + 1.0;
  const double ob = (C + 1.0) * (N + 1.0);
  return {nb, ob, ob - nb};
}

ConvexityReport convexity_check(const EntireFunction& f, const PolyRadius& lo, const PolyRadius& hi,
                                int points, const GridSpec& grid) {
  const auto n = static_cast<std::size_t>(f.arity());
  if (lo.size() != n || hi.size() != n) throw DomainError("dimension mismatch");
  if (!lo.all_positive()) throw DomainError("log-radius lattice needs radii > 0");
  if (!lo.dominated_by(hi)) throw DomainError("lower radius must not exceed upper radius");
  if (points < 3) throw DomainError("need at least 3 lattice points per axis");
  ConvexityReport rep;
  rep.points_per_axis = points;
  for (std::size_t j = 0; j < n; ++j) {
    rep.log_r_lo.push_back(std::log(lo[j]));
    rep.log_r_hi.push_back(std::log(hi[j]));
  }
  const auto p = static_cast<std::size_t>(points);
  std::size_t total = 1;
  for (std::size_t j = 0; j < n; ++j) {
    if (total > grid.sample_cap / p) throw DomainError("lattice exceeds the sample cap");
    total *= p;
  }
  auto decode = [&](std::size_t flat) {
    std::vector<std::size_t> idx(n);
    for (std::size_t j = n; j-- > 0;) {
      idx[j] = flat % p;
      flat /= p;
    }
    return idx;
  };
  rep.values = parallel_map(total, [&](std::size_t flat) {
    const auto idx = decode(flat);
    std::vector<double> r(n);
    for (std::size_t j = 0; j < n; ++j) {
      const double s = static_cast<double>(idx[j]) / static_cast<double>(p - 1);
      r[j] = std::exp(rep.log_r_lo[j] + s * (rep.log_r_hi[j] - rep.log_r_lo[j]));
    }
    return std::max(max_modulus(f, PolyRadius(std::move(r)), grid).log_value, 0.0);
  });

  rep.min_second_difference = INFINITY;
  std::size_t stride = 1;
  for (std::size_t axis = n; axis-- > 0;) {
    for (std::size_t flat = 0; flat < total; ++flat) {
      const auto idx = decode(flat);
      if (idx[axis] == 0 || idx[axis] + 1 == p) continue;
      const double d2 = rep.values[flat - stride] - 2.0 * rep.values[flat] + rep.values[flat + stride];
      if (d2 < rep.min_second_difference) {
        rep.min_second_difference = d2;
        rep.worst_position = idx;
        rep.worst_axis = axis;
      }
    }
    stride *= p;
  }
  rep.convex = rep.min_second_difference >= -1e-9;
  return rep;
}

}  // namespace lindex
