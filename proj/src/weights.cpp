#include "lindex/weights.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "lindex/error.hpp"
#include "lindex/parallel.hpp"

namespace lindex {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Satisfied: return "satisfied";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

std::vector<LambdaPair> lambda_bounds(const WeightVector& L, const CPoint& z0, const PolyRadius& R,
                                      const GridSpec& grid) {
  const std::size_t n = L.size();
  if (z0.size() != n || R.size() != n) throw DomainError("lambda bounds: dimension mismatch");
  const std::vector<double> log_center = L.log_values(z0);
  std::vector<double> rho(n);
  for (std::size_t j = 0; j < n; ++j) {
    rho[j] = R[j] == 0.0 ? 0.0 : std::exp(std::log(R[j]) - log_center[j]);
  }
  const std::vector<CPoint> samples = polydisc_samples(z0, PolyRadius(rho), grid);

  std::vector<LambdaPair> out(n);
  for (std::size_t j = 0; j < n; ++j) {
    out[j].argmin = z0;
    out[j].argmax = z0;
  }
  for (const CPoint& z : samples) {
    const std::vector<double> lv = L.log_values(z);
    for (std::size_t j = 0; j < n; ++j) {
      const double d = lv[j] - log_center[j];
      if (d < out[j].log_lambda1) {
        out[j].log_lambda1 = d;
        out[j].argmin = z;
      }
      if (d > out[j].log_lambda2) {
        out[j].log_lambda2 = d;
        out[j].argmax = z;
      }
    }
  }
  for (auto& p : out) {
    p.lambda1 = std::exp(p.log_lambda1);
    p.lambda2 = std::exp(p.log_lambda2);
  }
  return out;
}

namespace {

std::string describe_radius(const PolyRadius& R) {
  std::ostringstream s;
  s << "(";
  for (std::size_t j = 0; j < R.size(); ++j) s << (j ? ", " : "") << R[j];
  s << ")";
  return s.str();
}

}  // namespace

ClassVerdict qn_scan(const WeightVector& L, const PolyRadius& R, const std::vector<CPoint>& z0_grid,
                     const GridSpec& grid, const ClassThresholds& thresholds) {
  if (z0_grid.empty()) throw DomainError("Q-class scan needs a nonempty z0 grid");
  grid.validate();
  const std::size_t n = L.size();
  const auto per_point = parallel_map(z0_grid.size(), [&](std::size_t i) {
    return lambda_bounds(L, z0_grid[i], R, grid);
  });

  ClassVerdict v;
  v.thresholds = thresholds;
  std::vector<double> log_l1(n, 0.0);
  std::vector<double> log_l2(n, 0.0);
  double worst = 0.0;
  double max_modulus = 0.0;
  for (std::size_t i = 0; i < z0_grid.size(); ++i) {
    double point_worst = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
      const LambdaPair& p = per_point[i][j];
      log_l1[j] = std::min(log_l1[j], p.log_lambda1);
      log_l2[j] = std::max(log_l2[j], p.log_lambda2);
      const double e = std::max(p.log_lambda2, -p.log_lambda1);
      point_worst = std::max(point_worst, e);
      if (e > worst) {
        worst = e;
        v.witness_point = z0_grid[i];
        v.witness_component = j;
      }
    }
    double modulus = 0.0;
    for (double m : z0_grid[i].moduli()) modulus = std::max(modulus, m);
    max_modulus = std::max(max_modulus, modulus);
    v.trace.push_back({modulus, point_worst});
  }
  for (std::size_t j = 0; j < n; ++j) {
    v.lambda1.push_back(std::exp(log_l1[j]));
    v.lambda2.push_back(std::exp(log_l2[j]));
  }
  v.log_extremal = worst;
  v.extremal_value = std::exp(worst);
  v.witness_radius = R;
  std::ostringstream range;
  range << z0_grid.size() << " centers with max |z0_j| <= " << max_modulus << ", R = "
        << describe_radius(R) << ", disc grid " << grid.radial_resolution << " radial x "
        << grid.angular_resolution << " angular";
  v.scanned_range = range.str();
  if (worst > std::log(thresholds.blowup)) {
    v.verdict = Verdict::Violated;
    std::ostringstream why;
    why << "distortion of l_" << v.witness_component + 1 << " reaches e^" << worst
        << " (threshold " << thresholds.blowup << ") at z0 = " << format_point(*v.witness_point);
    v.reason = why.str();
  } else {
    v.verdict = Verdict::Satisfied;
    v.reason = "distortion stays below the blowup threshold within the scanned range";
  }
  return v;
}

ClassVerdict kn_scan(const WeightVector& L, const std::vector<PolyRadius>& R_grid,
                     const GridSpec& grid, const ClassThresholds& thresholds) {
  if (R_grid.empty()) throw DomainError("K-class scan needs a nonempty radius grid");
  grid.validate();
  const std::size_t n = L.size();
  const auto angles = angle_grid(n, grid.angular_resolution, grid.sample_cap);

  struct RadiusResult {
    double log_c = 0.0;
    std::size_t component = 0;
    std::size_t arg_hi = 0;
    std::size_t arg_lo = 0;
  };
  const auto per_radius = parallel_map(R_grid.size(), [&](std::size_t i) {
    const PolyRadius& R = R_grid[i];
    if (R.size() != n) throw DomainError("K-class scan: radius dimension mismatch");
    std::vector<double> hi(n, -INFINITY);
    std::vector<double> lo(n, INFINITY);
    std::vector<std::size_t> arg_hi(n, 0);
    std::vector<std::size_t> arg_lo(n, 0);
    const CPoint origin(n);
    for (std::size_t a = 0; a < angles.size(); ++a) {
      const std::vector<double> lv = L.log_values(on_skeleton(origin, R.radii(), angles[a]));
      for (std::size_t j = 0; j < n; ++j) {
        if (lv[j] > hi[j]) { hi[j] = lv[j]; arg_hi[j] = a; }
        if (lv[j] < lo[j]) { lo[j] = lv[j]; arg_lo[j] = a; }
      }
    }
    RadiusResult r;
    r.log_c = -1.0;
    for (std::size_t j = 0; j < n; ++j) {
      if (hi[j] - lo[j] > r.log_c) {
        r.log_c = hi[j] - lo[j];
        r.component = j;
        r.arg_hi = arg_hi[j];
        r.arg_lo = arg_lo[j];
      }
    }
    return r;
  });

  ClassVerdict v;
  v.thresholds = thresholds;
  std::size_t best = 0;
  for (std::size_t i = 0; i < R_grid.size(); ++i) {
    v.trace.push_back({R_grid[i].norm(), per_radius[i].log_c});
    if (per_radius[i].log_c > per_radius[best].log_c) best = i;
  }
  auto set_witness = [&](std::size_t i) {
    v.witness_radius = R_grid[i];
    v.witness_component = per_radius[i].component;
    v.witness_theta_max = angles[per_radius[i].arg_hi];
    v.witness_theta_min = angles[per_radius[i].arg_lo];
  };
  v.log_extremal = per_radius[best].log_c;
  v.extremal_value = std::exp(v.log_extremal);
  set_witness(best);

  std::ostringstream range;
  range << R_grid.size() << " radii with ||R|| from " << R_grid.front().norm() << " to "
        << R_grid.back().norm() << ", " << grid.angular_resolution << " angles per axis";
  v.scanned_range = range.str();

  const double log_blowup = std::log(thresholds.blowup);
  const double log_growth = std::log(thresholds.growth_factor);
  std::ostringstream why;
  v.verdict = Verdict::Satisfied;
  if (v.log_extremal > log_blowup) {
    v.verdict = Verdict::Violated;
    why << "angular ratio reaches e^" << v.log_extremal << " above the blowup threshold "
        << thresholds.blowup;
  } else {
    for (std::size_t i = 1; i < per_radius.size(); ++i) {
      if (per_radius[i].log_c - per_radius[i - 1].log_c > log_growth) {
        v.verdict = Verdict::Violated;
        set_witness(i);
        why << "angular ratio grows by more than " << thresholds.growth_factor
            << "x between consecutive radii";
        break;
      }
    }
    if (v.verdict != Verdict::Violated && per_radius.size() >= 3) {
      bool nondecreasing = true;
      for (std::size_t i = 1; i < per_radius.size(); ++i) {
        nondecreasing = nondecreasing && per_radius[i].log_c >= per_radius[i - 1].log_c;
      }
      if (nondecreasing && per_radius.back().log_c - per_radius.front().log_c > log_growth) {
        v.verdict = Verdict::Violated;
        set_witness(per_radius.size() - 1);
        why << "angular ratio grows steadily along the radius grid, by more than "
            << thresholds.growth_factor << "x overall";
      }
    }
  }
  if (v.verdict == Verdict::Satisfied) {
    why << "angular ratio stays bounded within the scanned radii";
  }
  v.reason = why.str();
  return v;
}

Complex wirtinger_derivative(const Expr& l, const CPoint& z, int m) {
  const auto idx = static_cast<std::size_t>(m);
  if (idx >= z.size()) throw DomainError("Wirtinger derivative: variable out of range");
  const double h = 1e-5 * (1.0 + std::abs(z[idx]));
  auto shifted = [&](Complex delta) {
    CPoint w = z;
    w[idx] += delta;
    return evaluate(l, w);
  };
  const Complex dx = (shifted({h, 0.0}) - shifted({-h, 0.0})) / (2.0 * h);
  const Complex dy = (shifted({0.0, h}) - shifted({0.0, -h})) / (2.0 * h);
  return 0.5 * (dx - Complex(0.0, 1.0) * dy);
}

double Prop1Result::envelope(const PolyRadius& R) const { return std::exp(P / c * R.norm()); }

Prop1Result prop1_check(const std::vector<Expr>& l_raw, double c, const std::vector<CPoint>& domain_grid) {
  if (!(c > 0.0) || !std::isfinite(c)) throw DomainError("the constant c must be positive");
  if (l_raw.empty()) throw DomainError("no weight components given");
  if (domain_grid.empty()) throw DomainError("empty domain grid");
  const std::size_t n = l_raw.size();
  const int arity = static_cast<int>(n);

  std::vector<std::vector<Expr>> partials(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (l_raw[j].variables_used() > arity) throw DomainError("component uses more variables than arity");
    if (l_raw[j].holomorphic()) {
      for (std::size_t m = 0; m < n; ++m) partials[j].push_back(symbolic_partial(l_raw[j], static_cast<int>(m)));
    }
  }

  struct Local {
    double value = -1.0;
    std::size_t j = 0;
    std::size_t m = 0;
  };
  const auto local = parallel_map(domain_grid.size(), [&](std::size_t i) {
    const CPoint& z = domain_grid[i];
    if (z.size() != n) throw DomainError("domain grid point has the wrong dimension");
    Local best;
    for (std::size_t j = 0; j < n; ++j) {
      const double denom = c + std::abs(evaluate(l_raw[j], z));
      for (std::size_t m = 0; m < n; ++m) {
        const Complex d = l_raw[j].holomorphic() ? evaluate(partials[j][m], z)
                                                 : wirtinger_derivative(l_raw[j], z, static_cast<int>(m));
        const double q = std::abs(d) / denom;
        if (!std::isfinite(q)) throw NumericalError("derivative evaluation failed at z = " + format_point(z));
        if (q > best.value) best = {q, j, m};
      }
    }
    return best;
  });
  std::size_t arg = 0;
  for (std::size_t i = 1; i < local.size(); ++i) {
    if (local[i].value > local[arg].value) arg = i;
  }

  std::vector<WeightComponent> star;
  for (const Expr& l : l_raw) star.emplace_back(Expr::literal(c) + Expr::unary(Op::Abs, l), arity);
  return Prop1Result{.P = local[arg].value,
                     .c = c,
                     .witness = domain_grid[arg],
                     .witness_component = local[arg].j,
                     .witness_variable = local[arg].m,
                     .star = WeightVector(std::move(star), "c + |l|")};
}

std::vector<EnvelopeRow> prop1_envelope_scan(const Prop1Result& prop, const std::vector<PolyRadius>& R_grid,
                                             const std::vector<CPoint>& z0_grid, const GridSpec& grid) {
  if (z0_grid.empty()) throw DomainError("empty z0 grid");
  std::vector<EnvelopeRow> rows;
  for (const PolyRadius& R : R_grid) {
    const auto per_point = parallel_map(z0_grid.size(), [&](std::size_t i) {
      return lambda_bounds(prop.star, z0_grid[i], R, grid);
    });
    EnvelopeRow row{R, prop.envelope(R), 1.0, 1.0, true};
    for (const auto& pairs : per_point) {
      for (const LambdaPair& p : pairs) {
        row.lambda2 = std::max(row.lambda2, p.lambda2);
        row.lambda1 = std::min(row.lambda1, p.lambda1);
      }
    }
    row.contained = row.lambda2 <= row.envelope * (1.0 + 1e-6) &&
                    row.lambda1 >= (1.0 - 1e-6) / row.envelope;
    rows.push_back(std::move(row));
  }
  return rows;
}

ProbeResult qn_growth_probe(const WeightVector& L, const CPoint& z_star, std::size_t j,
                            const std::vector<double>& r_list, double theta, double bound) {
  if (j >= L.size() || z_star.size() != L.size()) throw DomainError("probe: index out of range");
  if (r_list.empty()) throw DomainError("probe: empty radius list");
  for (std::size_t i = 0; i < r_list.size(); ++i) {
    if (!(r_list[i] > 0.0) || (i > 0 && !(r_list[i] > r_list[i - 1]))) {
      throw DomainError("probe radii must be positive and increasing");
    }
  }
  ProbeResult out;
  const Complex dir = std::polar(1.0, theta);
  for (double r : r_list) {
    CPoint z = z_star;
    z[j] += r * dir;
    const double lp = std::log(r) + L[j].log_value(z);
    out.rows.push_back({r, std::exp(lp), lp});
  }
  const std::size_t tail = std::max<std::size_t>(2, (out.rows.size() + 2) / 3);
  const std::size_t start = out.rows.size() > tail ? out.rows.size() - tail : 0;
  bool increasing = true;
  for (std::size_t i = start + 1; i < out.rows.size(); ++i) {
    increasing = increasing && out.rows[i].log_product > out.rows[i - 1].log_product;
  }
  const bool large = out.rows.back().log_product >= std::log(bound);
  out.consistent = increasing && large;
  std::ostringstream d;
  if (out.consistent) {
    d << "r l_j increases through the tail and exceeds " << bound << ": consistent with Q^n";
  } else {
    d << "r l_j stays bounded (last value " << out.rows.back().product << ", bound " << bound
      << "): evidence against Q^n membership";
  }
  out.diagnostic = d.str();
  return out;
}

}  // namespace lindex
