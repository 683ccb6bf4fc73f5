#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "lindex/growth.hpp"
#include "lindex/index.hpp"
#include "lindex/parallel.hpp"
#include "lindex/weights.hpp"
#include "report.hpp"

namespace lindex::cli {

namespace {

constexpr const char* kRangeCaveat =
    "sampled verdicts hold on the scanned range only; sampling cannot prove a statement over all of C^n";

struct Result {
  Json body = Json::object();
  std::vector<std::string> warnings;
  std::vector<CsvRow> csv;
  bool has_csv = false;
  int exit_code = 0;
};

GridSpec grid_of(const RunConfig& c) {
  GridSpec g;
  g.angular_resolution = c.grid.angular;
  g.radial_resolution = c.grid.radial;
  g.refinement_depth = c.grid.refinement;
  g.sample_cap = c.grid.sample_cap;
  g.validate();
  return g;
}

EntireFunction function_of(const RunConfig& c, const std::string& command) {
  if (!c.function) throw ConfigError("config /function: required by the " + command + " command");
  return EntireFunction::parse(*c.function, c.arity);
}

WeightVector weights_of(const RunConfig& c) { return WeightVector::parse(c.weights, c.arity, "L"); }

std::optional<std::size_t> pivot_of(const RunConfig& c) {
  if (!c.thm3.pivot) return std::nullopt;
  return static_cast<std::size_t>(*c.thm3.pivot - 1);
}

std::vector<CaseMode> modes_of(const RunConfig& c) {
  if (c.thm2.mode == "both") return {CaseMode::Verbatim, CaseMode::Composed};
  if (c.thm2.mode == "composed") return {CaseMode::Composed};
  return {CaseMode::Verbatim};
}

Thm2Config thm2_of(const RunConfig& c, CaseMode mode) {
  Thm2Config t;
  t.R0 = PolyRadius(c.thm2.base_radius);
  for (const auto& p : c.thm2.permutations) {
    std::vector<int> zero_based;
    for (int v : p) zero_based.push_back(v - 1);
    t.permutations.push_back(std::move(zero_based));
  }
  t.mode = mode;
  t.rel_tol = c.tolerances.quadrature;
  t.seed = c.seed;
  return t;
}

Json one_based(const std::vector<int>& sigma) {
  Json a = Json::array();
  for (int v : sigma) a.push_back(v + 1);
  return a;
}

Json multi_index_out(const MultiIndex& k) {
  Json a = Json::array();
  for (int v : k.entries()) a.push_back(v);
  return a;
}

Json tolerances_out(const RunConfig& c) {
  return {{"dominance_log", 1e-12},
          {"quadrature_rel", c.tolerances.quadrature},
          {"cauchy_rel", 1e-8},
          {"derivative_bound_rel", 1e-6},
          {"convexity_abs", 1e-9}};
}

// ---- parse / eval / deriv ---------------------------------------------------

Json expression_out(const std::string& text, int arity) {
  const Expr e = parse_expression(text, arity);
  return {{"text", text}, {"canonical", unparse(e)}, {"holomorphic", e.holomorphic()}, {"nodes", e.size()}};
}

Result cmd_parse(const RunConfig& c) {
  Result r;
  if (c.function) {
    Json f = expression_out(*c.function, c.arity);
    if (!f["holomorphic"].get<bool>()) {
      throw DomainError("function " + *c.function + " uses abs, re or im and is not entire");
    }
    r.body["function"] = std::move(f);
  }
  Json w = Json::array();
  for (const auto& t : c.weights) w.push_back(expression_out(t, c.arity));
  r.body["weights"] = std::move(w);
  return r;
}

Result cmd_eval(const RunConfig& c) {
  Result r;
  const EntireFunction f = function_of(c, "eval");
  const WeightVector L = weights_of(c);
  Json rows = Json::array();
  for (const auto& p : c.points) {
    const CPoint z(p);
    const Scaled v = f.eval_scaled(z);
    Json w = Json::array();
    for (std::size_t j = 0; j < L.size(); ++j) {
      const double lv = L[j].log_value(z);
      w.push_back({{"value", num(std::exp(lv))}, {"ln_value", num(lv)}});
    }
    rows.push_back({{"z", point_out(z)}, {"F", complex_out(v.value())}, {"ln_abs_F", num(v.log_abs())},
                    {"weights", std::move(w)}});
  }
  r.body["points"] = std::move(rows);
  return r;
}

Result cmd_deriv(const RunConfig& c) {
  Result r;
  const EntireFunction f = function_of(c, "deriv");
  const WeightVector L = weights_of(c);
  Json rows = Json::array();
  double worst = 0.0;
  for (const auto& p : c.points) {
    const CPoint z(p);
    const PolyRadius rho = default_cauchy_radius(L, z);
    for (const auto& entries : c.multi_indices) {
      const MultiIndex K(entries);
      Expr t = f.ast();
      for (std::size_t j = 0; j < K.size(); ++j) {
        for (int q = 0; q < K[j]; ++q) t = symbolic_partial(t, static_cast<int>(j));
      }
      const Scaled sym = Program(t, c.arity).run_single(z.coords());
      const CauchyResult cr = derivative_cauchy(f, z, K, rho);
      const Complex sv = sym.value();
      const double rel = std::abs(cr.value - sv) / (1.0 + std::abs(sv));
      worst = std::max(worst, rel);
      Json res = Json::array();
      for (int m : cr.resolution) res.push_back(m);
      rows.push_back({{"z", point_out(z)},
                      {"K", multi_index_out(K)},
                      {"symbolic", complex_out(sv)},
                      {"cauchy", complex_out(cr.value)},
                      {"cauchy_convergence", num(cr.convergence_estimate)},
                      {"cauchy_radius", radius_out(rho)},
                      {"cauchy_resolution", std::move(res)},
                      {"relative_difference", num(rel)},
                      {"normalized", num(normalized_derivative(f, L, z, K))}});
    }
  }
  r.body["derivatives"] = std::move(rows);
  r.body["max_relative_difference"] = num(worst);
  r.body["tolerance"] = 1e-8;
  if (worst > 1e-8) {
    r.warnings.push_back("symbolic and Cauchy derivatives differ by more than 1e-8 relative");
  }
  return r;
}

// ---- index ------------------------------------------------------------------

std::string describe(const PointSet& s) {
  std::ostringstream d;
  if (s.kind == "polydisc") {
    d << "polydisc grid, " << s.radial << " radial x " << s.angular << " angular per axis, radius (";
    for (std::size_t j = 0; j < s.radius.size(); ++j) d << (j ? ", " : "") << format_number(s.radius[j]);
    d << ")";
  } else if (s.kind == "segment") {
    d << "segment of " << s.count << " points";
  } else {
    d << s.points.size() << " listed points";
  }
  return d.str();
}

Json index_out(const IndexEstimate& e, const PointSet& set) {
  Json j;
  j["bounded"] = e.bounded;
  if (e.bounded) j["candidate_N"] = e.N;
  else j["candidate_N"] = "unbounded within scan";
  j["largest_point_order"] = e.N;
  j["m_max"] = e.m_max;
  j["j_max"] = e.j_max;
  j["worst_margin"] = num(e.worst_margin);
  j["witness"] = {{"z", point_out(e.witness_point)}, {"J", multi_index_out(e.witness_J)}};
  j["scanned"] = {{"points", e.grid_size}, {"grid", describe(set)}};
  Json hist = Json::object();
  std::map<int, int> counts;
  for (int o : e.point_orders) ++counts[o];
  for (auto [o, k] : counts) hist[std::to_string(o)] = k;
  j["order_histogram"] = std::move(hist);
  return j;
}

Result cmd_index(const RunConfig& c) {
  Result r;
  const EntireFunction f = function_of(c, "index");
  const WeightVector L = weights_of(c);
  const auto pts = expand(c.z_grid, c.arity, c.grid.sample_cap);
  const IndexEstimate e = estimate_joint_index(f, L, pts, c.index.m_max, c.index.j_max);
  r.body["index"] = index_out(e, c.z_grid);
  if (!e.bounded) r.exit_code = 1;
  if (c.local_behavior.enabled) {
    const auto centers = expand(c.local_behavior.centers, c.arity, c.grid.sample_cap);
    const LocalBehaviorReport lb =
        local_behavior_ratio(f, L, PolyRadius(c.local_behavior.inner), PolyRadius(c.local_behavior.outer),
                             centers, grid_of(c));
    Json trace = Json::array();
    for (const auto& row : lb.trace) {
      trace.push_back({{"z0", point_out(row.z0)},
                       {"modulus", num(row.modulus)},
                       {"ln_max_inner", num(row.log_max_inner)},
                       {"ln_max_outer", num(row.log_max_outer)},
                       {"ln_ratio", num(row.log_ratio)}});
    }
    r.body["local_behavior"] = {{"inner", radius_out(lb.R_inner)},
                                {"outer", radius_out(lb.R_outer)},
                                {"p1_estimate", num(lb.p1_estimate)},
                                {"ln_p1", num(lb.log_p1)},
                                {"growing", lb.growing},
                                {"diagnostic", lb.diagnostic},
                                {"trace", std::move(trace)}};
    if (lb.growing) r.exit_code = 1;
  }
  r.body["tolerances"] = tolerances_out(c);
  r.warnings.push_back(kRangeCaveat);
  return r;
}

// ---- classify ---------------------------------------------------------------

Json class_out(const ClassVerdict& v, bool q_class) {
  Json j;
  j["verdict"] = verdict_name(v.verdict);
  j["extremal_value"] = num(v.extremal_value);
  j["ln_extremal"] = num(v.log_extremal);
  if (q_class) {
    j["Lambda1"] = numbers_out(v.lambda1);
    j["Lambda2"] = numbers_out(v.lambda2);
  }
  Json w = Json::object();
  w["component"] = v.witness_component + 1;
  if (v.witness_point) w["z0"] = point_out(*v.witness_point);
  if (v.witness_radius) w["R"] = radius_out(*v.witness_radius);
  if (!v.witness_theta_max.empty()) {
    w["theta_max"] = numbers_out(v.witness_theta_max);
    w["theta_min"] = numbers_out(v.witness_theta_min);
  }
  j["witness"] = std::move(w);
  j["scanned_range"] = v.scanned_range;
  j["reason"] = v.reason;
  j["thresholds"] = {{"blowup", v.thresholds.blowup}, {"growth_factor", v.thresholds.growth_factor}};
  Json trace = Json::array();
  for (const auto& t : v.trace) trace.push_back({{"parameter", num(t.parameter)}, {"ln_value", num(t.log_value)}});
  j["trace"] = std::move(trace);
  return j;
}

Result cmd_classify(const RunConfig& c) {
  Result r;
  const WeightVector L = weights_of(c);
  const GridSpec g = grid_of(c);
  const ClassThresholds th{c.classify.blowup, c.classify.growth_factor};
  if (c.classify.which != "K") {
    const auto centers = expand(c.z_grid, c.arity, c.grid.sample_cap);
    const ClassVerdict q = qn_scan(L, PolyRadius(c.classify.radius), centers, g, th);
    r.body["Q"] = class_out(q, true);
    if (q.verdict == Verdict::Violated) r.exit_code = 1;
  }
  if (c.classify.which != "Q") {
    std::vector<PolyRadius> radii;
    for (double x : c.classify.r_grid) radii.push_back(PolyRadius::filled(L.size(), x));
    const ClassVerdict k = kn_scan(L, radii, g, th);
    r.body["K"] = class_out(k, false);
    if (k.verdict == Verdict::Violated) r.exit_code = 1;
  }
  if (c.prop1.enabled) {
    std::vector<Expr> raw;
    for (const auto& t : c.prop1.components) raw.push_back(parse_expression(t, c.arity));
    const auto domain = expand(c.prop1.domain, c.arity, c.grid.sample_cap);
    const Prop1Result p = prop1_check(raw, c.prop1.c, domain);
    std::vector<PolyRadius> radii;
    for (const auto& R : c.prop1.radii) radii.emplace_back(R);
    const auto rows = prop1_envelope_scan(p, radii, domain, g);
    Json env = Json::array();
    bool contained = true;
    for (const auto& row : rows) {
      contained = contained && row.contained;
      env.push_back({{"R", radius_out(row.R)},
                     {"envelope", num(row.envelope)},
                     {"lambda2", num(row.lambda2)},
                     {"lambda1", num(row.lambda1)},
                     {"contained", row.contained}});
    }
    r.body["prop1"] = {{"P", num(p.P)},
                       {"c", num(p.c)},
                       {"witness", {{"z", point_out(p.witness)},
                                    {"component", p.witness_component + 1},
                                    {"variable", p.witness_variable + 1}}},
                       {"envelope_contained", contained},
                       {"rows", std::move(env)}};
    if (!contained) r.exit_code = 1;
  }
  if (c.probe.enabled) {
    const ProbeResult pr = qn_growth_probe(L, CPoint(c.probe.center), static_cast<std::size_t>(c.probe.component - 1),
                                           c.probe.r_list, c.probe.theta, c.probe.bound);
    Json rows = Json::array();
    for (const auto& row : pr.rows) {
      rows.push_back({{"r", num(row.r)}, {"product", num(row.product)}, {"ln_product", num(row.log_product)}});
    }
    r.body["probe"] = {{"consistent", pr.consistent}, {"diagnostic", pr.diagnostic}, {"rows", std::move(rows)}};
    if (!pr.consistent) {
      r.warnings.push_back("probe: r l_j does not diverge over r_list; bounded index cannot hold for this weight");
    }
  }
  r.warnings.push_back(kRangeCaveat);
  return r;
}

// ---- growth / verdict -------------------------------------------------------

struct ResolvedN {
  int N = 0;
  bool estimated = false;
  bool bounded = true;
};

ResolvedN resolve_N(const RunConfig& c, const EntireFunction& f, const WeightVector& L) {
  if (c.thm3.N) return {*c.thm3.N, false, true};
  const auto pts = expand(c.z_grid, c.arity, c.grid.sample_cap);
  const IndexEstimate e = estimate_joint_index(f, L, pts, c.index.m_max, c.index.j_max);
  return {e.bounded ? e.N : c.index.m_max, true, e.bounded};
}

Json growth_rows_out(const GrowthVerdict& v) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < v.rows.size(); ++i) {
    const auto& row = v.rows[i];
    rows.push_back({{"r", num(row.r)},
                    {"R", radius_out(row.R)},
                    {"ln_M", num(row.ln_M)},
                    {"denominator", num(row.denominator)},
                    {"argmax_theta", numbers_out(row.argmax_theta)},
                    {"ratio", num(row.ratio)},
                    {"thm2_bound", num(row.thm2_bound)},
                    {"thm3_rhs", num(row.thm3_rhs)},
                    {"C_estimate", num(v.suplinf.rows[i].value)},
                    {"C_endpoint", num(v.suplinf.rows[i].endpoint)}});
  }
  return rows;
}

void append_csv(Result& r, std::size_t ray_id, const GrowthVerdict& v) {
  r.has_csv = true;
  for (std::size_t i = 0; i < v.rows.size(); ++i) {
    const auto& row = v.rows[i];
    r.csv.push_back({ray_id, row.r, row.ln_M, row.thm2_bound, row.thm3_rhs, row.ratio, v.suplinf.rows[i].value});
  }
}

Result cmd_growth(const RunConfig& c, bool verdict_mode) {
  Result r;
  const EntireFunction f = function_of(c, verdict_mode ? "verdict" : "growth");
  const WeightVector L = weights_of(c);
  const GridSpec g = grid_of(c);
  const ResolvedN rn = resolve_N(c, f, L);
  r.body["N"] = {{"value", rn.N}, {"source", rn.estimated ? "index estimate on z_grid" : "config"}};
  if (!rn.bounded) {
    r.warnings.push_back("index unbounded within the z_grid scan; N = m_max used for the derivative bound");
    if (verdict_mode) r.exit_code = 1;
  }
  const auto modes = modes_of(c);
  Json rays = Json::array();
  for (std::size_t ray = 0; ray < c.rays.size(); ++ray) {
    const PolyRadius dir(c.rays[ray]);
    Json jr;
    jr["ray_id"] = ray + 1;
    jr["direction"] = radius_out(dir);
    const GrowthVerdict v = growth_verdict(f, L, dir, c.r_seq, rn.N, thm2_of(c, modes.front()), g, pivot_of(c));
    if (!verdict_mode) {
      Json scans = Json::object();
      for (CaseMode m : modes) {
        const Thm2Scan s = thm2_ratio_scan(f, L, dir, c.r_seq, thm2_of(c, m), g);
        Json rows = Json::array();
        for (const auto& row : s.rows) {
          rows.push_back({{"r", num(row.r)},
                          {"norm_R", num(row.norm)},
                          {"ln_M", num(row.ln_M)},
                          {"bound", num(row.bound)},
                          {"ratio", num(row.ratio)},
                          {"sigma", one_based(row.sigma)},
                          {"theta", numbers_out(row.theta)}});
        }
        scans[case_mode_name(m)] = {{"tail_growth", num(s.tail_growth)},
                                    {"step_growth", num(s.step_growth)},
                                    {"consistent", s.consistent},
                                    {"diverging", s.diverging},
                                    {"rows", std::move(rows)}};
        if (!s.consistent) r.exit_code = 1;
      }
      jr["thm2"] = std::move(scans);
    }
    jr["pivot"] = v.pivot + 1;
    jr["C"] = num(v.C);
    jr["C_vanishing"] = v.vanishing;
    jr["rows"] = growth_rows_out(v);
    if (verdict_mode) {
      jr["limsup_ratio"] = num(v.limsup);
      jr["bound"] = num(v.bound);
      jr["bound_general"] = num(v.bound_general);
      jr["bound_vanishing"] = num(v.bound_vanishing);
      jr["outcome"] = growth_outcome_name(v.outcome);
      jr["reason"] = v.reason;
      if (v.outcome == GrowthOutcome::ExceedsBound) r.exit_code = 1;
      if (v.outcome == GrowthOutcome::HypothesesNotMet) {
        r.warnings.push_back("ray " + std::to_string(ray + 1) + ": " + v.reason);
      }
    }
    append_csv(r, ray + 1, v);
    rays.push_back(std::move(jr));
  }
  r.body["rays"] = std::move(rays);
  r.body["tolerances"] = tolerances_out(c);
  r.warnings.push_back("limsup values are estimated from the tail of a finite radius sequence");
  return r;
}

// ---- gap / convexity / sweep ------------------------------------------------

Result cmd_gap(const RunConfig& c) {
  Result r;
  Json rows = Json::array();
  for (int N : c.gap.N) {
    for (double C : c.gap.C) {
      const GapResult g = sheremeta_gap(N, C);
      rows.push_back({{"N", N},
                      {"C", num(C)},
                      {"new_bound", num(g.new_bound)},
                      {"old_bound", num(g.old_bound)},
                      {"gap", num(g.gap)},
                      {"strict_improvement", g.gap > 0.0}});
    }
  }
  r.body["rows"] = std::move(rows);
  return r;
}

Result cmd_convexity(const RunConfig& c) {
  Result r;
  const EntireFunction f = function_of(c, "convexity");
  const ConvexityReport rep =
      convexity_check(f, PolyRadius(c.convexity.lo), PolyRadius(c.convexity.hi), c.convexity.points, grid_of(c));
  Json pos = Json::array();
  for (std::size_t i : rep.worst_position) pos.push_back(i);
  r.body = {{"convex", rep.convex},
            {"min_second_difference", num(rep.min_second_difference)},
            {"worst_axis", rep.worst_axis + 1},
            {"worst_position", std::move(pos)},
            {"points_per_axis", rep.points_per_axis},
            {"ln_r_lo", numbers_out(rep.log_r_lo)},
            {"ln_r_hi", numbers_out(rep.log_r_hi)},
            {"values", numbers_out(rep.values)},
            {"tolerance", 1e-9}};
  if (!rep.convex) r.exit_code = 1;
  return r;
}

Result cmd_sweep(const RunConfig& c) {
  Result r;
  const WeightVector L = weights_of(c);
  std::vector<PolyRadius> radii;
  if (!c.sweep.radii.empty()) {
    for (const auto& R : c.sweep.radii) radii.emplace_back(R);
  } else {
    for (const auto& dir : c.rays) {
      for (double x : c.r_seq) radii.push_back(PolyRadius(dir).scaled(x));
    }
  }
  Json rows = Json::array();
  bool below = false;
  for (const PolyRadius& R : radii) {
    Json per = Json::array();
    for (CaseMode m : {CaseMode::Verbatim, CaseMode::Composed}) {
      const auto results = thm2_base_sweep(L, R, thm2_of(c, m), c.sweep.factors);
      for (std::size_t i = 0; i < results.size(); ++i) {
        below = below || results[i].below_base;
        per.push_back({{"mode", case_mode_name(m)},
                       {"base_factor", num(c.sweep.factors[i])},
                       {"value", num(results[i].value)},
                       {"sigma", one_based(results[i].sigma)},
                       {"theta", numbers_out(results[i].theta)},
                       {"below_base", results[i].below_base}});
      }
    }
    rows.push_back({{"R", radius_out(R)}, {"integrals", std::move(per)}});
  }
  r.body["rows"] = std::move(rows);
  if (below) r.warnings.push_back("some radii lie below the base radius; the estimate is meant for large R");
  return r;
}

}  // namespace

Outcome execute(const std::string& command, const RunConfig& config, bool fixed_clock) {
  const auto start = std::chrono::steady_clock::now();
  Result r;
  if (command == "parse") r = cmd_parse(config);
  else if (command == "eval") r = cmd_eval(config);
  else if (command == "deriv") r = cmd_deriv(config);
  else if (command == "index") r = cmd_index(config);
  else if (command == "classify") r = cmd_classify(config);
  else if (command == "growth") r = cmd_growth(config, false);
  else if (command == "verdict") r = cmd_growth(config, true);
  else if (command == "gap") r = cmd_gap(config);
  else if (command == "convexity") r = cmd_convexity(config);
  else if (command == "sweep") r = cmd_sweep(config);
  else throw ConfigError("unknown command " + command);
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  Outcome o;
  o.envelope = make_envelope(command, config, std::move(r.body), r.warnings, fixed_clock, secs);
  if (r.has_csv) o.csv = csv_table(r.csv);
  o.exit_code = r.exit_code;
  return o;
}

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Numerical laboratory for entire functions of bounded L-index in joint variables", kToolName};
  Options opt;
  app.add_option("command", opt.command, "Subcommand")->required()->check(CLI::IsMember(commands()));
  app.add_option("--config", opt.config_path, "JSON run configuration")->required();
  app.add_option("--out", opt.out_path, "Write the report envelope here instead of standard output");
  app.add_option("--csv", opt.csv_path, "Write the per-ray growth series here");
  app.add_option("--seed", opt.seed, "Override the config seed");
  app.add_option("--threads", opt.threads, "Worker threads")->check(CLI::Range(1u, 256u));
  app.add_flag("--fixed-clock", opt.fixed_clock, "Zero timestamps and wall time (reproducible output)");

  std::vector<std::string> argv(args.rbegin(), args.rend());
  try {
    app.parse(argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "lindex: " << e.what() << "\n";
    return 2;
  }

  try {
    RunConfig config = load_config(opt.config_path);
    if (opt.seed) config.seed = *opt.seed;
    set_thread_count(opt.threads);
    const Outcome o = execute(opt.command, config, opt.fixed_clock);
    const std::string text = o.envelope.dump(2) + "\n";
    if (opt.out_path) {
      std::ofstream f(*opt.out_path, std::ios::binary);
      if (!f) throw ConfigError("cannot write " + *opt.out_path);
      f << text;
    } else {
      out << text;
    }
    if (opt.csv_path) {
      if (o.csv.empty()) {
        err << "lindex: the " << opt.command << " command writes no CSV series\n";
      } else {
        std::ofstream f(*opt.csv_path, std::ios::binary);
        if (!f) throw ConfigError("cannot write " + *opt.csv_path);
        f << o.csv;
      }
    }
    return o.exit_code;
  } catch (const ConfigError& e) {
    err << "lindex: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "lindex: parse error: " << e.what() << "\n";
    return 2;
  } catch (const DomainError& e) {
    err << "lindex: invalid input: " << e.what() << "\n";
    return 2;
  } catch (const NumericalError& e) {
    err << "lindex: numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "lindex: numerical failure: " << e.what() << "\n";
    return 3;
  }
}

}  // namespace lindex::cli
