// Acceptance suite: one PASS/FAIL line per criterion, tolerances pinned in
// the line text. Exit status is the number of failed lines (capped at 1).

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <sstream>
#include <string>

#include "lindex/catalog.hpp"
#include "lindex/cli.hpp"
#include "lindex/growth.hpp"
#include "lindex/index.hpp"
#include "lindex/numeric.hpp"
#include "lindex/weights.hpp"
#include "oracles.hpp"

using namespace lindex;

namespace {

using Clock = std::chrono::steady_clock;

int failures = 0;

void report(const std::string& id, bool pass, const std::string& what, const std::string& detail) {
  std::printf("%s [%s] %s: %s\n", pass ? "PASS" : "FAIL", id.c_str(), what.c_str(), detail.c_str());
  std::fflush(stdout);
  if (!pass) ++failures;
}

// Runs a criterion body; an escaped exception is a failure of that line.
void guarded(const std::string& id, const std::string& what, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    report(id, false, what, std::string("exception: ") + e.what());
  }
}

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

template <typename... Args>
std::string fmt(const char* pattern, Args... args) {
  char buf[512];
  std::snprintf(buf, sizeof buf, pattern, args...);
  return buf;
}

const std::vector<double> kDoublings{2, 4, 8, 16, 32, 64, 128};

WeightVector weights_of(std::vector<std::string> texts) {
  const int n = static_cast<int>(texts.size());
  return WeightVector::parse(texts, n);
}

std::vector<CPoint> disc(std::size_t n, double radius, int radial, int angular) {
  GridSpec g;
  g.radial_resolution = radial;
  g.angular_resolution = angular;
  return polydisc_samples(CPoint(n), PolyRadius::filled(n, radius), g);
}

// ---- 1 ----------------------------------------------------------------------

void sharpness() {
  const auto start = Clock::now();
  const auto f = EntireFunction::parse("exp(z1*z2)", 2);
  const auto L = weights_of({"abs(z2)+1", "abs(z1)+1"});

  guarded("1a", "exp(z1 z2) index on |z_j| <= 10, j_max = 8", [&] {
    const auto grid = disc(2, 10.0, 6, 12);
    const auto e = estimate_joint_index(f, L, grid, 6, 8);
    report("1a", e.bounded && e.N == 0, "exp(z1 z2) index on |z_j| <= 10, j_max = 8",
           fmt("N = %d (expected 0), %zu grid points, worst margin %.3g", e.N, e.grid_size, e.worst_margin));
  });

  guarded("1b", "ln M = r1 r2 within rel 1e-6", [&] {
    double worst = 0.0;
    std::string rows;
    for (const auto& R : {PolyRadius{2, 3}, PolyRadius{4, 4}, PolyRadius{5, 2}}) {
      const double got = max_modulus(f, R, GridSpec{}).log_value;
      const double want = R[0] * R[1];
      worst = std::max(worst, std::abs(got - want) / want);
      rows += fmt(" (%g,%g)->%.10g", R[0], R[1], got);
    }
    report("1b", worst <= 1e-6, "ln M = r1 r2 within rel 1e-6", fmt("max rel err %.2e;", worst) + rows);
  });

  guarded("1c", "diagonal limsup ratio in [0.95, 1.05] against N+1 = 1", [&] {
    const auto v = growth_verdict(f, L, PolyRadius{1, 1}, kDoublings, 0, Thm2Config{}, GridSpec{});
    const bool ok = v.limsup >= 0.95 && v.limsup <= 1.05 && v.bound == 1.0;
    report("1c", ok, "diagonal limsup ratio in [0.95, 1.05] against N+1 = 1",
           fmt("limsup %.6f, bound %.6g, C = %.3g, outcome %s", v.limsup, v.bound, v.C,
               growth_outcome_name(v.outcome)));
  });

  const double t = seconds_since(start);
  report("1t", t <= 60.0, "criterion 1 runtime <= 60 s", fmt("%.2f s", t));
}

// ---- 2 ----------------------------------------------------------------------

void one_variable() {
  const auto one = WeightVector::constant(1);
  const auto line_grid = disc(1, 10.0, 11, 32);

  guarded("2a", "exp(z), l = 1: N = 0 and ratio 1 +- 1e-6 at every r", [&] {
    const auto f = EntireFunction::parse("exp(z)", 1);
    const auto e = estimate_joint_index(f, one, line_grid, 6, 10);
    const auto v = growth_verdict(f, one, PolyRadius{1}, kDoublings, 0, Thm2Config{}, GridSpec{});
    const auto s = thm2_ratio_scan(f, one, PolyRadius{1}, kDoublings, Thm2Config{}, GridSpec{});
    double worst = 0.0;
    for (const auto& row : v.rows) worst = std::max(worst, std::abs(row.ratio - 1.0));
    for (const auto& row : s.rows) worst = std::max(worst, std::abs(row.ratio - 1.0));
    report("2a", e.bounded && e.N == 0 && worst <= 1e-6, "exp(z), l = 1: N = 0 and ratio 1 +- 1e-6 at every r",
           fmt("N = %d, max |ratio - 1| = %.2e over %zu radii", e.N, worst, v.rows.size()));
  });

  guarded("2b", "sin(z), l = 1: N = 1 (oracle), ratio tail <= 2, limit 1 +- 0.05", [&] {
    const auto f = EntireFunction::parse("sin(z)", 1);
    const auto e = estimate_joint_index(f, one, line_grid, 6, 10);
    int oracle_N = 0;
    for (const auto& z : line_grid) oracle_N = std::max(oracle_N, oracle::point_order("sin", {z[0]}, {1.0}, 10));
    const auto v = growth_verdict(f, one, PolyRadius{1}, kDoublings, e.N, Thm2Config{}, GridSpec{});
    const double last = v.rows.back().ratio;
    const bool ok = e.bounded && e.N == 1 && oracle_N == 1 && v.limsup <= 2.0 && std::abs(last - 1.0) <= 0.05;
    report("2b", ok, "sin(z), l = 1: N = 1 (oracle), ratio tail <= 2, limit 1 +- 0.05",
           fmt("N = %d, oracle N = %d, tail max %.6f, last ratio %.6f", e.N, oracle_N, v.limsup, last));
  });
}

// ---- 3 ----------------------------------------------------------------------

void derivative_oracles() {
  guarded("3", "symbolic vs Cauchy derivatives within rel 1e-8, ||K|| <= 6, 100 points", [&] {
    const auto start = Clock::now();
    SeededUniform rng(3);
    double worst = 0.0;
    std::string worst_where;
    std::size_t compared = 0;
    for (const auto& entry : catalog::functions()) {
      const auto f = catalog::make_function(entry);
      const DerivativeSet set(f, 6);
      for (int p = 0; p < 100; ++p) {
        std::vector<Complex> zc;
        for (int j = 0; j < entry.arity; ++j) {
          zc.push_back(std::polar(2.0 * std::sqrt(rng.next()), 2.0 * std::numbers::pi * rng.next()));
        }
        const CPoint z(zc);
        const auto symbolic = set.evaluate(z);
        const auto cauchy =
            derivative_cauchy(f, z, set.indices(), PolyRadius::filled(static_cast<std::size_t>(entry.arity), 1.0));
        for (std::size_t i = 0; i < set.indices().size(); ++i) {
          const Complex s = symbolic[i].value();
          const Complex c = cauchy[i].value;
          const double rel = std::abs(c - s) / (1.0 + std::abs(s));
          ++compared;
          if (rel > worst) {
            worst = rel;
            worst_where = entry.name + " K=" + set.indices()[i].to_string();
          }
        }
      }
    }
    const double t = seconds_since(start);
    report("3", worst <= 1e-8 && t <= 30.0, "symbolic vs Cauchy derivatives within rel 1e-8, ||K|| <= 6, 100 points",
           fmt("%zu comparisons, max |c - s| / (1 + |s|) = %.2e at ", compared, worst) + worst_where +
               fmt(", %.2f s (limit 30 s)", t));
  });
}

// ---- 4 ----------------------------------------------------------------------

void class_catalog() {
  const ClassThresholds th;
  const std::string thresholds = fmt("thresholds: blowup %g, growth factor %g", th.blowup, th.growth_factor);
  const auto eabs = weights_of({"abs(exp(z))+1"});
  const auto dexp = weights_of({"exp(exp(abs(z)))"});
  const auto centers = disc(1, 20.0, 21, 16);
  std::vector<PolyRadius> radii;
  for (int r = 1; r <= 20; ++r) radii.push_back(PolyRadius{static_cast<double>(r)});

  guarded("4a", "|e^z|+1 in Q^1", [&] {
    const auto q = qn_scan(eabs, PolyRadius{1.0}, centers, GridSpec{}, th);
    report("4a", q.verdict == Verdict::Satisfied, "|e^z|+1 in Q^1",
           fmt("verdict %s, extremal %.4g; ", verdict_name(q.verdict), q.extremal_value) + q.scanned_range + "; " +
               thresholds);
  });

  guarded("4b", "|e^z|+1 not in K^1, with witness", [&] {
    const auto k = kn_scan(eabs, radii, GridSpec{}, th);
    const bool witness = k.witness_radius && !k.witness_theta_max.empty() && !k.witness_theta_min.empty();
    report("4b", k.verdict == Verdict::Violated && witness, "|e^z|+1 not in K^1, with witness",
           fmt("verdict %s, ln c = %.4g, witness r = %g, theta_max %.4f, theta_min %.4f; ", verdict_name(k.verdict),
               k.log_extremal, witness ? (*k.witness_radius)[0] : 0.0,
               witness ? k.witness_theta_max[0] : 0.0, witness ? k.witness_theta_min[0] : 0.0) +
               thresholds);
  });

  guarded("4c", "e^{e^{|z|}} in K^1", [&] {
    const auto k = kn_scan(dexp, radii, GridSpec{}, th);
    report("4c", k.verdict == Verdict::Satisfied, "e^{e^{|z|}} in K^1",
           fmt("verdict %s, c = %.6g; ", verdict_name(k.verdict), k.extremal_value) + k.scanned_range);
  });

  guarded("4d", "e^{e^{|z|}} not in Q^1, with witness", [&] {
    const auto q = qn_scan(dexp, PolyRadius{1.0}, centers, GridSpec{}, th);
    const bool ok = q.verdict == Verdict::Violated && q.witness_point.has_value();
    report("4d", ok, "e^{e^{|z|}} not in Q^1, with witness",
           fmt("verdict %s, sampled max(Lambda2, 1/Lambda1) = %.6g; ", verdict_name(q.verdict), q.extremal_value) +
               q.scanned_range +
               (ok ? std::string()
                   : "; the distortion of this weight over discs of radius R / l(z0) tends to 1, "
                     "so a bounded verdict is the correct sampled outcome"));
  });
}

// ---- 5 ----------------------------------------------------------------------

void envelope() {
  guarded("5", "L* from (z2, z1), c = 1: lambda2 <= exp((P/c)(r1+r2)) (1 + 1e-6) on a 5x5 grid", [&] {
    const auto domain = disc(2, 3.0, 4, 8);
    const auto p = prop1_check({parse_expression("z2", 2), parse_expression("z1", 2)}, 1.0, domain);
    std::vector<PolyRadius> R;
    for (int a = 1; a <= 5; ++a) {
      for (int b = 1; b <= 5; ++b) R.push_back(PolyRadius{0.6 * a, 0.6 * b});
    }
    GridSpec g;
    g.radial_resolution = 4;
    g.angular_resolution = 12;
    const auto rows = prop1_envelope_scan(p, R, domain, g);
    double slack = INFINITY;
    bool ok = true;
    for (const auto& row : rows) {
      ok = ok && row.lambda2 <= row.envelope * (1.0 + 1e-6);
      slack = std::min(slack, std::log(row.envelope) - std::log(row.lambda2));
    }
    report("5", ok, "L* from (z2, z1), c = 1: lambda2 <= exp((P/c)(r1+r2)) (1 + 1e-6) on a 5x5 grid",
           fmt("P = %.6g, %zu radii x %zu centers, min ln(envelope / lambda2) = %.4g", p.P, rows.size(),
               domain.size(), slack));
  });
}

// ---- 6 ----------------------------------------------------------------------

void soundness() {
  guarded("6a", "derivative bound lhs <= rhs + 1e-6 (1 + |rhs|), known pairs, 3 radii x 8 angles", [&] {
    bool ok = true;
    std::size_t checked = 0;
    double tightest = INFINITY;
    std::string notes;
    for (const auto& pair : catalog::known_pairs()) {
      const auto f = EntireFunction::parse(pair.function, pair.arity);
      const auto L = WeightVector::parse(pair.weights, pair.arity);
      const auto n = static_cast<std::size_t>(pair.arity);
      const auto est = estimate_joint_index(f, L, disc(n, 5.0, 4, n == 1 ? 24 : 8), 5, 8);
      if (!est.bounded || est.N != pair.N) {
        ok = false;
        notes += " " + pair.name + " estimated N " + std::to_string(est.N);
      }
      for (double r : {1.0, 4.0, 9.0}) {
        for (int a = 0; a < 8; ++a) {
          std::vector<double> theta;
          for (std::size_t j = 0; j < n; ++j) theta.push_back(a * std::numbers::pi / 4 + static_cast<double>(j));
          const auto res = thm3_rhs(f, L, PolyRadius::filled(n, r), theta, est.N);
          ++checked;
          ok = ok && res.lhs <= res.rhs + 1e-6 * (1.0 + std::abs(res.rhs));
          tightest = std::min(tightest, res.rhs - res.lhs);
        }
      }
    }
    report("6a", ok, "derivative bound lhs <= rhs + 1e-6 (1 + |rhs|), known pairs, 3 radii x 8 angles",
           fmt("%zu cases, min rhs - lhs = %.4g", checked, tightest) + notes);
  });

  guarded("6b", "old bound - new bound = C exactly on a 6x6 (N, C) table", [&] {
    bool ok = true;
    for (int N = 0; N < 6; ++N) {
      for (double C : {0.0, 0.25, 0.5, 1.0, 2.0, 4.0}) {
        const auto g = sheremeta_gap(N, C);
        ok = ok && g.gap == C && g.old_bound - g.new_bound == C;
      }
    }
    const auto e = sheremeta_gap(2, 1.0);
    report("6b", ok && e.new_bound == 5.0 && e.old_bound == 6.0,
           "old bound - new bound = C exactly on a 6x6 (N, C) table",
           fmt("36 entries exact; (N, C) = (2, 1) -> (%g, %g, %g)", e.new_bound, e.old_bound, e.gap));
  });
}

// ---- 7 ----------------------------------------------------------------------

void unbounded_contrast() {
  guarded("7", "exp(z^2), l = 1: local ratio grows >= 2x from |z0| = 2 to 8, ratio scan diverges", [&] {
    const auto f = EntireFunction::parse("exp(z^2)", 1);
    const auto one = WeightVector::constant(1);
    const auto lb = local_behavior_ratio(f, one, PolyRadius{0.5}, PolyRadius{3.5},
                                         {CPoint{Complex(2, 0)}, CPoint{Complex(8, 0)}}, GridSpec{});
    const double growth = lb.trace[1].log_ratio - lb.trace[0].log_ratio;
    const auto s = thm2_ratio_scan(f, one, PolyRadius{1}, kDoublings, Thm2Config{}, GridSpec{});
    const bool ok = growth >= std::log(2.0) && s.diverging;
    report("7", ok, "exp(z^2), l = 1: local ratio grows >= 2x from |z0| = 2 to 8, ratio scan diverges",
           fmt("ln(ratio(8) / ratio(2)) = %.4g (need >= ln 2), tail growth %.4g (need >= 2)", growth, s.tail_growth));
  });
}

// ---- 8 ----------------------------------------------------------------------

void convexity() {
  guarded("8", "ln M convex in ln r (second differences >= -1e-9), 16 points per axis", [&] {
    bool ok = true;
    std::string detail;
    for (const char* name : {"exp", "square", "sin", "exp_z1z2"}) {
      const auto e = catalog::function(name);
      const auto n = static_cast<std::size_t>(e.arity);
      const auto rep = convexity_check(catalog::make_function(e), PolyRadius::filled(n, 0.5),
                                       PolyRadius::filled(n, 4.0), 16, GridSpec{});
      ok = ok && rep.convex;
      detail += fmt(" %s:%.3g", name, rep.min_second_difference);
    }
    report("8", ok, "ln M convex in ln r (second differences >= -1e-9), 16 points per axis",
           "min second difference" + detail);
  });
}

// ---- 9 ----------------------------------------------------------------------

void determinism() {
  guarded("9", "same config and seed give byte-identical envelopes (fixed clock)", [&] {
    const auto config = cli::load_config(std::string(LINDEX_SOURCE_DIR) + "/configs/acceptance.json");
    bool ok = true;
    std::size_t bytes = 0;
    for (const auto& cmd : cli::commands()) {
      const auto a = cli::execute(cmd, config, true);
      const auto b = cli::execute(cmd, config, true);
      const std::string da = a.envelope.dump(2), db = b.envelope.dump(2);
      ok = ok && da == db && a.csv == b.csv;
      bytes += da.size();
    }
    report("9", ok, "same config and seed give byte-identical envelopes (fixed clock)",
           fmt("%zu commands, %zu envelope bytes compared", cli::commands().size(), bytes));
  });
}

}  // namespace

int main() {
  const auto start = Clock::now();
  sharpness();
  one_variable();
  derivative_oracles();
  class_catalog();
  envelope();
  soundness();
  unbounded_contrast();
  convexity();
  determinism();
  std::printf("%d failed, total %.2f s\n", failures, seconds_since(start));
  return failures == 0 ? 0 : 1;
}
