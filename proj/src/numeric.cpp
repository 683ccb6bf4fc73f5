#include "lindex/numeric.hpp"

#include <cmath>

#include "lindex/error.hpp"

namespace lindex {

namespace {

template <class T>
T pairwise(std::span<const T> v) {
  constexpr std::size_t kBlock = 8;
  if (v.size() <= kBlock) {
    T s{};
    for (const T& x : v) s += x;
    return s;
  }
  const std::size_t half = v.size() / 2;
  return pairwise(v.first(half)) + pairwise(v.subspan(half));
}

struct SimpsonState {
  const std::function<double(double)>& f;
  double abs_floor;
  int evaluations = 0;
  double error = 0.0;

  double eval(double x) {
    ++evaluations;
    const double y = f(x);
    if (!std::isfinite(y)) {
      throw NumericalError("integrand is not finite at t = " + std::to_string(x));
    }
    return y;
  }

  double recurse(double a, double b, double fa, double fm, double fb, double whole,
                 double tol, int depth) {
    const double m = 0.5 * (a + b);
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = eval(lm);
    const double frm = eval(rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double delta = left + right - whole;
    if (std::abs(delta) <= 15.0 * tol || (b - a) < 1e-14 * (1.0 + std::abs(a))) {
      error += std::abs(delta) / 15.0;
      return left + right + delta / 15.0;
    }
    if (depth <= 0) {
      throw NumericalError("adaptive Simpson did not converge on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");
    }
    return recurse(a, m, fa, flm, fm, left, 0.5 * tol, depth - 1) +
           recurse(m, b, fm, frm, fb, right, 0.5 * tol, depth - 1);
  }
};

}  // namespace

double pairwise_sum(std::span<const double> values) { return pairwise(values); }

std::complex<double> pairwise_sum(std::span<const std::complex<double>> values) {
  return pairwise(values);
}

QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, int max_depth) {
  if (!(rel_tol > 0.0)) throw DomainError("adaptive_simpson: tolerance must be positive");
  if (a == b) return {0.0, 0.0, 0};
  SimpsonState st{f, 0.0};
  // Seed with a 9-point composite rule so narrow features are not skipped by
  // the first estimate.
  constexpr int kPanels = 8;
  std::vector<double> xs(kPanels + 1), ys(kPanels + 1);
  for (int i = 0; i <= kPanels; ++i) {
    xs[i] = a + (b - a) * i / kPanels;
    ys[i] = st.eval(xs[i]);
  }
  double coarse = 0.0;
  for (int i = 0; i < kPanels; i += 2) {
    coarse += (xs[i + 2] - xs[i]) / 6.0 * (ys[i] + 4.0 * ys[i + 1] + ys[i + 2]);
  }
  const double tol = rel_tol * std::abs(coarse) + rel_tol * 1e-12;
  double total = 0.0;
  for (int i = 0; i < kPanels; i += 2) {
    const double whole = (xs[i + 2] - xs[i]) / 6.0 * (ys[i] + 4.0 * ys[i + 1] + ys[i + 2]);
    total += st.recurse(xs[i], xs[i + 2], ys[i], ys[i + 1], ys[i + 2], whole,
                        tol / (kPanels / 2), max_depth);
  }
  return {total, st.error, st.evaluations};
}

double simpson_uniform(std::span<const double> samples, double h) {
  const std::size_t n = samples.size();
  if (n < 3 || n % 2 == 0) throw DomainError("simpson_uniform needs an odd sample count >= 3");
  std::vector<double> terms(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double w = (i == 0 || i == n - 1) ? 1.0 : (i % 2 == 1 ? 4.0 : 2.0);
    terms[i] = w * samples[i];
  }
  return h / 3.0 * pairwise_sum(terms);
}

}  // namespace lindex
