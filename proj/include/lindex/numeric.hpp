#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace lindex {

/// Pairwise (cascade) summation; the result depends only on the order of
/// `values`, never on how the caller partitioned the work that produced them.
double pairwise_sum(std::span<const double> values);
std::complex<double> pairwise_sum(std::span<const std::complex<double>> values);

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  int evaluations = 0;
};

/// Adaptive composite Simpson on [a, b] to relative tolerance `rel_tol`
/// (with an absolute floor of rel_tol * 1e-12). Throws NumericalError when
/// the recursion depth is exhausted before the local tolerance is met or the
/// integrand returns a non-finite value.
QuadratureResult adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                                  double rel_tol, int max_depth = 48);

/// Composite Simpson over equally spaced samples (odd count, spacing h).
double simpson_uniform(std::span<const double> samples, double h);

/// Seeded source of uniform doubles in [0, 1) built on mt19937_64, with the
/// 53-bit conversion spelled out so the stream is identical on every
/// standard library.
class SeededUniform {
public:
  explicit SeededUniform(std::uint64_t seed) : engine_(seed) {}
  double next() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

private:
  std::mt19937_64 engine_;
};

}  // namespace lindex
