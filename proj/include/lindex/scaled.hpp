#pragma once

#include <complex>

namespace lindex {

/// A complex number stored as mantissa * 2^exponent. While values stay
/// inside double range the exponent is 0 and every operation is the plain
/// std::complex<double> one, so results agree bit for bit with ordinary
/// evaluation; beyond that range the binary exponent absorbs the magnitude
/// instead of overflowing. Used wherever ln|F| or ln l_j is needed at large
/// radii (ln M(F, R) for exp(z1 z2) at R = (128, 128) is 16384).
struct Scaled {
  std::complex<double> mantissa{0.0, 0.0};
  long long exponent = 0;

  Scaled() = default;
  Scaled(std::complex<double> m) : mantissa(m) {}  // NOLINT(google-explicit-constructor)
  Scaled(std::complex<double> m, long long e) : mantissa(m), exponent(e) {}

  bool is_zero() const noexcept { return mantissa == std::complex<double>{}; }
  /// mantissa * 2^exponent; may overflow to infinity.
  std::complex<double> value() const;
  /// ln|value|; -inf for zero.
  double log_abs() const;
};

Scaled operator+(const Scaled& a, const Scaled& b);
Scaled operator-(const Scaled& a, const Scaled& b);
Scaled operator*(const Scaled& a, const Scaled& b);
/// Throws NumericalError on division by zero.
Scaled operator/(const Scaled& a, const Scaled& b);
Scaled operator-(const Scaled& a);

Scaled scaled_exp(const Scaled& w);
Scaled scaled_sin(const Scaled& w);
Scaled scaled_cos(const Scaled& w);
Scaled scaled_pow(const Scaled& w, int exponent);
Scaled scaled_abs(const Scaled& w);
Scaled scaled_re(const Scaled& w);
Scaled scaled_im(const Scaled& w);

}  // namespace lindex
