#include "lindex/scaled.hpp"

#include <cmath>
#include <numbers>

#include "lindex/error.hpp"

namespace lindex {

namespace {

using C = std::complex<double>;

// Plain arithmetic is used while binary exponents stay inside this window.
constexpr int kPlainLimit = 1000;
// Largest |Re w| for which std::exp(w) is finite and normal.
constexpr double kExpLimit = 700.0;

int magnitude_exponent(const C& m) {
  const double mag = std::max(std::abs(m.real()), std::abs(m.imag()));
  return std::ilogb(mag);
}

void check_finite(const C& m) {
  if (!std::isfinite(m.real()) || !std::isfinite(m.imag())) {
    throw NumericalError("non-finite value in scaled arithmetic");
  }
}

// Mantissa with max component in [1, 2) and the matching exponent; exact.
Scaled unit_form(const Scaled& s) {
  if (s.is_zero()) return {};
  const int k = magnitude_exponent(s.mantissa);
  return {C(std::ldexp(s.mantissa.real(), -k), std::ldexp(s.mantissa.imag(), -k)),
          s.exponent + k};
}

Scaled normalize(Scaled s) {
  check_finite(s.mantissa);
  if (s.is_zero()) return {};
  const int k = magnitude_exponent(s.mantissa);
  if (s.exponent == 0 && k > -kPlainLimit && k < kPlainLimit) return s;
  s = unit_form(s);
  if (s.exponent > -kPlainLimit && s.exponent < kPlainLimit) {
    const int e = static_cast<int>(s.exponent);
    return {C(std::ldexp(s.mantissa.real(), e), std::ldexp(s.mantissa.imag(), e)), 0};
  }
  return s;
}

bool plain(const Scaled& s) {
  if (s.exponent != 0) return false;
  if (s.is_zero()) return true;
  const int k = magnitude_exponent(s.mantissa);
  return k > -kPlainLimit / 2 && k < kPlainLimit / 2;
}

C times_i(const C& w) { return {-w.imag(), w.real()}; }

}  // namespace

C Scaled::value() const {
  if (exponent == 0) return mantissa;
  if (exponent > 4096) return {mantissa.real() == 0 ? 0.0 : std::copysign(INFINITY, mantissa.real()),
                               mantissa.imag() == 0 ? 0.0 : std::copysign(INFINITY, mantissa.imag())};
  if (exponent < -4096) return {0.0, 0.0};
  const int e = static_cast<int>(exponent);
  return {std::ldexp(mantissa.real(), e), std::ldexp(mantissa.imag(), e)};
}

double Scaled::log_abs() const {
  if (is_zero()) return -INFINITY;
  return std::log(std::abs(mantissa)) + static_cast<double>(exponent) * std::numbers::ln2;
}

Scaled operator+(const Scaled& a, const Scaled& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (plain(a) && plain(b)) return normalize({a.mantissa + b.mantissa, 0});
  const Scaled ua = unit_form(a);
  const Scaled ub = unit_form(b);
  const long long top = std::max(ua.exponent, ub.exponent);
  auto shift = [top](const Scaled& u) {
    const long long d = u.exponent - top;
    if (d < -2000) return C{};
    const int e = static_cast<int>(d);
    return C(std::ldexp(u.mantissa.real(), e), std::ldexp(u.mantissa.imag(), e));
  };
  return normalize({shift(ua) + shift(ub), top});
}

Scaled operator-(const Scaled& a) { return {-a.mantissa, a.exponent}; }

Scaled operator-(const Scaled& a, const Scaled& b) { return a + (-b); }

Scaled operator*(const Scaled& a, const Scaled& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (plain(a) && plain(b)) return normalize({a.mantissa * b.mantissa, 0});
  const Scaled ua = unit_form(a);
  const Scaled ub = unit_form(b);
  return normalize({ua.mantissa * ub.mantissa, ua.exponent + ub.exponent});
}

Scaled operator/(const Scaled& a, const Scaled& b) {
  if (b.is_zero()) throw NumericalError("division by zero");
  if (a.is_zero()) return {};
  if (plain(a) && plain(b)) return normalize({a.mantissa / b.mantissa, 0});
  const Scaled ua = unit_form(a);
  const Scaled ub = unit_form(b);
  return normalize({ua.mantissa / ub.mantissa, ua.exponent - ub.exponent});
}

Scaled scaled_exp(const Scaled& w) {
  const C v = w.value();
  check_finite(v);
  if (std::abs(v.real()) < kExpLimit) return normalize({std::exp(v), 0});
  // e^{x} = 2^k e^{x - k ln 2}
  const double k = std::floor(v.real() / std::numbers::ln2);
  if (std::abs(k) > 9.0e15) throw NumericalError("exponent overflow in exp");
  const double frac = v.real() - k * std::numbers::ln2;
  return normalize({std::polar(std::exp(frac), v.imag()), static_cast<long long>(k)});
}

Scaled scaled_sin(const Scaled& w) {
  const C v = w.value();
  check_finite(v);
  if (std::abs(v.imag()) < kExpLimit) return normalize({std::sin(v), 0});
  // sin w = (e^{iw} - e^{-iw}) / (2i)
  const Scaled d = scaled_exp(Scaled(times_i(v))) - scaled_exp(Scaled(-times_i(v)));
  return d / Scaled(C(0.0, 2.0));
}

Scaled scaled_cos(const Scaled& w) {
  const C v = w.value();
  check_finite(v);
  if (std::abs(v.imag()) < kExpLimit) return normalize({std::cos(v), 0});
  const Scaled s = scaled_exp(Scaled(times_i(v))) + scaled_exp(Scaled(-times_i(v)));
  return s / Scaled(C(2.0, 0.0));
}

Scaled scaled_pow(const Scaled& w, int exponent) {
  if (exponent < 0) return Scaled(C(1.0, 0.0)) / scaled_pow(w, -exponent);
  Scaled result(C(1.0, 0.0));
  Scaled base = w;
  unsigned e = static_cast<unsigned>(exponent);
  while (e != 0) {
    if (e & 1u) result = result * base;
    e >>= 1u;
    if (e != 0) base = base * base;
  }
  return result;
}

Scaled scaled_abs(const Scaled& w) { return normalize({std::abs(w.mantissa), w.exponent}); }

Scaled scaled_re(const Scaled& w) { return normalize({w.mantissa.real(), w.exponent}); }

Scaled scaled_im(const Scaled& w) { return normalize({w.mantissa.imag(), w.exponent}); }

}  // namespace lindex
