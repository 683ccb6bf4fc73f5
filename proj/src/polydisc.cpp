#include "lindex/polydisc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>
#include <sstream>

#include "lindex/error.hpp"

namespace lindex {

namespace {

void check_entries(const std::vector<int>& k) {
  for (int v : k) {
    if (v < 0) throw DomainError("multi-index entries must be nonnegative");
  }
}

void compositions(std::size_t n, std::size_t pos, int remaining, std::vector<int>& cur,
                  std::vector<MultiIndex>& out) {
  if (pos + 1 == n) {
    cur[pos] = remaining;
    out.emplace_back(cur);
    return;
  }
  for (int v = remaining; v >= 0; --v) {
    cur[pos] = v;
    compositions(n, pos + 1, remaining - v, cur, out);
  }
}

std::size_t checked_power(std::size_t base, std::size_t exp, std::size_t cap) {
  std::size_t total = 1;
  for (std::size_t i = 0; i < exp; ++i) {
    if (base != 0 && total > cap / base) {
      throw DomainError("sample grid exceeds the configured cap of " + std::to_string(cap));
    }
    total *= base;
  }
  if (total > cap) {
    throw DomainError("sample grid exceeds the configured cap of " + std::to_string(cap));
  }
  return total;
}

// Expands per-coordinate value lists into their row-major product.
std::vector<CPoint> tensor_product(const std::vector<std::vector<Complex>>& axes,
                                   std::size_t cap) {
  std::size_t total = 1;
  for (const auto& a : axes) {
    if (!a.empty() && total > cap / a.size()) {
      throw DomainError("sample grid exceeds the configured cap of " + std::to_string(cap));
    }
    total *= a.size();
  }
  if (total > cap) {
    throw DomainError("sample grid exceeds the configured cap of " + std::to_string(cap));
  }
  const std::size_t n = axes.size();
  std::vector<CPoint> out;
  out.reserve(total);
  std::vector<std::size_t> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<Complex> z(n);
    for (std::size_t j = 0; j < n; ++j) z[j] = axes[j][idx[j]];
    out.emplace_back(std::move(z));
    for (std::size_t j = n; j-- > 0;) {
      if (++idx[j] < axes[j].size()) break;
      idx[j] = 0;
    }
  }
  return out;
}

}  // namespace

MultiIndex::MultiIndex(std::initializer_list<int> entries) : k_(entries) { check_entries(k_); }

MultiIndex::MultiIndex(std::vector<int> entries) : k_(std::move(entries)) { check_entries(k_); }

MultiIndex MultiIndex::filled(std::size_t n, int value) {
  return MultiIndex(std::vector<int>(n, value));
}

MultiIndex MultiIndex::basis(std::size_t n, std::size_t j) {
  if (j >= n) throw DomainError("basis index out of range");
  MultiIndex e(n);
  e.k_[j] = 1;
  return e;
}

int MultiIndex::norm() const noexcept { return std::accumulate(k_.begin(), k_.end(), 0); }

int MultiIndex::max_entry() const noexcept {
  return k_.empty() ? 0 : *std::max_element(k_.begin(), k_.end());
}

std::uint64_t MultiIndex::factorial() const {
  if (norm() > kMaxFactorialNorm) {
    throw DomainError("K! requested for ||K|| = " + std::to_string(norm()) +
                      " > 20; factorials beyond 20! are not representable exactly");
  }
  std::uint64_t f = 1;
  for (int v : k_) f *= lindex::factorial(v);
  return f;
}

double MultiIndex::power(std::span<const double> base) const {
  if (base.size() != k_.size()) throw DomainError("power: dimension mismatch");
  double p = 1.0;
  for (std::size_t j = 0; j < k_.size(); ++j) {
    for (int e = 0; e < k_[j]; ++e) p *= base[j];
  }
  return p;
}

MultiIndex MultiIndex::plus_basis(std::size_t j) const {
  MultiIndex r = *this;
  r.k_.at(j) += 1;
  return r;
}

MultiIndex MultiIndex::minus_basis(std::size_t j) const {
  if (k_.at(j) == 0) throw DomainError("minus_basis: entry is already zero");
  MultiIndex r = *this;
  r.k_[j] -= 1;
  return r;
}

MultiIndex MultiIndex::operator+(const MultiIndex& other) const {
  if (other.size() != size()) throw DomainError("multi-index sum: dimension mismatch");
  MultiIndex r = *this;
  for (std::size_t j = 0; j < size(); ++j) r.k_[j] += other.k_[j];
  return r;
}

MultiIndex MultiIndex::concat(const MultiIndex& other) const {
  std::vector<int> v = k_;
  v.insert(v.end(), other.k_.begin(), other.k_.end());
  return MultiIndex(std::move(v));
}

bool MultiIndex::dominated_by(const MultiIndex& other) const {
  if (other.size() != size()) return false;
  for (std::size_t j = 0; j < size(); ++j) {
    if (k_[j] > other.k_[j]) return false;
  }
  return true;
}

std::string MultiIndex::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t j = 0; j < k_.size(); ++j) os << (j ? "," : "") << k_[j];
  os << ')';
  return os.str();
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > kMaxFactorialNorm) {
    throw DomainError("factorial argument out of the exact range [0, 20]");
  }
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int max_norm) {
  if (n == 0) throw DomainError("multi-indices need at least one variable");
  std::vector<MultiIndex> out;
  std::vector<int> cur(n, 0);
  for (int d = 0; d <= max_norm; ++d) compositions(n, 0, d, cur, out);
  return out;
}

CPoint::CPoint(std::initializer_list<Complex> coords) : CPoint(std::vector<Complex>(coords)) {}

CPoint::CPoint(std::vector<Complex> coords) : z_(std::move(coords)) {
  for (const auto& c : z_) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw DomainError("point coordinates must be finite");
    }
  }
}

std::vector<double> CPoint::moduli() const {
  std::vector<double> m(z_.size());
  for (std::size_t j = 0; j < z_.size(); ++j) m[j] = std::abs(z_[j]);
  return m;
}

double CPoint::modulus_sum() const {
  double s = 0.0;
  for (const auto& c : z_) s += std::abs(c);
  return s;
}

PolyRadius::PolyRadius(std::initializer_list<double> radii)
    : PolyRadius(std::vector<double>(radii)) {}

PolyRadius::PolyRadius(std::vector<double> radii) : r_(std::move(radii)) {
  for (double r : r_) {
    if (!(r >= 0.0) || !std::isfinite(r)) {
      throw DomainError("polydisc radii must be finite and nonnegative");
    }
  }
}

PolyRadius PolyRadius::filled(std::size_t n, double value) {
  return PolyRadius(std::vector<double>(n, value));
}

double PolyRadius::norm() const noexcept { return std::accumulate(r_.begin(), r_.end(), 0.0); }

bool PolyRadius::all_zero() const noexcept {
  return std::all_of(r_.begin(), r_.end(), [](double r) { return r == 0.0; });
}

bool PolyRadius::all_positive() const noexcept {
  return !r_.empty() && std::all_of(r_.begin(), r_.end(), [](double r) { return r > 0.0; });
}

PolyRadius PolyRadius::scaled(double factor) const {
  std::vector<double> v = r_;
  for (double& r : v) r *= factor;
  return PolyRadius(std::move(v));
}

PolyRadius PolyRadius::divided_by(std::span<const double> weights) const {
  if (weights.size() != r_.size()) throw DomainError("radius/weight dimension mismatch");
  std::vector<double> v = r_;
  for (std::size_t j = 0; j < v.size(); ++j) v[j] /= weights[j];
  return PolyRadius(std::move(v));
}

bool PolyRadius::dominated_by(const PolyRadius& other) const {
  if (other.size() != size()) return false;
  for (std::size_t j = 0; j < size(); ++j) {
    if (r_[j] > other.r_[j]) return false;
  }
  return true;
}

void GridSpec::validate() const {
  if (angular_resolution < 2) throw DomainError("angular_resolution must be >= 2");
  if (radial_resolution < 2) throw DomainError("radial_resolution must be >= 2");
  if (refinement_depth < 0) throw DomainError("refinement_depth must be >= 0");
  if (sample_cap == 0) throw DomainError("sample_cap must be positive");
}

Complex unit_root(long long k, long long m) {
  if (m <= 0) throw DomainError("unit_root: m must be positive");
  k %= m;
  if (k < 0) k += m;
  if ((4 * k) % m == 0) {
    switch ((4 * k) / m) {
      case 0: return {1.0, 0.0};
      case 1: return {0.0, 1.0};
      case 2: return {-1.0, 0.0};
      default: return {0.0, -1.0};
    }
  }
  const double theta = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(m);
  return {std::cos(theta), std::sin(theta)};
}

std::vector<std::vector<double>> angle_grid(std::size_t n, int m, std::size_t cap) {
  if (m < 1) throw DomainError("angle grid needs at least one angle per axis");
  const std::size_t total = checked_power(static_cast<std::size_t>(m), n, cap);
  std::vector<std::vector<double>> out;
  out.reserve(total);
  std::vector<int> idx(n, 0);
  for (std::size_t flat = 0; flat < total; ++flat) {
    std::vector<double> theta(n);
    for (std::size_t j = 0; j < n; ++j) theta[j] = 2.0 * std::numbers::pi * idx[j] / m;
    out.push_back(std::move(theta));
    for (std::size_t j = n; j-- > 0;) {
      if (++idx[j] < m) break;
      idx[j] = 0;
    }
  }
  return out;
}

std::vector<CPoint> skeleton_samples(const CPoint& center, const PolyRadius& radius,
                                     const GridSpec& grid) {
  grid.validate();
  if (center.size() != radius.size()) throw DomainError("skeleton_samples: dimension mismatch");
  const int m = grid.angular_resolution;
  std::vector<std::vector<Complex>> axes(center.size());
  for (std::size_t j = 0; j < center.size(); ++j) {
    axes[j].reserve(static_cast<std::size_t>(m));
    for (int k = 0; k < m; ++k) axes[j].push_back(center[j] + radius[j] * unit_root(k, m));
  }
  return tensor_product(axes, grid.sample_cap);
}

std::vector<CPoint> polydisc_samples(const CPoint& center, const PolyRadius& radius,
                                     const GridSpec& grid) {
  grid.validate();
  if (center.size() != radius.size()) throw DomainError("polydisc_samples: dimension mismatch");
  if (radius.all_zero()) return {center};
  const int m = grid.angular_resolution;
  const int q = grid.radial_resolution;
  std::vector<std::vector<Complex>> axes(center.size());
  for (std::size_t j = 0; j < center.size(); ++j) {
    axes[j].reserve(static_cast<std::size_t>(m * q));
    for (int i = 0; i < q; ++i) {
      // i = q - 1 lands exactly on the shell.
      const double rho = (i == q - 1) ? radius[j] : radius[j] * i / (q - 1);
      for (int k = 0; k < m; ++k) axes[j].push_back(center[j] + rho * unit_root(k, m));
    }
  }
  return tensor_product(axes, grid.sample_cap);
}

CPoint on_skeleton(const CPoint& center, std::span<const double> radii,
                   std::span<const double> theta) {
  if (radii.size() != center.size() || theta.size() != center.size()) {
    throw DomainError("on_skeleton: dimension mismatch");
  }
  std::vector<Complex> z(center.size());
  for (std::size_t j = 0; j < z.size(); ++j) {
    z[j] = center[j] + std::polar(radii[j], theta[j]);
  }
  return CPoint(std::move(z));
}

}  // namespace lindex
