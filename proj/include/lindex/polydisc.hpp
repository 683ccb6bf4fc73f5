#pragma once

// Multi-indices, points of C^n, polydisc radii and the deterministic sample
// grids (skeletons and closed polydiscs) every other module is built on.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace lindex {

using Complex = std::complex<double>;

/// Largest ||K|| for which K! is computed exactly (20! < 2^63).
inline constexpr int kMaxFactorialNorm = 20;

/// Nonnegative integer exponent vector K = (k_1, ..., k_n).
class MultiIndex {
public:
  MultiIndex() = default;
  explicit MultiIndex(std::size_t n) : k_(n, 0) {}
  MultiIndex(std::initializer_list<int> entries);
  explicit MultiIndex(std::vector<int> entries);

  static MultiIndex zero(std::size_t n) { return MultiIndex(n); }
  static MultiIndex filled(std::size_t n, int value);
  /// The basis vector e_j (zero-based j).
  static MultiIndex basis(std::size_t n, std::size_t j);

  std::size_t size() const noexcept { return k_.size(); }
  int operator[](std::size_t j) const { return k_[j]; }
  std::span<const int> entries() const noexcept { return k_; }

  /// ||K|| = k_1 + ... + k_n.
  int norm() const noexcept;
  int max_entry() const noexcept;
  /// K! = k_1! ... k_n!; throws DomainError when ||K|| > 20.
  std::uint64_t factorial() const;
  /// A^K = a_1^{k_1} ... a_n^{k_n}.
  double power(std::span<const double> base) const;

  MultiIndex plus_basis(std::size_t j) const;
  MultiIndex minus_basis(std::size_t j) const;
  MultiIndex operator+(const MultiIndex& other) const;
  /// Concatenation (K, J) as an index over n_K + n_J variables.
  MultiIndex concat(const MultiIndex& other) const;
  /// Componentwise K <= J.
  bool dominated_by(const MultiIndex& other) const;

  std::string to_string() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;
  friend auto operator<=>(const MultiIndex&, const MultiIndex&) = default;

private:
  std::vector<int> k_;
};

/// Exact n! for 0 <= n <= 20.
std::uint64_t factorial(int n);

/// All K with ||K|| <= max_norm, graded by norm then reverse-lexicographic
/// (e.g. n = 2: (0,0), (1,0), (0,1), (2,0), (1,1), (0,2), ...).
std::vector<MultiIndex> multi_indices_up_to(std::size_t n, int max_norm);

/// A point z = (z_1, ..., z_n) of C^n with finite coordinates.
class CPoint {
public:
  CPoint() = default;
  explicit CPoint(std::size_t n) : z_(n, Complex{}) {}
  CPoint(std::initializer_list<Complex> coords);
  explicit CPoint(std::vector<Complex> coords);

  std::size_t size() const noexcept { return z_.size(); }
  const Complex& operator[](std::size_t j) const { return z_[j]; }
  Complex& operator[](std::size_t j) { return z_[j]; }
  std::span<const Complex> coords() const noexcept { return z_; }

  /// Componentwise moduli |z|.
  std::vector<double> moduli() const;
  /// Sum of moduli, used to order grids by distance from the origin.
  double modulus_sum() const;

  friend bool operator==(const CPoint&, const CPoint&) = default;

private:
  std::vector<Complex> z_;
};

/// Polydisc radius R = (r_1, ..., r_n) with r_j >= 0.
class PolyRadius {
public:
  PolyRadius() = default;
  PolyRadius(std::initializer_list<double> radii);
  explicit PolyRadius(std::vector<double> radii);
  static PolyRadius filled(std::size_t n, double value);

  std::size_t size() const noexcept { return r_.size(); }
  double operator[](std::size_t j) const { return r_[j]; }
  std::span<const double> radii() const noexcept { return r_; }

  /// ||R|| = r_1 + ... + r_n.
  double norm() const noexcept;
  bool all_zero() const noexcept;
  bool all_positive() const noexcept;
  PolyRadius scaled(double factor) const;
  /// Componentwise R / weights.
  PolyRadius divided_by(std::span<const double> weights) const;
  /// Componentwise R <= other.
  bool dominated_by(const PolyRadius& other) const;

  friend bool operator==(const PolyRadius&, const PolyRadius&) = default;

private:
  std::vector<double> r_;
};

/// Resolution of the deterministic tensor grids.
struct GridSpec {
  int angular_resolution = 32;
  int radial_resolution = 8;
  int refinement_depth = 4;
  std::size_t sample_cap = 1'000'000;

  /// Throws DomainError when a resolution is below 2 or the cap is zero.
  void validate() const;
};

/// e^{2 pi i k / m}, exact at multiples of a quarter turn.
Complex unit_root(long long k, long long m);

/// Angle vectors Theta_k = 2 pi k / m for the n-fold product grid, row-major
/// (first coordinate slowest).
std::vector<std::vector<double>> angle_grid(std::size_t n, int m, std::size_t cap);

/// Tensor grid on T^n(center, radius), row-major.
std::vector<CPoint> skeleton_samples(const CPoint& center, const PolyRadius& radius,
                                     const GridSpec& grid);

/// Radial x angular product grid covering D^n[center, radius]; includes the
/// center and the full skeleton shell. Returns {center} when radius is 0.
std::vector<CPoint> polydisc_samples(const CPoint& center, const PolyRadius& radius,
                                     const GridSpec& grid);

/// The point R e^{i Theta} (+ center).
CPoint on_skeleton(const CPoint& center, std::span<const double> radii,
                   std::span<const double> theta);

}  // namespace lindex
