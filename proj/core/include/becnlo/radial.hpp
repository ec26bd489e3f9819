#pragma once

#include <cstddef>
#include <limits>
#include <span>
#include <string_view>
#include <vector>

namespace becnlo {

// Uniform radial grid r_i = i * spacing, i = 0 .. n_points-1, r_0 = 0.
class RadialGrid {
 public:
  RadialGrid(double r_max, std::size_t n_points);

  double r_max() const noexcept { return r_max_; }
  std::size_t size() const noexcept { return n_points_; }
  double spacing() const noexcept { return spacing_; }
  double r(std::size_t i) const noexcept { return static_cast<double>(i) * spacing_; }

  // Index of the last node with r <= radius (clamped to the grid).
  std::size_t last_index_within(double radius) const noexcept;

  bool operator==(const RadialGrid&) const = default;

 private:
  double r_max_;
  std::size_t n_points_;
  double spacing_;
};

enum class FieldUnit {
  kDensity,       // m^-3
  kWavefunction,  // m^-3/2
  kEnergy,        // J
  kDimensionless,
};

std::string_view to_string(FieldUnit unit);

// Real samples of a radial function. Values must be finite; density fields
// must also be non-negative. The unit tag is fixed at construction.
class RadialField {
 public:
  RadialField(RadialGrid grid, std::vector<double> values, FieldUnit unit);

  template <class F>
  static RadialField sample(const RadialGrid& grid, FieldUnit unit, F&& f) {
    std::vector<double> v(grid.size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = f(grid.r(i));
    return RadialField(grid, std::move(v), unit);
  }

  const RadialGrid& grid() const noexcept { return grid_; }
  FieldUnit unit() const noexcept { return unit_; }
  std::span<const double> values() const noexcept { return values_; }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  std::size_t size() const noexcept { return values_.size(); }

 private:
  RadialGrid grid_;
  std::vector<double> values_;
  FieldUnit unit_;
};

namespace quad {

// Composite Simpson on uniformly spaced samples. An even sample count closes
// with the 3/8 rule on the last three intervals.
double simpson(std::span<const double> f, double h);

// Composite Simpson of f over [a, b] with `intervals` (rounded up to even).
template <class F>
double simpson(F&& f, double a, double b, std::size_t intervals) {
  if (intervals < 2) intervals = 2;
  if (intervals % 2) ++intervals;
  const double h = (b - a) / static_cast<double>(intervals);
  double sum = f(a) + f(b);
  for (std::size_t i = 1; i < intervals; ++i) {
    sum += (i % 2 ? 4.0 : 2.0) * f(a + static_cast<double>(i) * h);
  }
  return sum * h / 3.0;
}

// 4 pi \int_0^{min(cutoff, r_max)} r^2 f(r) dr for samples f on `grid`.
// When the cutoff falls between nodes, the partial cell is integrated with
// the quadratic through the last three nodes inside the cutoff, so integrands
// that are smooth on [0, cutoff] but kinked at the cutoff keep full order.
double radial_integral(const RadialGrid& grid, std::span<const double> f,
                       double cutoff = std::numeric_limits<double>::infinity());

inline double radial_integral(const RadialField& field,
                              double cutoff = std::numeric_limits<double>::infinity()) {
  return radial_integral(field.grid(), field.values(), cutoff);
}

}  // namespace quad

}  // namespace becnlo
