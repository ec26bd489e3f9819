#include "becnlo/radial.hpp"

#include <algorithm>
#include <cmath>

#include "becnlo/constants.hpp"
#include "becnlo/errors.hpp"

namespace becnlo {

RadialGrid::RadialGrid(double r_max, std::size_t n_points)
    : r_max_(r_max), n_points_(n_points), spacing_(0.0) {
  if (!(std::isfinite(r_max) && r_max > 0.0)) throw ValidationError("r_max", "must be > 0");
  if (n_points < 16) throw ValidationError("n_points", "must be >= 16");
  spacing_ = r_max / static_cast<double>(n_points - 1);
}

std::size_t RadialGrid::last_index_within(double radius) const noexcept {
  if (!(radius > 0.0)) return 0;
  if (radius >= r_max_) return n_points_ - 1;
  auto i = static_cast<std::size_t>(std::floor(radius / spacing_));
  // Nodes within rounding of `radius` count as inside.
  const double slack = 1e-12 * spacing_;
  if (i + 1 < n_points_ && r(i + 1) <= radius + slack) ++i;
  while (i > 0 && r(i) > radius + slack) --i;
  return std::min(i, n_points_ - 1);
}

std::string_view to_string(FieldUnit unit) {
  switch (unit) {
    case FieldUnit::kDensity: return "m^-3";
    case FieldUnit::kWavefunction: return "m^-3/2";
    case FieldUnit::kEnergy: return "J";
    case FieldUnit::kDimensionless: return "1";
  }
  return "?";
}

RadialField::RadialField(RadialGrid grid, std::vector<double> values, FieldUnit unit)
    : grid_(grid), values_(std::move(values)), unit_(unit) {
  if (values_.size() != grid_.size()) {
    throw ValidationError("values", "sample count does not match grid");
  }
  for (double v : values_) {
    if (!std::isfinite(v)) throw NumericalError("radial field contains non-finite value");
    if (unit_ == FieldUnit::kDensity && v < 0.0) {
      throw NumericalError("density field contains negative value");
    }
  }
}

namespace quad {

double simpson(std::span<const double> f, double h) {
  const std::size_t n = f.size();
  if (n < 2) return 0.0;
  if (n == 2) return 0.5 * h * (f[0] + f[1]);
  if (n == 3) return h / 3.0 * (f[0] + 4.0 * f[1] + f[2]);

  // Odd point count: plain composite Simpson. Even: Simpson up to n-4, then
  // 3/8 rule over the last three intervals.
  const std::size_t simpson_end = (n % 2 == 1) ? n - 1 : n - 4;
  double total = 0.0;
  if (simpson_end > 0) {
    double sum = f[0] + f[simpson_end];
    for (std::size_t i = 1; i < simpson_end; ++i) sum += (i % 2 ? 4.0 : 2.0) * f[i];
    total = sum * h / 3.0;
  }
  if (n % 2 == 0) {
    const std::size_t k = simpson_end;
    total += 3.0 * h / 8.0 * (f[k] + 3.0 * f[k + 1] + 3.0 * f[k + 2] + f[k + 3]);
  }
  return total;
}

double radial_integral(const RadialGrid& grid, std::span<const double> f, double cutoff) {
  if (f.size() != grid.size()) throw ValidationError("values", "sample count mismatch");
  const double h = grid.spacing();
  const double upper = std::min(cutoff, grid.r_max());
  if (!(upper > 0.0)) return 0.0;

  const std::size_t k = grid.last_index_within(upper);
  std::vector<double> g(k + 1);
  for (std::size_t i = 0; i <= k; ++i) {
    const double r = grid.r(i);
    g[i] = r * r * f[i];
  }
  double total = k >= 1 ? simpson(g, h) : 0.0;

  const double tail = upper - grid.r(k);
  if (tail > 1e-12 * h && k >= 2) {
    // Quadratic through (r_{k-2}, r_{k-1}, r_k) in local x = (r - r_k)/h,
    // integrated over x in [0, tail/h].
    const double g0 = g[k - 2], g1 = g[k - 1], g2 = g[k];
    const double c0 = g2;
    const double c1 = (3.0 * g2 - 4.0 * g1 + g0) / 2.0;
    const double c2 = (g2 - 2.0 * g1 + g0) / 2.0;
    const double x = tail / h;
    total += h * (c0 * x + c1 * x * x / 2.0 + c2 * x * x * x / 3.0);
  }
  return 4.0 * kPi * total;
}

}  // namespace quad

}  // namespace becnlo
