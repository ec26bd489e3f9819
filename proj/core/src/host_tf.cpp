#include "becnlo/host_tf.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>

#include <boost/math/tools/roots.hpp>

#include "becnlo/errors.hpp"

namespace becnlo {

namespace {

std::vector<double> sample_tf(const DerivedScales& sc, double mu, const RadialGrid& grid) {
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    v[i] = std::max(0.0, (mu - sc.trap_potential(grid.r(i))) / sc.u11);
  }
  return v;
}

}  // namespace

double tf_radius(const DerivedScales& scales, double mu) {
  return std::sqrt(2.0 * mu / (scales.mass * scales.omega * scales.omega));
}

TfSolution::TfSolution(const DerivedScales& scales, double mu, RadialGrid grid)
    : scales_(scales),
      mu_(mu),
      radius_(tf_radius(scales, mu)),
      density_(grid, sample_tf(scales, mu, grid), FieldUnit::kDensity) {}

double TfSolution::density_at(double r) const noexcept {
  return std::max(0.0, (mu_ - scales_.trap_potential(r)) / scales_.u11);
}

double TfSolution::atom_number() const { return quad::radial_integral(density_, radius_); }

double tf_chemical_potential(const SystemConfig& config, const DerivedScales& scales) {
  const double x = 15.0 * static_cast<double>(config.n_host) * config.species.a11 / scales.d;
  return 0.5 * scales.e_trap * std::pow(x, 0.4);
}

double tf_chemical_potential_numeric(const SystemConfig& config, const DerivedScales& scales,
                                     std::size_t intervals) {
  const double n_target = static_cast<double>(config.n_host);
  auto atoms = [&](double mu) {
    const double radius = tf_radius(scales, mu);
    auto integrand = [&](double r) {
      return r * r * std::max(0.0, mu - scales.trap_potential(r)) / scales.u11;
    };
    return 4.0 * kPi * quad::simpson(integrand, 0.0, radius, intervals);
  };

  // Work in units of hbar omega so the bracket is well scaled.
  auto residual = [&](double mu_units) { return atoms(mu_units * scales.e_trap) - n_target; };
  double hi = 1.0;
  while (residual(hi) < 0.0) hi *= 2.0;
  const double lo = 0.0;

  std::uintmax_t max_iter = 200;
  const auto [a, b] = boost::math::tools::toms748_solve(
      residual, lo, hi, boost::math::tools::eps_tolerance<double>(52), max_iter);
  return 0.5 * (a + b) * scales.e_trap;
}

TfSolution tf_density(const SystemConfig& /*config*/, const DerivedScales& scales, double mu,
                      const RadialGrid& grid) {
  if (!(mu > 0.0)) throw ValidationError("mu", "must be > 0");
  if (grid.r_max() < tf_radius(scales, mu)) {
    throw NumericalError("grid truncates condensate");
  }
  return TfSolution(scales, mu, grid);
}

RadialGrid default_grid(const DerivedScales& scales, double mu, std::size_t n_points,
                        double factor) {
  return RadialGrid(factor * tf_radius(scales, mu), n_points);
}

RadialField tf_density_with_back_action(const SystemConfig& /*config*/,
                                        const DerivedScales& scales, double mu,
                                        const RadialField& stored_density) {
  if (stored_density.unit() != FieldUnit::kDensity) {
    throw ValidationError("stored_density", "expected a density field");
  }
  const auto& grid = stored_density.grid();
  const double centre = mu - scales.u12 * stored_density[0];
  if (centre < 0.0) {
    throw NumericalError("stored component too dense: host density negative at r = 0");
  }
  std::vector<double> v(grid.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const double f =
        mu - scales.trap_potential(grid.r(i)) - scales.u12 * stored_density[i];
    v[i] = std::max(0.0, f / scales.u11);
  }
  return RadialField(grid, std::move(v), FieldUnit::kDensity);
}

}  // namespace becnlo
