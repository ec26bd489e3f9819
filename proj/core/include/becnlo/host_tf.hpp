#pragma once

#include <cstddef>

#include "becnlo/params.hpp"
#include "becnlo/radial.hpp"

namespace becnlo {

inline constexpr std::size_t kDefaultGridPoints = 4096;
// Default analysis grids extend to this multiple of the TF radius.
inline constexpr double kDefaultRadiusFactor = 1.5;

// Thomas-Fermi ground state of the host component without the stored
// component: n1(r) = max(0, (mu - V(r)) / U11).
class TfSolution {
 public:
  TfSolution(const DerivedScales& scales, double mu, RadialGrid grid);

  double mu() const noexcept { return mu_; }
  double radius() const noexcept { return radius_; }
  const RadialField& density() const noexcept { return density_; }
  const RadialGrid& grid() const noexcept { return density_.grid(); }

  // Closed-form density at an arbitrary radius.
  double density_at(double r) const noexcept;
  // 4 pi \int_0^R r^2 n1 dr by quadrature on the sampled density.
  double atom_number() const;

  const DerivedScales& scales() const noexcept { return scales_; }

 private:
  DerivedScales scales_;
  double mu_;
  double radius_;
  RadialField density_;
};

// mu = (hbar omega / 2) (15 N a11 / d)^{2/5}.
double tf_chemical_potential(const SystemConfig& config, const DerivedScales& scales);

// Independent route: root of N(mu) - N where N(mu) integrates the TF profile
// by Simpson quadrature on [0, R(mu)].
double tf_chemical_potential_numeric(const SystemConfig& config, const DerivedScales& scales,
                                     std::size_t intervals = 4096);

double tf_radius(const DerivedScales& scales, double mu);

// Throws NumericalError("grid truncates condensate") when grid.r_max() < R.
TfSolution tf_density(const SystemConfig& config, const DerivedScales& scales, double mu,
                      const RadialGrid& grid);

// Grid of `n_points` reaching `factor` times the TF radius.
RadialGrid default_grid(const DerivedScales& scales, double mu,
                        std::size_t n_points = kDefaultGridPoints,
                        double factor = kDefaultRadiusFactor);

// Host density displaced by the stored component, with mu held fixed:
// n1(r) = max(0, (mu - V(r) - U12 n2(r)) / U11).
// Throws NumericalError when the centre would go negative.
RadialField tf_density_with_back_action(const SystemConfig& config,
                                        const DerivedScales& scales, double mu,
                                        const RadialField& stored_density);

}  // namespace becnlo
