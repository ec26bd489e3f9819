#include "becnlo/lifetime.hpp"

#include <cmath>
#include <numbers>
#include <vector>

#include "becnlo/errors.hpp"

namespace becnlo {

double loss_overlap(const RadialField& mode_profile, const RadialField& host_density,
                    double im_u12, double cutoff) {
  if (im_u12 == 0.0) throw ValidationError("im_a12_m", "loss channel not configured");
  if (!(mode_profile.grid() == host_density.grid())) {
    throw ValidationError("host_density", "mode and host sampled on different grids");
  }
  std::vector<double> integrand(mode_profile.size());
  for (std::size_t i = 0; i < integrand.size(); ++i) {
    integrand[i] = mode_profile[i] * mode_profile[i] * host_density[i];
  }
  return std::abs(im_u12) * quad::radial_integral(mode_profile.grid(), integrand, cutoff);
}

double loss_overlap(const StoredMode& mode, const TfSolution& host, double im_u12) {
  return loss_overlap(mode.profile(host.grid()), host.density(), im_u12, host.radius());
}

double lifetime_tau(double loss_energy, double hbar) {
  if (!(loss_energy > 0.0)) throw ValidationError("L", "loss energy must be > 0");
  return hbar * std::numbers::ln2 / loss_energy;
}

namespace {

// 4 pi \int_0^R r^2 phi^2 n1 dr, the overlap per unit |Im U12|.
double unit_overlap(const SystemConfig& config, const DerivedScales& sc, std::size_t n_points) {
  const double mu = tf_chemical_potential(config, sc);
  const auto host = tf_density(config, sc, mu, default_grid(sc, mu, n_points));
  return loss_overlap(StoredMode::from_scales(sc), host, 1.0);
}

}  // namespace

LossEstimate estimate_lifetime(const SystemConfig& config, std::size_t n_points) {
  const auto sc = derive_scales(config);
  LossEstimate est;
  est.im_u12 = interaction_strength(config.species.im_a12, sc.mass, sc.hbar);
  if (est.im_u12 == 0.0) throw ValidationError("im_a12_m", "loss channel not configured");
  est.loss_rate_l = std::abs(est.im_u12) * unit_overlap(config, sc, n_points);
  est.tau = lifetime_tau(est.loss_rate_l, sc.hbar);
  return est;
}

double backsolve_im_a12(const SystemConfig& config, double target_tau, std::size_t n_points) {
  if (!(target_tau > 0.0)) throw ValidationError("target_tau", "must be > 0");
  const auto sc = derive_scales(config);
  const double loss = sc.hbar * std::numbers::ln2 / target_tau;
  const double im_u12 = loss / unit_overlap(config, sc, n_points);
  return -im_u12 * sc.mass / (4.0 * kPi * sc.hbar * sc.hbar);
}

}  // namespace becnlo
