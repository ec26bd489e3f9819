#pragma once

#include <cstddef>
#include <limits>

#include "becnlo/constants.hpp"
#include "becnlo/host_tf.hpp"
#include "becnlo/params.hpp"
#include "becnlo/radial.hpp"
#include "becnlo/stored_mode.hpp"

namespace becnlo {

// Collisional loss of the stored component against the host.
// `loss_rate_l` is the magnitude |Im U12| 4 pi \int r^2 phi^2 n1 dr (J); the
// stored amplitude decays as exp(-L t / hbar) and tau is its half-life.
struct LossEstimate {
  double im_u12 = 0.0;  // J m^3, <= 0
  double loss_rate_l = 0.0;
  double tau = 0.0;  // s
};

// Quadrature form on a shared grid, truncated at `cutoff`.
// Throws ValidationError("im_a12_m", ...) when im_u12 == 0.
double loss_overlap(const RadialField& mode_profile, const RadialField& host_density,
                    double im_u12,
                    double cutoff = std::numeric_limits<double>::infinity());

// Mode sampled on the host grid, integral truncated at the TF radius.
double loss_overlap(const StoredMode& mode, const TfSolution& host, double im_u12);

// tau = hbar ln 2 / L. Throws ValidationError for L <= 0.
double lifetime_tau(double loss_energy, double hbar = kHbar);

// Full pipeline from a scenario; requires species.im_a12 != 0.
LossEstimate estimate_lifetime(const SystemConfig& config,
                               std::size_t n_points = kDefaultGridPoints);

// Im(a12) (m, negative) that gives lifetime `target_tau` for this scenario.
double backsolve_im_a12(const SystemConfig& config, double target_tau,
                        std::size_t n_points = kDefaultGridPoints);

}  // namespace becnlo
