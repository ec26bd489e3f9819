#pragma once

#include <cstddef>
#include <optional>

#include "becnlo/constants.hpp"
#include "becnlo/host_tf.hpp"
#include "becnlo/params.hpp"
#include "becnlo/radial.hpp"
#include "becnlo/stored_mode.hpp"

namespace becnlo {

// Stationary spherically symmetric Gross-Pitaevskii problem
//   [-(hbar^2/2m) lap + V(r) + g |psi|^2] psi = mu psi,  4 pi \int r^2 psi^2 dr = N.
struct GpeProblem {
  RadialField potential;  // J, on the solver grid
  double coupling = 0.0;  // g, J m^3
  double atom_count = 1.0;
  double mass = 0.0;
  double hbar = kHbar;
  double time_step = 0.0;  // imaginary time step, s
  // Starting wavefunction (m^-3/2) on the same grid; Gaussian of the grid's
  // harmonic length when absent.
  std::optional<RadialField> initial_guess;

  const RadialGrid& grid() const noexcept { return potential.grid(); }
};

struct GpeSolution {
  RadialField wavefunction;  // psi(r), m^-3/2, normalized to atom_count
  double mu = 0.0;
  double kinetic = 0.0;      // J, totals over all atoms
  double potential = 0.0;
  double interaction = 0.0;
  double atom_count = 0.0;
  long iterations = 0;
  // Largest relative rise of the total energy between successive steps;
  // <= ~1e-12 means the descent was monotone.
  double max_energy_rise = 0.0;

  double total_energy() const noexcept { return kinetic + potential + interaction; }
  // |2 E_kin - 2 E_pot + 3 E_int| / E_total. Meaningful for harmonic V only.
  double virial_residual() const noexcept;
  // psi(0)^2 from the r psi samples near the origin.
  double central_density() const noexcept;
  double density_at_node(std::size_t i) const noexcept;
};

inline constexpr double kDefaultGpeTolerance = 1e-12;
inline constexpr long kDefaultGpeMaxIters = 2'000'000;
// Default imaginary time step as a fraction of the trap period.
inline constexpr double kDefaultStepPeriods = 1e-4;

// Backward-Euler imaginary-time propagation of u = r psi with the
// nonlinearity lagged one step, renormalizing after every step. Converged
// when |mu_k - mu_{k-1}| / |mu_k| < tol. Throws ConvergenceError otherwise.
GpeSolution solve_ground_state(const GpeProblem& problem, double tol = kDefaultGpeTolerance,
                               long max_iters = kDefaultGpeMaxIters);

struct OracleOptions {
  std::size_t n_points = kDefaultGridPoints;
  double radius_factor = kDefaultRadiusFactor;
  // Grid never shorter than this many oscillator lengths, so weakly
  // interacting clouds are not truncated.
  double min_extent_d = 8.0;
  double step_periods = kDefaultStepPeriods;
  double tol = kDefaultGpeTolerance;
  long max_iters = kDefaultGpeMaxIters;
};

struct TfGpeComparison {
  double mu_tf = 0.0;
  double mu_gpe = 0.0;
  double rel_mu_error = 0.0;  // |mu_tf - mu_gpe| / mu_gpe
  double central_density_tf = 0.0;
  double central_density_gpe = 0.0;
  double rel_central_density_error = 0.0;
  double l2_density_error = 0.0;  // ||n_tf - n_gpe||_2 / ||n_gpe||_2
  double virial_residual = 0.0;
  double max_energy_rise = 0.0;
  long iterations = 0;
  std::size_t n_points = 0;
  double r_max = 0.0;
};

// Host GP ground state in the bare trap against the TF profile.
TfGpeComparison compare_tf_vs_gpe(const SystemConfig& config, const OracleOptions& options = {});

struct StoredOverlap {
  double overlap = 0.0;       // |<phi|psi>|^2 / N
  double mu = 0.0;            // J
  double mu_effective = 0.0;  // U12 mu_host / U11 + 3/2 hbar omega~
  long iterations = 0;
};

// |<phi|psi>|^2 / N for a solved wavefunction and an analytic mode.
double mode_overlap(const GpeSolution& solution, const StoredMode& mode);

// Stored component (self-interaction neglected) in V(r) + U12 n1_TF(r),
// compared with the effective-trap Gaussian.
StoredOverlap solve_stored_in_host(const SystemConfig& config, const OracleOptions& options = {});

}  // namespace becnlo
