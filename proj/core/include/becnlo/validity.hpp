#pragma once

#include <cstddef>
#include <vector>

#include "becnlo/host_tf.hpp"
#include "becnlo/params.hpp"
#include "becnlo/radial.hpp"
#include "becnlo/stored_mode.hpp"
#include "becnlo/table.hpp"

namespace becnlo {

// Which stored-stored coupling enters the self-interaction energy.
enum class SelfCoupling {
  kEffective,  // U22~ (host-dressed)
  kBare,       // U22
};

struct AnalysisOptions {
  std::size_t n_points = kDefaultGridPoints;
  double radius_factor = kDefaultRadiusFactor;
  // Coarse-graining cell for density fluctuations; <= 0 selects d^3.
  double cell_volume = 0.0;
  SelfCoupling self_coupling = SelfCoupling::kEffective;
};

// Largest grid index where kinetic quantities are defined: r_i < R - 2 dr.
std::size_t kinetic_limit_index(const TfSolution& host);

// Kinetic energy per atom of the TF host, -(hbar^2/2m) lap(psi)/psi with
// psi = sqrt(n1), in closed form:
//   K = 3 hbar^2 omega^2 / (4 f) + hbar^2 m omega^4 r^2 / (8 f^2),  f = mu - V(r).
// Throws NumericalError for r outside [0, R - 2 dr).
double kinetic_correction(const TfSolution& host, double r);

// Same quantity from fourth-order finite differences of sqrt(n1) sampled on
// the host grid, at node `index` (<= kinetic_limit_index).
double kinetic_correction_fd(const TfSolution& host, std::size_t index);

// K U12 / U11: what the kinetic density correction does to the stored
// component's inter-component energy.
double rescaled_kinetic(double kinetic, const DerivedScales& scales);

// Self-interaction energy per stored atom: U n_stored phi^2(r).
double stored_self_energy(const StoredMode& mode, long n_stored, const DerivedScales& scales,
                          double r, SelfCoupling coupling = SelfCoupling::kEffective);

// Local-density Bogoliubov depletion (8 / 3 sqrt(pi)) sqrt(n1 a11^3) n1 at r.
double quantum_depletion(const TfSolution& host, const DerivedScales& scales, double r);
double depletion_fraction(double density, double a11);

// Standard deviation of the host density coarse-grained over `cell_volume`:
// sqrt(2 N_c N_dep) / cell_volume with N_c = n1 V, N_dep = n_dep V.
double density_std(double host_density, double depletion_density, double cell_volume);
double density_std(const TfSolution& host, const RadialField& depletion, double cell_volume,
                   double r);

// Energies per atom (J) for every node up to kinetic_limit_index.
struct EnergyProfile {
  RadialGrid grid;
  std::vector<double> r;
  std::vector<double> trap_e;
  std::vector<double> host_coll_e;
  std::vector<double> cross_coll_e;
  std::vector<double> kinetic_e;
  std::vector<double> rescaled_kinetic_e;
  std::vector<double> stored_self_e;
  double reporting_unit = 0.0;  // hbar omega
};

// Densities (m^-3) over the same nodes.
struct DensityProfile {
  RadialGrid grid;
  std::vector<double> r;
  std::vector<double> host_density;
  std::vector<double> stored_density;
  std::vector<double> depletion_density;
  std::vector<double> density_std;
  double cell_volume = 0.0;
  double reporting_volume = 0.0;  // d^3
};

EnergyProfile energy_profile(const SystemConfig& config, const AnalysisOptions& options = {});
DensityProfile density_profile(const SystemConfig& config, const AnalysisOptions& options = {});

// Tables behind the three analysis figures; `fig` is 2, 3 or 4.
//   2: trap, host collisional, cross collisional and kinetic energy per host atom (hbar omega)
//   3: rescaled kinetic energy and stored self-energy (hbar omega)
//   4: host, stored, depleted densities and density std per d^3
// log10_ columns follow the raw ones.
Table figure_data(int fig, const SystemConfig& config, const AnalysisOptions& options = {});

struct ValidityRatios {
  double kinetic_over_host = 0.0;      // K / (U11 n1)
  double depletion_over_host = 0.0;    // n_dep / n1
  double rescaled_kinetic_over_self = 0.0;
  double depletion_over_stored = 0.0;
  double std_over_stored = 0.0;
};

// Verdicts pass when the corresponding ratio (max over r <= R/2) is below
// `threshold`.
struct ValidityReport {
  bool single_component_tf_ok = false;
  bool single_component_mf_ok = false;
  bool two_component_tf_ok = false;
  bool two_component_mf_ok = false;
  ValidityRatios ratios;
  double threshold = 1.0;
  double radius = 0.0;
  double mu = 0.0;
  long n_stored = 0;
  ConditionFlags conditions;
};

ValidityReport validity_report(const SystemConfig& config, const AnalysisOptions& options = {});

}  // namespace becnlo
