#pragma once

#include "becnlo/constants.hpp"

namespace becnlo {

// Atomic species data. Scattering lengths in meters, mass in kg.
// Index 1 is the host level, index 2 the level holding the stored light.
struct SpeciesParams {
  double mass = 0.0;
  double a11 = 0.0;
  double a22 = 0.0;
  double a12 = 0.0;
  // Imaginary part of a12 (two-body loss). Zero means the loss channel is
  // not configured; a physical loss channel has im_a12 < 0.
  double im_a12 = 0.0;
};

struct TrapParams {
  double omega = 0.0;  // rad/s
};

struct SystemConfig {
  SpeciesParams species;
  TrapParams trap;
  long n_host = 0;
  long n_stored_max = 0;
  // Overridable for unit tests only; never read from a config file.
  double hbar = kHbar;
};

// Every secondary scale of a scenario, computed once by derive_scales().
struct DerivedScales {
  double hbar = 0.0;
  double mass = 0.0;
  double omega = 0.0;

  double d = 0.0;       // oscillator length sqrt(hbar / (m omega))
  double e_trap = 0.0;  // hbar omega
  double u11 = 0.0;     // 4 pi hbar^2 a_ij / m, J m^3
  double u22 = 0.0;
  double u12 = 0.0;
  double eff_trap_factor = 0.0;  // 1 - U12/U11
  double omega_tilde = 0.0;      // omega sqrt(eff_trap_factor)
  double s = 0.0;                // stored-mode length sqrt(hbar / (m omega_tilde))
  double a22_tilde = 0.0;        // a22 - a12^2 / a11
  double u22_tilde = 0.0;
  double omega_nl = 0.0;  // nonlinear rate: hbar Omega = U22~ / (2 (2 pi)^{3/2} s^3)

  // Harmonic trap V(r) = m omega^2 r^2 / 2.
  double trap_potential(double r) const { return 0.5 * mass * omega * omega * r * r; }
};

// Throws ValidationError naming the first offending field.
void validate(const SystemConfig& config);

DerivedScales derive_scales(const SystemConfig& config);

// Interaction strength for a scattering length: 4 pi hbar^2 a / m.
double interaction_strength(double scattering_length, double mass, double hbar = kHbar);

// Thresholds standing in for "much greater" / "much less" in the
// single-component Thomas-Fermi and diluteness conditions.
inline constexpr double kTfRatioThreshold = 3.0;
inline constexpr double kDilutenessThreshold = 1e-3;

struct ConditionFlags {
  double tf_ratio = 0.0;    // R / d
  double diluteness = 0.0;  // n_peak a11^3
  double tf_ratio_threshold = kTfRatioThreshold;
  double diluteness_threshold = kDilutenessThreshold;
  bool tf_ok = false;
  bool dilute_ok = false;
};

// `mu` is the Thomas-Fermi chemical potential of the host (J).
ConditionFlags check_conditions(const SystemConfig& config, const DerivedScales& scales,
                                double mu);

// The sodium-23 scenario analysed throughout: m = 3.82e-26 kg, omega = 100 pi,
// a11 = 2.75 nm, a22 = 2.85 nm, a12 = 2.65 nm, N = 1e6, 10 stored atoms.
// im_a12 is left at zero (loss channel not configured).
SystemConfig sodium_reference_config();

}  // namespace becnlo
