#include "becnlo/params.hpp"

#include <cmath>
#include <string>

#include "becnlo/errors.hpp"

namespace becnlo {

namespace {

void require_positive(double value, const char* field) {
  if (!std::isfinite(value) || value <= 0.0) {
    throw ValidationError(field, "must be finite and > 0, got " + std::to_string(value));
  }
}

}  // namespace

void validate(const SystemConfig& config) {
  const auto& sp = config.species;
  require_positive(sp.mass, "mass_kg");
  require_positive(sp.a11, "a11_m");
  require_positive(sp.a22, "a22_m");
  if (!std::isfinite(sp.a12) || sp.a12 < 0.0) {
    throw ValidationError("a12_m", "must be finite and >= 0");
  }
  if (!std::isfinite(sp.im_a12) || sp.im_a12 > 0.0) {
    throw ValidationError("im_a12_m", "must be <= 0 (loss reduces the norm)");
  }
  require_positive(config.trap.omega, "omega_rad_s");
  require_positive(config.hbar, "hbar");
  if (config.n_host < 1) throw ValidationError("n_host", "must be >= 1");
  if (config.n_stored_max < 0) throw ValidationError("n_stored_max", "must be >= 0");

  if (!(sp.a11 * sp.a22 > sp.a12 * sp.a12)) {
    throw ValidationError("a12_m", "phase-separating: requires a11*a22 > a12^2");
  }
  if (!(sp.a11 > sp.a12)) {
    throw ValidationError("a12_m", "stored component untrapped: requires a11 > a12");
  }
}

double interaction_strength(double scattering_length, double mass, double hbar) {
  return 4.0 * kPi * hbar * hbar * scattering_length / mass;
}

DerivedScales derive_scales(const SystemConfig& config) {
  validate(config);
  const auto& sp = config.species;
  const double hbar = config.hbar;
  const double omega = config.trap.omega;

  DerivedScales sc;
  sc.hbar = hbar;
  sc.mass = sp.mass;
  sc.omega = omega;
  sc.d = std::sqrt(hbar / (sp.mass * omega));
  sc.e_trap = hbar * omega;
  sc.u11 = interaction_strength(sp.a11, sp.mass, hbar);
  sc.u22 = interaction_strength(sp.a22, sp.mass, hbar);
  sc.u12 = interaction_strength(sp.a12, sp.mass, hbar);
  sc.eff_trap_factor = 1.0 - sp.a12 / sp.a11;
  sc.omega_tilde = omega * std::sqrt(sc.eff_trap_factor);
  sc.s = std::sqrt(hbar / (sp.mass * sc.omega_tilde));
  sc.a22_tilde = sp.a22 - sp.a12 * sp.a12 / sp.a11;
  sc.u22_tilde = interaction_strength(sc.a22_tilde, sp.mass, hbar);
  sc.omega_nl =
      sc.u22_tilde / (2.0 * std::pow(2.0 * kPi, 1.5) * sc.s * sc.s * sc.s * hbar);
  return sc;
}

ConditionFlags check_conditions(const SystemConfig& config, const DerivedScales& scales,
                                double mu) {
  ConditionFlags flags;
  const double radius = std::sqrt(2.0 * mu / (scales.mass * scales.omega * scales.omega));
  flags.tf_ratio = radius / scales.d;
  const double n_peak = mu / scales.u11;
  const double a = config.species.a11;
  flags.diluteness = n_peak * a * a * a;
  flags.tf_ok = flags.tf_ratio > flags.tf_ratio_threshold;
  flags.dilute_ok = flags.diluteness < flags.diluteness_threshold;
  return flags;
}

SystemConfig sodium_reference_config() {
  SystemConfig c;
  c.species.mass = 3.82e-26;
  c.species.a11 = 2.75e-9;
  c.species.a22 = 2.85e-9;
  c.species.a12 = 2.65e-9;
  c.species.im_a12 = 0.0;
  c.trap.omega = 100.0 * kPi;
  c.n_host = 1'000'000;
  c.n_stored_max = 10;
  return c;
}

}  // namespace becnlo
