#include "becnlo/stored_mode.hpp"

#include <algorithm>
#include <cmath>

#include "becnlo/errors.hpp"

namespace becnlo {

StoredMode::StoredMode(double s) : s_(s) {
  if (!(std::isfinite(s) && s > 0.0)) throw ValidationError("s", "mode length must be > 0");
}

double StoredMode::amplitude(double r) const noexcept {
  const double x = r / s_;
  return std::pow(kPi, -0.75) * std::pow(s_, -1.5) * std::exp(-0.5 * x * x);
}

RadialField StoredMode::profile(const RadialGrid& grid) const {
  return RadialField::sample(grid, FieldUnit::kWavefunction,
                             [this](double r) { return amplitude(r); });
}

RadialField StoredMode::density(const RadialGrid& grid, double n_atoms) const {
  return RadialField::sample(grid, FieldUnit::kDensity, [&](double r) {
    const double a = amplitude(r);
    return n_atoms * a * a;
  });
}

FockSuperposition::FockSuperposition(std::vector<Amplitude> amps) : amps_(std::move(amps)) {
  if (amps_.empty()) throw ValidationError("amplitudes", "need at least c_0");
  if (std::abs(norm_squared() - 1.0) > kNormTolerance) {
    throw ValidationError("amplitudes", "not unit-normalized");
  }
}

FockSuperposition FockSuperposition::normalized(std::vector<Amplitude> amps) {
  double sum = 0.0;
  for (const auto& c : amps) sum += std::norm(c);
  if (!(sum > 0.0) || !std::isfinite(sum)) {
    throw ValidationError("amplitudes", "cannot normalize a zero vector");
  }
  const double scale = 1.0 / std::sqrt(sum);
  for (auto& c : amps) c *= scale;
  return FockSuperposition(std::move(amps));
}

FockSuperposition FockSuperposition::fock(std::size_t n, std::size_t n_max) {
  if (n > n_max) throw ValidationError("n", "exceeds n_max");
  std::vector<Amplitude> amps(n_max + 1);
  amps[n] = 1.0;
  return FockSuperposition(std::move(amps));
}

double FockSuperposition::norm_squared() const noexcept {
  double sum = 0.0;
  for (const auto& c : amps_) sum += std::norm(c);
  return sum;
}

double energy_shift(long n, const DerivedScales& scales) {
  if (n < 0) throw ValidationError("n", "photon number must be >= 0");
  const double nn = static_cast<double>(n);
  return (nn * nn - nn) * scales.hbar * scales.omega_nl;
}

double energy_shift_bruteforce(long n, const StoredMode& mode, const DerivedScales& scales,
                               std::size_t n_points) {
  if (n < 0) throw ValidationError("n", "photon number must be >= 0");
  if (n < 2) return 0.0;
  // phi^4 ~ exp(-2 r^2/s^2) is below 1e-120 at 12 s.
  const RadialGrid grid(12.0 * mode.s(), n_points);
  std::vector<double> phi4(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double a = mode.amplitude(grid.r(i));
    phi4[i] = a * a * a * a;
  }
  const double overlap = quad::radial_integral(grid, phi4);
  const double pairs = 0.5 * static_cast<double>(n) * static_cast<double>(n - 1);
  return pairs * scales.u22_tilde * overlap;
}

FockSuperposition evolve(const FockSuperposition& state, double t, const DerivedScales& scales) {
  if (!(t >= 0.0)) throw ValidationError("t", "must be >= 0");
  std::vector<FockSuperposition::Amplitude> out(state.amplitudes().begin(),
                                                state.amplitudes().end());
  for (std::size_t n = 0; n < out.size(); ++n) {
    const double nn = static_cast<double>(n);
    const double phase = (nn * nn - nn) * scales.omega_nl * t;
    out[n] *= std::polar(1.0, -phase);
  }
  return FockSuperposition(std::move(out));
}

GateTimes ns_gate_time(const DerivedScales& scales) {
  if (!(scales.omega_nl > 0.0)) throw ValidationError("omega_nl", "must be > 0");
  return {kPi / (2.0 * scales.omega_nl), kPi / scales.omega_nl};
}

FockSuperposition ns_gate_target(const FockSuperposition& state) {
  std::vector<FockSuperposition::Amplitude> out(state.amplitudes().begin(),
                                                state.amplitudes().end());
  if (out.size() > 2) out[2] = -out[2];
  return FockSuperposition(std::move(out));
}

double gate_fidelity(const FockSuperposition& out, const FockSuperposition& ideal) {
  if (out.max_photons() != ideal.max_photons()) {
    throw ValidationError("ideal", "photon-number cutoffs differ");
  }
  std::complex<double> overlap = 0.0;
  for (std::size_t n = 0; n <= out.max_photons(); ++n) overlap += std::conj(ideal[n]) * out[n];
  return std::clamp(std::norm(overlap), 0.0, 1.0);
}

}  // namespace becnlo
