#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <vector>

#include "becnlo/params.hpp"
#include "becnlo/radial.hpp"

namespace becnlo {

// Ground state of the effective trap, matched to the stored light pulse:
// phi(r) = pi^{-3/4} s^{-3/2} exp(-r^2 / 2 s^2), unit-normalized.
class StoredMode {
 public:
  explicit StoredMode(double s);
  static StoredMode from_scales(const DerivedScales& scales) { return StoredMode(scales.s); }

  double s() const noexcept { return s_; }
  double amplitude(double r) const noexcept;

  RadialField profile(const RadialGrid& grid) const;
  // n_atoms * phi^2, in m^-3.
  RadialField density(const RadialGrid& grid, double n_atoms) const;

 private:
  double s_;
};

// Complex amplitudes c_0 .. c_nmax over stored photon number. Unit norm is
// checked on construction (1e-12).
class FockSuperposition {
 public:
  using Amplitude = std::complex<double>;
  static constexpr std::size_t kDefaultMaxPhotons = 8;
  static constexpr double kNormTolerance = 1e-12;

  explicit FockSuperposition(std::vector<Amplitude> amps);
  // Rescales `amps` to unit norm first; throws on an all-zero vector.
  static FockSuperposition normalized(std::vector<Amplitude> amps);
  static FockSuperposition fock(std::size_t n, std::size_t n_max = kDefaultMaxPhotons);

  std::span<const Amplitude> amplitudes() const noexcept { return amps_; }
  std::size_t max_photons() const noexcept { return amps_.size() - 1; }
  Amplitude operator[](std::size_t n) const noexcept { return amps_[n]; }
  double norm_squared() const noexcept;

 private:
  std::vector<Amplitude> amps_;
};

// Perturbative collisional shift of an n-photon Fock state: (n^2 - n) hbar Omega.
double energy_shift(long n, const DerivedScales& scales);

// The same shift evaluated from the pair sum, C(n,2) U22~ \int phi^4 d^3x,
// with the overlap integral done by radial quadrature.
double energy_shift_bruteforce(long n, const StoredMode& mode, const DerivedScales& scales,
                               std::size_t n_points = 4097);

// c_n(t) = exp(-i (n^2 - n) Omega t) c_n(0).
FockSuperposition evolve(const FockSuperposition& state, double t, const DerivedScales& scales);

struct GateTimes {
  double gate_time = 0.0;              // pi / (2 Omega): n = 2 amplitude picks up -1
  double full_phase_time = 0.0;  // pi / Omega
};

GateTimes ns_gate_time(const DerivedScales& scales);

// Nonlinear-sign target: c_2 -> -c_2, every other amplitude unchanged.
FockSuperposition ns_gate_target(const FockSuperposition& state);

// |<ideal|out>|^2, clamped to [0, 1].
double gate_fidelity(const FockSuperposition& out, const FockSuperposition& ideal);

}  // namespace becnlo
