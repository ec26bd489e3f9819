#include "becnlo/gpe_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "becnlo/errors.hpp"

namespace becnlo {

namespace {

struct DiscreteEnergies {
  double kinetic = 0.0;
  double potential = 0.0;
  double interaction = 0.0;
};

// Energies of u = r psi on the interior nodes; u[0] = u[n-1] = 0. The
// kinetic term uses forward differences so that it matches the three-point
// Laplacian of the propagator.
DiscreteEnergies energies(const std::vector<double>& u, const GpeProblem& p) {
  const auto& grid = p.grid();
  const double h = grid.spacing();
  const double kin = p.hbar * p.hbar / (2.0 * p.mass);
  DiscreteEnergies e;
  double grad = 0.0, pot = 0.0, inter = 0.0;
  for (std::size_t i = 0; i + 1 < u.size(); ++i) {
    const double du = u[i + 1] - u[i];
    grad += du * du;
  }
  for (std::size_t i = 1; i + 1 < u.size(); ++i) {
    const double u2 = u[i] * u[i];
    const double r = grid.r(i);
    pot += p.potential[i] * u2;
    inter += u2 * u2 / (r * r);
  }
  e.kinetic = 4.0 * kPi * kin * grad / h;
  e.potential = 4.0 * kPi * h * pot;
  e.interaction = 0.5 * p.coupling * 4.0 * kPi * h * inter;
  return e;
}

double norm(const std::vector<double>& u, double h) {
  double sum = 0.0;
  for (double x : u) sum += x * x;
  return 4.0 * kPi * h * sum;
}

void validate_problem(const GpeProblem& p) {
  if (p.potential.unit() != FieldUnit::kEnergy) {
    throw ValidationError("potential", "expected an energy field");
  }
  if (!(p.coupling >= 0.0)) throw ValidationError("coupling", "must be >= 0");
  if (!(p.atom_count >= 1.0)) throw ValidationError("atom_count", "must be >= 1");
  if (!(p.mass > 0.0)) throw ValidationError("mass", "must be > 0");
  if (!(p.hbar > 0.0)) throw ValidationError("hbar", "must be > 0");
  if (!(p.time_step > 0.0)) throw ValidationError("time_step", "must be > 0");
  if (p.initial_guess && !(p.initial_guess->grid() == p.grid())) {
    throw ValidationError("initial_guess", "grid differs from potential grid");
  }
}

RadialField to_wavefunction(const std::vector<double>& u, const RadialGrid& grid) {
  std::vector<double> psi(u.size());
  for (std::size_t i = 1; i < u.size(); ++i) psi[i] = u[i] / grid.r(i);
  // psi is even: psi(r) = psi0 + c r^2 + ..., so eliminate c from nodes 1, 2.
  psi[0] = (4.0 * psi[1] - psi[2]) / 3.0;
  return RadialField(grid, std::move(psi), FieldUnit::kWavefunction);
}

RadialField gaussian_guess(const RadialGrid& grid, double width) {
  return RadialField::sample(grid, FieldUnit::kWavefunction, [width](double r) {
    return std::exp(-0.5 * r * r / (width * width));
  });
}

}  // namespace

double GpeSolution::virial_residual() const noexcept {
  return std::abs(2.0 * kinetic - 2.0 * potential + 3.0 * interaction) /
         std::abs(total_energy());
}

double GpeSolution::central_density() const noexcept { return wavefunction[0] * wavefunction[0]; }

double GpeSolution::density_at_node(std::size_t i) const noexcept {
  return wavefunction[i] * wavefunction[i];
}

GpeSolution solve_ground_state(const GpeProblem& problem, double tol, long max_iters) {
  validate_problem(problem);
  if (!(tol > 0.0)) throw ValidationError("tol", "must be > 0");

  const auto& grid = problem.grid();
  const std::size_t n = grid.size();
  const double h = grid.spacing();
  const double rate = problem.time_step / problem.hbar;
  const double kin = problem.hbar * problem.hbar / (2.0 * problem.mass * h * h);

  const RadialField guess = problem.initial_guess
                                ? *problem.initial_guess
                                : gaussian_guess(grid, grid.r_max() / 6.0);
  std::vector<double> u(n, 0.0);
  for (std::size_t i = 1; i + 1 < n; ++i) u[i] = grid.r(i) * guess[i];
  {
    const double nrm = norm(u, h);
    if (!(nrm > 0.0)) throw ValidationError("initial_guess", "vanishes on the grid");
    const double scale = std::sqrt(problem.atom_count / nrm);
    for (double& x : u) x *= scale;
  }

  auto e = energies(u, problem);
  double energy = e.kinetic + e.potential + e.interaction;
  double mu = (e.kinetic + e.potential + 2.0 * e.interaction) / problem.atom_count;
  double max_rise = 0.0;
  double change = std::numeric_limits<double>::infinity();

  // Thomas-algorithm scratch for the interior system.
  const std::size_t m = n - 2;
  std::vector<double> cprime(m), dprime(m);
  const double off = -rate * kin;

  for (long it = 1; it <= max_iters; ++it) {
    for (std::size_t k = 0; k < m; ++k) {
      const std::size_t i = k + 1;
      const double r = grid.r(i);
      const double dens = (u[i] / r) * (u[i] / r);
      const double diag =
          1.0 + rate * (2.0 * kin + problem.potential[i] + problem.coupling * dens);
      if (k == 0) {
        cprime[k] = off / diag;
        dprime[k] = u[i] / diag;
      } else {
        const double denom = diag - off * cprime[k - 1];
        cprime[k] = off / denom;
        dprime[k] = (u[i] - off * dprime[k - 1]) / denom;
      }
    }
    u[m] = dprime[m - 1];
    for (std::size_t k = m - 1; k-- > 0;) u[k + 1] = dprime[k] - cprime[k] * u[k + 2];

    const double scale = std::sqrt(problem.atom_count / norm(u, h));
    for (double& x : u) x *= scale;

    e = energies(u, problem);
    const double next_energy = e.kinetic + e.potential + e.interaction;
    const double next_mu = (e.kinetic + e.potential + 2.0 * e.interaction) / problem.atom_count;
    max_rise = std::max(max_rise, (next_energy - energy) / std::abs(energy));
    change = std::abs(next_mu - mu) / std::abs(next_mu);
    energy = next_energy;
    mu = next_mu;

    if (change < tol) {
      GpeSolution sol{to_wavefunction(u, grid), mu, e.kinetic, e.potential, e.interaction,
                      problem.atom_count, it, max_rise};
      return sol;
    }
  }
  throw ConvergenceError("imaginary-time propagation did not converge within " +
                             std::to_string(max_iters) + " steps",
                         change, max_iters);
}

TfGpeComparison compare_tf_vs_gpe(const SystemConfig& config, const OracleOptions& options) {
  const auto sc = derive_scales(config);
  const double mu_tf = tf_chemical_potential(config, sc);
  const double radius = tf_radius(sc, mu_tf);
  const double r_max = std::max(options.radius_factor * radius, options.min_extent_d * sc.d);
  const RadialGrid grid(r_max, options.n_points);
  const auto tf = tf_density(config, sc, mu_tf, grid);

  // TF start with a small Gaussian floor so the edge region is not empty.
  const double floor = 1e-6 * tf.density()[0];
  auto guess = RadialField::sample(grid, FieldUnit::kWavefunction, [&](double r) {
    const double x = r / radius;
    return std::sqrt(tf.density_at(r) + floor * std::exp(-x * x));
  });

  GpeProblem problem{
      RadialField::sample(grid, FieldUnit::kEnergy,
                          [&](double r) { return sc.trap_potential(r); }),
      sc.u11,
      static_cast<double>(config.n_host),
      sc.mass,
      sc.hbar,
      options.step_periods * 2.0 * kPi / sc.omega,
      std::move(guess)};
  const auto sol = solve_ground_state(problem, options.tol, options.max_iters);

  TfGpeComparison cmp;
  cmp.mu_tf = mu_tf;
  cmp.mu_gpe = sol.mu;
  cmp.rel_mu_error = std::abs(mu_tf - sol.mu) / sol.mu;
  cmp.central_density_tf = tf.density()[0];
  cmp.central_density_gpe = sol.central_density();
  cmp.rel_central_density_error =
      std::abs(cmp.central_density_tf - cmp.central_density_gpe) / cmp.central_density_gpe;

  std::vector<double> diff2(grid.size()), gpe2(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double ng = sol.density_at_node(i);
    const double dn = tf.density()[i] - ng;
    diff2[i] = dn * dn;
    gpe2[i] = ng * ng;
  }
  cmp.l2_density_error =
      std::sqrt(quad::radial_integral(grid, diff2) / quad::radial_integral(grid, gpe2));
  cmp.virial_residual = sol.virial_residual();
  cmp.max_energy_rise = sol.max_energy_rise;
  cmp.iterations = sol.iterations;
  cmp.n_points = grid.size();
  cmp.r_max = grid.r_max();
  return cmp;
}

double mode_overlap(const GpeSolution& solution, const StoredMode& mode) {
  const auto& psi = solution.wavefunction;
  std::vector<double> prod(psi.size());
  for (std::size_t i = 0; i < psi.size(); ++i) {
    prod[i] = psi[i] * mode.amplitude(psi.grid().r(i));
  }
  const double amp = quad::radial_integral(psi.grid(), prod);
  return amp * amp / solution.atom_count;
}

StoredOverlap solve_stored_in_host(const SystemConfig& config, const OracleOptions& options) {
  const auto sc = derive_scales(config);
  const double mu = tf_chemical_potential(config, sc);
  const double radius = tf_radius(sc, mu);
  const double r_max = std::max({options.radius_factor * radius, options.min_extent_d * sc.d,
                                 8.0 * sc.s});
  const RadialGrid grid(r_max, options.n_points);
  const auto host = tf_density(config, sc, mu, grid);
  const auto mode = StoredMode::from_scales(sc);

  GpeProblem problem{
      RadialField::sample(grid, FieldUnit::kEnergy,
                          [&](double r) {
                            return sc.trap_potential(r) + sc.u12 * host.density_at(r);
                          }),
      0.0,
      static_cast<double>(std::max(1L, config.n_stored_max)),
      sc.mass,
      sc.hbar,
      options.step_periods * 2.0 * kPi / sc.omega_tilde,
      mode.profile(grid)};
  const auto sol = solve_ground_state(problem, options.tol, options.max_iters);

  StoredOverlap out;
  out.overlap = mode_overlap(sol, mode);
  out.mu = sol.mu;
  out.mu_effective = sc.u12 * mu / sc.u11 + 1.5 * sc.hbar * sc.omega_tilde;
  out.iterations = sol.iterations;
  return out;
}

}  // namespace becnlo
