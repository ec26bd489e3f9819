#include "becnlo/validity.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "becnlo/errors.hpp"

namespace becnlo {

namespace {

double scattering_length_from(double u, const DerivedScales& sc) {
  return u * sc.mass / (4.0 * kPi * sc.hbar * sc.hbar);
}

double linear_interpolate(const RadialField& field, double r) {
  const auto& grid = field.grid();
  if (r <= 0.0) return field[0];
  if (r >= grid.r_max()) return field[grid.size() - 1];
  const std::size_t i = grid.last_index_within(r);
  if (i + 1 >= grid.size()) return field[i];
  const double t = (r - grid.r(i)) / grid.spacing();
  return (1.0 - t) * field[i] + t * field[i + 1];
}

// Ratio that treats 0/0 as 0 and x/0 as +inf.
double safe_ratio(double num, double den) {
  if (den > 0.0) return num / den;
  return num > 0.0 ? std::numeric_limits<double>::infinity() : 0.0;
}

struct Analysis {
  DerivedScales sc;
  TfSolution host;
  StoredMode mode;
  long n_stored;
  double cell_volume;
};

Analysis analyse(const SystemConfig& config, const AnalysisOptions& options) {
  const auto sc = derive_scales(config);
  const double mu = tf_chemical_potential(config, sc);
  auto host = tf_density(config, sc, mu,
                         default_grid(sc, mu, options.n_points, options.radius_factor));
  const double cell = options.cell_volume > 0.0 ? options.cell_volume : sc.d * sc.d * sc.d;
  return {sc, std::move(host), StoredMode::from_scales(sc), config.n_stored_max, cell};
}

}  // namespace

std::size_t kinetic_limit_index(const TfSolution& host) {
  const auto& grid = host.grid();
  const double limit = host.radius() - 2.0 * grid.spacing();
  std::size_t i = grid.last_index_within(limit);
  while (i > 0 && grid.r(i) >= limit) --i;
  return i;
}

double kinetic_correction(const TfSolution& host, double r) {
  const double limit = host.radius() - 2.0 * host.grid().spacing();
  if (!(r >= 0.0 && r < limit)) {
    throw NumericalError("kinetic correction requested inside the TF edge exclusion zone");
  }
  const auto& sc = host.scales();
  const double hbar2 = sc.hbar * sc.hbar;
  const double w2 = sc.omega * sc.omega;
  const double f = host.mu() - sc.trap_potential(r);
  return 3.0 * hbar2 * w2 / (4.0 * f) + hbar2 * sc.mass * w2 * w2 * r * r / (8.0 * f * f);
}

double kinetic_correction_fd(const TfSolution& host, std::size_t index) {
  if (index > kinetic_limit_index(host)) {
    throw NumericalError("finite-difference stencil reaches the TF edge");
  }
  const auto& grid = host.grid();
  const auto& n1 = host.density();
  // psi is even in r; reflect indices through the origin.
  auto psi = [&](long j) { return std::sqrt(n1[static_cast<std::size_t>(std::abs(j))]); };
  const long i = static_cast<long>(index);
  const double h = grid.spacing();
  const double d2 =
      (-psi(i + 2) + 16.0 * psi(i + 1) - 30.0 * psi(i) + 16.0 * psi(i - 1) - psi(i - 2)) /
      (12.0 * h * h);
  double laplacian;
  if (index == 0) {
    laplacian = 3.0 * d2;
  } else {
    const double d1 = (-psi(i + 2) + 8.0 * psi(i + 1) - 8.0 * psi(i - 1) + psi(i - 2)) / (12.0 * h);
    laplacian = d2 + 2.0 * d1 / grid.r(index);
  }
  const auto& sc = host.scales();
  return -sc.hbar * sc.hbar / (2.0 * sc.mass) * laplacian / psi(i);
}

double rescaled_kinetic(double kinetic, const DerivedScales& scales) {
  return kinetic * scales.u12 / scales.u11;
}

double stored_self_energy(const StoredMode& mode, long n_stored, const DerivedScales& scales,
                          double r, SelfCoupling coupling) {
  if (n_stored < 0) throw ValidationError("n_stored", "must be >= 0");
  const double u = coupling == SelfCoupling::kEffective ? scales.u22_tilde : scales.u22;
  const double phi = mode.amplitude(r);
  return u * static_cast<double>(n_stored) * phi * phi;
}

double depletion_fraction(double density, double a11) {
  return 8.0 / (3.0 * std::sqrt(kPi)) * std::sqrt(density * a11 * a11 * a11);
}

double quantum_depletion(const TfSolution& host, const DerivedScales& scales, double r) {
  const double n1 = host.density_at(r);
  return depletion_fraction(n1, scattering_length_from(scales.u11, scales)) * n1;
}

double density_std(double host_density, double depletion_density, double cell_volume) {
  if (!(cell_volume > 0.0)) throw ValidationError("cell_volume", "must be > 0");
  const double n_c = host_density * cell_volume;
  const double n_dep = depletion_density * cell_volume;
  return std::sqrt(2.0 * n_c * n_dep) / cell_volume;
}

double density_std(const TfSolution& host, const RadialField& depletion, double cell_volume,
                   double r) {
  return density_std(host.density_at(r), linear_interpolate(depletion, r), cell_volume);
}

EnergyProfile energy_profile(const SystemConfig& config, const AnalysisOptions& options) {
  const auto a = analyse(config, options);
  const std::size_t last = kinetic_limit_index(a.host);
  EnergyProfile p{a.host.grid(), {}, {}, {}, {}, {}, {}, {}, a.sc.e_trap};
  for (std::size_t i = 0; i <= last; ++i) {
    const double r = a.host.grid().r(i);
    const double phi = a.mode.amplitude(r);
    const double k = kinetic_correction(a.host, r);
    p.r.push_back(r);
    p.trap_e.push_back(a.sc.trap_potential(r));
    p.host_coll_e.push_back(a.sc.u11 * a.host.density_at(r));
    p.cross_coll_e.push_back(a.sc.u12 * static_cast<double>(a.n_stored) * phi * phi);
    p.kinetic_e.push_back(k);
    p.rescaled_kinetic_e.push_back(rescaled_kinetic(k, a.sc));
    p.stored_self_e.push_back(
        stored_self_energy(a.mode, a.n_stored, a.sc, r, options.self_coupling));
  }
  return p;
}

DensityProfile density_profile(const SystemConfig& config, const AnalysisOptions& options) {
  const auto a = analyse(config, options);
  const std::size_t last = kinetic_limit_index(a.host);
  DensityProfile p{a.host.grid(), {}, {}, {}, {}, {}, a.cell_volume,
                   a.sc.d * a.sc.d * a.sc.d};
  for (std::size_t i = 0; i <= last; ++i) {
    const double r = a.host.grid().r(i);
    const double phi = a.mode.amplitude(r);
    const double n1 = a.host.density_at(r);
    const double dep = quantum_depletion(a.host, a.sc, r);
    p.r.push_back(r);
    p.host_density.push_back(n1);
    p.stored_density.push_back(static_cast<double>(a.n_stored) * phi * phi);
    p.depletion_density.push_back(dep);
    p.density_std.push_back(density_std(n1, dep, a.cell_volume));
  }
  return p;
}

Table figure_data(int fig, const SystemConfig& config, const AnalysisOptions& options) {
  Table t;
  std::vector<std::string> curves;
  if (fig == 2 || fig == 3) {
    const auto p = energy_profile(config, options);
    const double d = derive_scales(config).d;
    const double unit = p.reporting_unit;
    if (fig == 2) {
      curves = {"trap_hw", "host_coll_hw", "cross_coll_hw", "kinetic_hw"};
    } else {
      curves = {"rescaled_kinetic_hw", "stored_self_hw"};
    }
    t.columns = {"r_over_d"};
    t.columns.insert(t.columns.end(), curves.begin(), curves.end());
    for (std::size_t i = 0; i < p.r.size(); ++i) {
      if (fig == 2) {
        t.add_row({p.r[i] / d, p.trap_e[i] / unit, p.host_coll_e[i] / unit,
                   p.cross_coll_e[i] / unit, p.kinetic_e[i] / unit});
      } else {
        t.add_row({p.r[i] / d, p.rescaled_kinetic_e[i] / unit, p.stored_self_e[i] / unit});
      }
    }
  } else if (fig == 4) {
    const auto p = density_profile(config, options);
    const double d = derive_scales(config).d;
    const double vol = p.reporting_volume;
    curves = {"host_per_d3", "stored_per_d3", "depletion_per_d3", "std_per_d3"};
    t.columns = {"r_over_d"};
    t.columns.insert(t.columns.end(), curves.begin(), curves.end());
    for (std::size_t i = 0; i < p.r.size(); ++i) {
      t.add_row({p.r[i] / d, p.host_density[i] * vol, p.stored_density[i] * vol,
                 p.depletion_density[i] * vol, p.density_std[i] * vol});
    }
  } else {
    throw ValidationError("fig", "must be 2, 3 or 4");
  }
  t.append_log10_columns(curves);
  return t;
}

ValidityReport validity_report(const SystemConfig& config, const AnalysisOptions& options) {
  const auto a = analyse(config, options);
  ValidityReport rep;
  rep.radius = a.host.radius();
  rep.mu = a.host.mu();
  rep.n_stored = a.n_stored;
  rep.conditions = check_conditions(config, a.sc, a.host.mu());

  auto& q = rep.ratios;
  const auto& grid = a.host.grid();
  // Nodes inside R/2 plus R/2 itself, so the maxima do not depend on where
  // the last node happens to fall.
  const double half = 0.5 * a.host.radius();
  std::vector<double> radii;
  for (std::size_t i = 0; i <= grid.last_index_within(half); ++i) radii.push_back(grid.r(i));
  if (radii.back() < half) radii.push_back(half);
  for (const double r : radii) {
    const double n1 = a.host.density_at(r);
    const double k = kinetic_correction(a.host, r);
    const double dep = quantum_depletion(a.host, a.sc, r);
    const double sigma = density_std(n1, dep, a.cell_volume);
    const double phi = a.mode.amplitude(r);
    const double n2 = static_cast<double>(a.n_stored) * phi * phi;
    const double self = stored_self_energy(a.mode, a.n_stored, a.sc, r, options.self_coupling);

    q.kinetic_over_host = std::max(q.kinetic_over_host, safe_ratio(k, a.sc.u11 * n1));
    q.depletion_over_host = std::max(q.depletion_over_host, safe_ratio(dep, n1));
    q.rescaled_kinetic_over_self =
        std::max(q.rescaled_kinetic_over_self, safe_ratio(rescaled_kinetic(k, a.sc), self));
    q.depletion_over_stored = std::max(q.depletion_over_stored, safe_ratio(dep, n2));
    q.std_over_stored = std::max(q.std_over_stored, safe_ratio(sigma, n2));
  }
  rep.single_component_tf_ok = q.kinetic_over_host < rep.threshold;
  rep.single_component_mf_ok = q.depletion_over_host < rep.threshold;
  rep.two_component_tf_ok = q.rescaled_kinetic_over_self < rep.threshold;
  rep.two_component_mf_ok =
      q.depletion_over_stored < rep.threshold && q.std_over_stored < rep.threshold;
  return rep;
}

}  // namespace becnlo
