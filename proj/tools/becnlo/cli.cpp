#include "becnlo/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "becnlo/config_io.hpp"
#include "becnlo/errors.hpp"
#include "becnlo/gpe_oracle.hpp"
#include "becnlo/host_tf.hpp"
#include "becnlo/lifetime.hpp"
#include "becnlo/params.hpp"
#include "becnlo/stored_mode.hpp"
#include "becnlo/table.hpp"
#include "becnlo/validity.hpp"
#include "json.hpp"

namespace becnlo::cli {

namespace {

using nlohmann::json;

constexpr const char* kGridEnv = "BECNLO_GRID_POINTS";
// Target half-life used to report the Im(a12) that reproduces it.
constexpr double kReferenceLifetime = 2.5e-4;

struct Options {
  std::string config_path;
  std::string out_path;
  std::optional<std::size_t> grid_points;
  long photons = 2;
  double time = 0.0;
  std::string amps = "1,1,1";
  int fig = 4;
};

std::size_t resolve_grid_points(const Options& opt) {
  if (opt.grid_points) {
    if (*opt.grid_points < 16) throw ValidationError("--grid-points", "must be >= 16");
    return *opt.grid_points;
  }
  if (const char* env = std::getenv(kGridEnv); env && *env) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (*end != '\0' || v < 16) throw ValidationError(kGridEnv, "must be an integer >= 16");
    return static_cast<std::size_t>(v);
  }
  return kDefaultGridPoints;
}

// "a,b,c" with each entry "re" or "re:im".
std::vector<FockSuperposition::Amplitude> parse_amplitudes(const std::string& text) {
  std::vector<FockSuperposition::Amplitude> amps;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    try {
      std::size_t used = 0;
      const double re = std::stod(item.substr(0, colon), &used);
      double im = 0.0;
      if (colon != std::string::npos) im = std::stod(item.substr(colon + 1));
      amps.emplace_back(re, im);
    } catch (const std::exception&) {
      throw ValidationError("--amps", "cannot parse amplitude '" + item + "'");
    }
  }
  if (amps.empty()) throw ValidationError("--amps", "no amplitudes given");
  return amps;
}

// Writes to --out when given, else to `out`.
void emit(const Options& opt, std::ostream& out, const std::string& text) {
  if (opt.out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream file(opt.out_path, std::ios::binary);
  if (!file) throw ValidationError("--out", "cannot open " + opt.out_path);
  file << text;
}

void line(std::ostream& os, const std::string& key, double value, const std::string& unit = "") {
  os << key << " = " << format_number(value);
  if (!unit.empty()) os << ' ' << unit;
  os << '\n';
}

std::string cmd_units(const SystemConfig& config) {
  const auto sc = derive_scales(config);
  const double mu = tf_chemical_potential(config, sc);
  const auto flags = check_conditions(config, sc, mu);
  std::ostringstream os;
  line(os, "d", sc.d, "m");
  line(os, "e_trap", sc.e_trap, "J");
  line(os, "u11", sc.u11, "J m^3");
  line(os, "u22", sc.u22, "J m^3");
  line(os, "u12", sc.u12, "J m^3");
  line(os, "eff_trap_factor", sc.eff_trap_factor);
  line(os, "omega_tilde", sc.omega_tilde, "rad/s");
  line(os, "s", sc.s, "m");
  line(os, "a22_tilde", sc.a22_tilde, "m");
  line(os, "u22_tilde", sc.u22_tilde, "J m^3");
  line(os, "omega_nl", sc.omega_nl, "rad/s");
  line(os, "mu_tf", mu, "J");
  line(os, "mu_tf_hw", mu / sc.e_trap);
  line(os, "tf_radius", tf_radius(sc, mu), "m");
  line(os, "tf_ratio", flags.tf_ratio);
  os << "tf_ok = " << (flags.tf_ok ? "true" : "false") << " (threshold "
     << format_number(flags.tf_ratio_threshold) << ")\n";
  line(os, "diluteness", flags.diluteness);
  os << "dilute_ok = " << (flags.dilute_ok ? "true" : "false") << " (threshold "
     << format_number(flags.diluteness_threshold) << ")\n";
  return os.str();
}

std::string cmd_phase(const SystemConfig& config, const Options& opt) {
  if (opt.photons < 0) throw ValidationError("--n", "must be >= 0");
  if (!(opt.time >= 0.0)) throw ValidationError("--t", "must be >= 0");
  const auto sc = derive_scales(config);
  const double shift = energy_shift(opt.photons, sc);
  const double phase = shift * opt.time / sc.hbar;
  std::ostringstream os;
  os << "n = " << opt.photons << '\n';
  line(os, "t", opt.time, "s");
  line(os, "delta_e", shift, "J");
  line(os, "delta_e_hw", shift / sc.e_trap);
  line(os, "phase", phase, "rad");
  line(os, "phase_mod_2pi", std::fmod(phase, 2.0 * kPi), "rad");
  return os.str();
}

std::string cmd_gate(const SystemConfig& config, const Options& opt) {
  const auto sc = derive_scales(config);
  const auto times = ns_gate_time(sc);
  const auto state = FockSuperposition::normalized(parse_amplitudes(opt.amps));
  const auto target = ns_gate_target(state);
  std::ostringstream os;
  line(os, "omega_nl", sc.omega_nl, "rad/s");
  line(os, "gate_time", times.gate_time, "s");
  line(os, "gate_time_min", times.gate_time / 60.0, "min");
  line(os, "full_phase_time", times.full_phase_time, "s");
  line(os, "full_phase_time_min", times.full_phase_time / 60.0, "min");
  os << "amplitudes =";
  for (const auto& c : state.amplitudes()) {
    os << ' ' << format_number(c.real()) << ':' << format_number(c.imag());
  }
  os << '\n';
  line(os, "fidelity_at_gate_time",
       gate_fidelity(evolve(state, times.gate_time, sc), target));
  line(os, "fidelity_at_full_phase_time",
       gate_fidelity(evolve(state, times.full_phase_time, sc), target));
  return os.str();
}

std::string cmd_lifetime(const SystemConfig& config, std::size_t n_points) {
  const auto est = estimate_lifetime(config, n_points);
  std::ostringstream os;
  line(os, "im_a12", config.species.im_a12, "m");
  line(os, "im_u12", est.im_u12, "J m^3");
  line(os, "loss_energy", est.loss_rate_l, "J");
  line(os, "tau", est.tau, "s");
  line(os, "im_a12_for_tau_2.5e-4_s", backsolve_im_a12(config, kReferenceLifetime, n_points),
       "m");
  return os.str();
}

std::string cmd_validity(const SystemConfig& config, std::size_t n_points) {
  AnalysisOptions ao;
  ao.n_points = n_points;
  const auto rep = validity_report(config, ao);
  json doc = {
      {"single_component_tf_ok", rep.single_component_tf_ok},
      {"single_component_mf_ok", rep.single_component_mf_ok},
      {"two_component_tf_ok", rep.two_component_tf_ok},
      {"two_component_mf_ok", rep.two_component_mf_ok},
      {"threshold", rep.threshold},
      {"ratios",
       {{"kinetic_over_host", rep.ratios.kinetic_over_host},
        {"depletion_over_host", rep.ratios.depletion_over_host},
        {"rescaled_kinetic_over_stored_self", rep.ratios.rescaled_kinetic_over_self},
        {"depletion_over_stored", rep.ratios.depletion_over_stored},
        {"std_over_stored", rep.ratios.std_over_stored}}},
      {"mu_J", rep.mu},
      {"tf_radius_m", rep.radius},
      {"n_stored", rep.n_stored},
      {"conditions",
       {{"tf_ratio", rep.conditions.tf_ratio},
        {"tf_ratio_threshold", rep.conditions.tf_ratio_threshold},
        {"tf_ok", rep.conditions.tf_ok},
        {"diluteness", rep.conditions.diluteness},
        {"diluteness_threshold", rep.conditions.diluteness_threshold},
        {"dilute_ok", rep.conditions.dilute_ok}}},
  };
  return doc.dump(2) + "\n";
}

std::string cmd_figures(const SystemConfig& config, const Options& opt, std::size_t n_points) {
  if (opt.fig < 2 || opt.fig > 4) throw ValidationError("--fig", "must be 2, 3 or 4");
  AnalysisOptions ao;
  ao.n_points = n_points;
  return figure_data(opt.fig, config, ao).to_csv();
}

std::string cmd_oracle(const SystemConfig& config, std::size_t n_points) {
  OracleOptions oo;
  oo.n_points = n_points;
  const auto cmp = compare_tf_vs_gpe(config, oo);
  const auto stored = solve_stored_in_host(config, oo);
  json doc = {
      {"host",
       {{"mu_tf_J", cmp.mu_tf},
        {"mu_gpe_J", cmp.mu_gpe},
        {"rel_mu_error", cmp.rel_mu_error},
        {"central_density_tf_m3", cmp.central_density_tf},
        {"central_density_gpe_m3", cmp.central_density_gpe},
        {"rel_central_density_error", cmp.rel_central_density_error},
        {"l2_density_error", cmp.l2_density_error},
        {"virial_residual", cmp.virial_residual},
        {"max_energy_rise", cmp.max_energy_rise},
        {"iterations", cmp.iterations},
        {"n_points", cmp.n_points},
        {"r_max_m", cmp.r_max}}},
      {"stored",
       {{"overlap_with_effective_trap_mode", stored.overlap},
        {"mu_J", stored.mu},
        {"mu_effective_trap_J", stored.mu_effective},
        {"iterations", stored.iterations}}},
  };
  return doc.dump(2) + "\n";
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options opt;
  CLI::App app{"Nonlinear phase shifts of light stored in a two-component BEC", "becnlo"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("-c,--config", opt.config_path, "Scenario JSON file")->required();
  app.add_option("-o,--out", opt.out_path, "Write results to this file instead of stdout");
  app.add_option("--grid-points", opt.grid_points,
                 std::string("Radial grid size (default 4096, or $") + kGridEnv + ")");

  auto* units = app.add_subcommand("units", "Print derived scales and TF conditions");
  auto* phase = app.add_subcommand("phase", "Energy shift and phase of an n-photon Fock state");
  phase->add_option("--n", opt.photons, "Photon number")->required();
  phase->add_option("--t", opt.time, "Storage time in seconds")->required();
  auto* gate = app.add_subcommand("gate", "Nonlinear-sign gate times and fidelity");
  gate->add_option("--amps", opt.amps, "Fock amplitudes c0,c1,... (each re or re:im)");
  auto* lifetime = app.add_subcommand("lifetime", "Collisional loss energy and lifetime");
  auto* validity = app.add_subcommand("validity", "Validity report as JSON");
  auto* figures = app.add_subcommand("figures", "Figure tables as CSV");
  figures->add_option("--fig", opt.fig, "Figure number: 2, 3 or 4")->required();
  auto* oracle = app.add_subcommand("oracle", "TF vs Gross-Pitaevskii comparison as JSON");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }

  try {
    const SystemConfig config = load_config(opt.config_path);
    const std::size_t n_points = resolve_grid_points(opt);
    std::string text;
    if (units->parsed()) text = cmd_units(config);
    else if (phase->parsed()) text = cmd_phase(config, opt);
    else if (gate->parsed()) text = cmd_gate(config, opt);
    else if (lifetime->parsed()) text = cmd_lifetime(config, n_points);
    else if (validity->parsed()) text = cmd_validity(config, n_points);
    else if (figures->parsed()) text = cmd_figures(config, opt, n_points);
    else if (oracle->parsed()) text = cmd_oracle(config, n_points);
    emit(opt, out, text);
    return kExitOk;
  } catch (const ValidationError& e) {
    err << "invalid input: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ConvergenceError& e) {
    err << "did not converge: " << e.what() << " (residual " << format_number(e.residual())
        << ")\n";
    return kExitNonConvergence;
  } catch (const NumericalError& e) {
    err << "numerical error: " << e.what() << '\n';
    return kExitNonConvergence;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
}

}  // namespace becnlo::cli
