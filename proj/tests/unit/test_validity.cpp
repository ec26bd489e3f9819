#include <gtest/gtest.h>

#include <cmath>

#include "becnlo/errors.hpp"
#include "becnlo/validity.hpp"

namespace becnlo {
namespace {

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

struct Host {
  SystemConfig config = sodium_reference_config();
  DerivedScales sc = derive_scales(config);
  double mu = tf_chemical_potential(config, sc);
  TfSolution tf = tf_density(config, sc, mu, default_grid(sc, mu));
};

const Host& host() {
  static const Host h;
  return h;
}

double col(const Table& t, std::size_t row, const std::string& name) {
  return t.rows.at(row).at(t.column_index(name));
}

TEST(KineticCorrection, CentreClosedForm) {
  const auto& h = host();
  const double k0 = kinetic_correction(h.tf, 0.0);
  EXPECT_LT(rel(k0, 3.0 * h.sc.e_trap * h.sc.e_trap / (4.0 * h.mu)), 1e-14);
  EXPECT_NEAR(k0 / h.sc.e_trap, 0.033, 0.001);
}

TEST(KineticCorrection, IncreasesTowardEdge) {
  const auto& h = host();
  const std::size_t last = kinetic_limit_index(h.tf);
  double prev = kinetic_correction(h.tf, 0.0);
  for (std::size_t i = 1; i <= last; ++i) {
    const double k = kinetic_correction(h.tf, h.tf.grid().r(i));
    ASSERT_GT(k, prev) << "i = " << i;
    prev = k;
  }
}

TEST(KineticCorrection, RejectsEdgeZone) {
  const auto& h = host();
  const double dr = h.tf.grid().spacing();
  EXPECT_NO_THROW(kinetic_correction(h.tf, h.tf.radius() - 2.5 * dr));
  EXPECT_THROW(kinetic_correction(h.tf, h.tf.radius() - 1.5 * dr), NumericalError);
  EXPECT_THROW(kinetic_correction(h.tf, h.tf.radius() * 1.1), NumericalError);
  EXPECT_THROW(kinetic_correction(h.tf, -1e-9), NumericalError);
  EXPECT_THROW(kinetic_correction_fd(h.tf, kinetic_limit_index(h.tf) + 1), NumericalError);
}

TEST(KineticCorrection, FlatPotentialLimit) {
  const auto& h = host();
  double prev = std::numeric_limits<double>::infinity();
  for (double scale : {1.0, 1e-1, 1e-2, 1e-3}) {
    auto sc = h.sc;
    sc.omega *= scale;
    const TfSolution tf(sc, h.mu, RadialGrid(1.5 * tf_radius(sc, h.mu), 1025));
    const double k = kinetic_correction(tf, 0.25 * tf.radius());
    EXPECT_LT(k, prev);
    prev = k;
  }
  EXPECT_LT(prev / h.sc.e_trap, 1e-6);
}

TEST(KineticCorrection, FiniteDifferencesAgreeInsideHalfRadius) {
  const auto& h = host();
  const std::size_t half = h.tf.grid().last_index_within(0.5 * h.tf.radius());
  for (std::size_t i = 0; i <= half; i += 7) {
    const double k = kinetic_correction(h.tf, h.tf.grid().r(i));
    ASSERT_LT(rel(kinetic_correction_fd(h.tf, i), k), 1e-6) << "i = " << i;
  }
}

TEST(KineticCorrection, FiniteDifferencesStayCloseOutToNinetyPercent) {
  const auto& h = host();
  const std::size_t i = h.tf.grid().last_index_within(0.9 * h.tf.radius());
  const double k = kinetic_correction(h.tf, h.tf.grid().r(i));
  EXPECT_LT(rel(kinetic_correction_fd(h.tf, i), k), 1e-4);
}

TEST(RescaledKinetic, ScalesWithCrossCoupling) {
  const auto& h = host();
  const double k0 = kinetic_correction(h.tf, 0.0);
  EXPECT_NEAR(rescaled_kinetic(k0, h.sc) / h.sc.e_trap, 0.032, 0.001);
  auto sc = h.sc;
  sc.u12 = 0.0;
  EXPECT_EQ(rescaled_kinetic(k0, sc), 0.0);
  EXPECT_EQ(rescaled_kinetic(0.0, h.sc), 0.0);
}

TEST(StoredSelfEnergy, CentreValueAndKineticDominance) {
  const auto& h = host();
  const auto mode = StoredMode::from_scales(h.sc);
  const double self = stored_self_energy(mode, 10, h.sc, 0.0);
  EXPECT_LT(rel(self / h.sc.e_trap, 1.9e-4), 0.05);
  const double ratio = rescaled_kinetic(kinetic_correction(h.tf, 0.0), h.sc) / self;
  EXPECT_NEAR(ratio, 169.0, 2.0);
}

TEST(StoredSelfEnergy, CouplingVariantsAndEmptyMode) {
  const auto& h = host();
  const auto mode = StoredMode::from_scales(h.sc);
  EXPECT_EQ(stored_self_energy(mode, 0, h.sc, 0.0), 0.0);
  const double eff = stored_self_energy(mode, 10, h.sc, 1e-6);
  const double bare = stored_self_energy(mode, 10, h.sc, 1e-6, SelfCoupling::kBare);
  EXPECT_LT(rel(bare / eff, h.sc.u22 / h.sc.u22_tilde), 1e-14);
  EXPECT_LT(rel(stored_self_energy(mode, 20, h.sc, 1e-6), 2.0 * eff), 1e-15);
  EXPECT_THROW(stored_self_energy(mode, -1, h.sc, 0.0), ValidationError);
}

TEST(QuantumDepletion, CentreFractionAndDensity) {
  const auto& h = host();
  const double n0 = h.tf.density_at(0.0);
  const double a11 = sodium_reference_config().species.a11;
  EXPECT_NEAR(depletion_fraction(n0, a11), 1.9e-3, 0.1e-3);
  const double d3 = std::pow(h.sc.d, 3);
  EXPECT_LT(rel(quantum_depletion(h.tf, h.sc, 0.0) * d3, 3.5), 0.1);
}

TEST(QuantumDepletion, FractionGrowsAsSquareRootOfDensity) {
  const double a = 2.75e-9;
  for (double n : {1e17, 1e19, 1e21}) {
    EXPECT_LT(rel(depletion_fraction(4.0 * n, a), 2.0 * depletion_fraction(n, a)), 1e-14);
  }
  EXPECT_EQ(depletion_fraction(0.0, a), 0.0);
}

TEST(QuantumDepletion, NeverExceedsHostDensity) {
  const auto p = density_profile(sodium_reference_config());
  for (std::size_t i = 0; i < p.r.size(); ++i) {
    ASSERT_LE(p.depletion_density[i], p.host_density[i]);
    ASSERT_GE(p.depletion_density[i], 0.0);
    ASSERT_GE(p.stored_density[i], 0.0);
    ASSERT_GE(p.density_std[i], 0.0);
  }
}

TEST(DensityStd, CentreValueAndZeroDepletion) {
  const auto& h = host();
  const double d3 = std::pow(h.sc.d, 3);
  const double n0 = h.tf.density_at(0.0);
  const double dep = quantum_depletion(h.tf, h.sc, 0.0);
  EXPECT_LT(rel(density_std(n0, dep, d3) * d3, 1.2e2), 0.05);
  EXPECT_EQ(density_std(n0, 0.0, d3), 0.0);
  EXPECT_THROW(density_std(n0, dep, 0.0), ValidationError);
  // N_c and N_dep both grow with the cell, so the density std does not.
  EXPECT_LT(rel(density_std(n0, dep, 4.0 * d3), density_std(n0, dep, d3)), 1e-14);
  EXPECT_LT(rel(density_std(4.0 * n0, dep, d3), 2.0 * density_std(n0, dep, d3)), 1e-14);
}

TEST(DensityStd, InterpolatedOverload) {
  const auto& h = host();
  const auto dep = RadialField::sample(h.tf.grid(), FieldUnit::kDensity,
                                       [&](double r) { return quantum_depletion(h.tf, h.sc, r); });
  const double d3 = std::pow(h.sc.d, 3);
  const double r = 0.3 * h.tf.radius() + 0.37 * h.tf.grid().spacing();
  EXPECT_LT(rel(density_std(h.tf, dep, d3, r),
                density_std(h.tf.density_at(r), quantum_depletion(h.tf, h.sc, r), d3)),
            1e-6);
}

TEST(FigureData, HeadersAndLogColumns) {
  const auto& cfg = sodium_reference_config();
  const auto f2 = figure_data(2, cfg);
  EXPECT_EQ(f2.columns,
            (std::vector<std::string>{"r_over_d", "trap_hw", "host_coll_hw", "cross_coll_hw",
                                      "kinetic_hw", "log10_trap_hw", "log10_host_coll_hw",
                                      "log10_cross_coll_hw", "log10_kinetic_hw"}));
  const auto f3 = figure_data(3, cfg);
  EXPECT_EQ(f3.columns.size(), 5u);
  const auto f4 = figure_data(4, cfg);
  EXPECT_EQ(f4.columns.front(), "r_over_d");
  EXPECT_EQ(f4.columns.back(), "log10_std_per_d3");
  for (const auto& row : f4.rows) ASSERT_EQ(row.size(), f4.columns.size());
  EXPECT_NEAR(col(f4, 5, "log10_host_per_d3"), std::log10(col(f4, 5, "host_per_d3")), 1e-12);
  try {
    figure_data(5, cfg);
    FAIL();
  } catch (const ValidationError& e) {
    EXPECT_EQ(e.field(), "fig");
  }
}

TEST(FigureData, EnergyOrderingOverInnerHalf) {
  const auto& h = host();
  const auto t = figure_data(2, h.config);
  const double half = 0.5 * h.tf.radius() / h.sc.d;
  EXPECT_GT(col(t, 0, "host_coll_hw"), col(t, 0, "trap_hw"));
  EXPECT_DOUBLE_EQ(col(t, 0, "r_over_d"), 0.0);
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (col(t, i, "r_over_d") > half) break;
    ASSERT_LT(col(t, i, "kinetic_hw"), col(t, i, "host_coll_hw"));
  }
}

TEST(FigureData, KineticBelowCollisionalOutsideEdgeBand) {
  const auto& h = host();
  const auto t = figure_data(2, h.config);
  const double edge = 0.95 * h.tf.radius() / h.sc.d;
  for (std::size_t i = 0; i < t.rows.size(); ++i) {
    if (col(t, i, "r_over_d") >= edge) break;
    ASSERT_LT(col(t, i, "kinetic_hw"), col(t, i, "host_coll_hw")) << "row " << i;
  }
}

TEST(FigureData, DensityOrderingAtCentre) {
  const auto t = figure_data(4, sodium_reference_config());
  const double host = col(t, 0, "host_per_d3");
  const double sd = col(t, 0, "std_per_d3");
  const double dep = col(t, 0, "depletion_per_d3");
  const double stored = col(t, 0, "stored_per_d3");
  EXPECT_GT(host, sd);
  EXPECT_GT(sd, dep);
  EXPECT_GT(dep, stored);
  EXPECT_LT(rel(host, 1.9e3), 0.2);
  EXPECT_LT(rel(sd, 1.2e2), 0.2);
  EXPECT_LT(rel(dep, 3.5), 0.2);
  EXPECT_LT(rel(stored, 0.15), 0.2);
}

TEST(FigureData, RowsStopBeforeEdge) {
  const auto& h = host();
  const auto t = figure_data(3, h.config);
  EXPECT_EQ(t.rows.size(), kinetic_limit_index(h.tf) + 1);
  EXPECT_LT(col(t, t.rows.size() - 1, "r_over_d") * h.sc.d, h.tf.radius());
}

TEST(ValidityReport, SodiumVerdicts) {
  const auto rep = validity_report(sodium_reference_config());
  EXPECT_TRUE(rep.single_component_tf_ok);
  EXPECT_TRUE(rep.single_component_mf_ok);
  EXPECT_FALSE(rep.two_component_tf_ok);
  EXPECT_FALSE(rep.two_component_mf_ok);
  EXPECT_GT(rep.ratios.rescaled_kinetic_over_self, 1e2);
  EXPECT_GT(rep.ratios.depletion_over_stored, 1.0);
  EXPECT_GT(rep.ratios.std_over_stored, 1.0);
  EXPECT_LT(rep.ratios.kinetic_over_host, 1e-2);
  EXPECT_EQ(rep.threshold, 1.0);
  EXPECT_EQ(rep.n_stored, 10);
  EXPECT_TRUE(rep.conditions.tf_ok);
  EXPECT_TRUE(rep.conditions.dilute_ok);
}

TEST(ValidityReport, VerdictsFollowRatios) {
  const auto rep = validity_report(sodium_reference_config());
  const auto& q = rep.ratios;
  EXPECT_EQ(rep.single_component_tf_ok, q.kinetic_over_host < rep.threshold);
  EXPECT_EQ(rep.single_component_mf_ok, q.depletion_over_host < rep.threshold);
  EXPECT_EQ(rep.two_component_tf_ok, q.rescaled_kinetic_over_self < rep.threshold);
  EXPECT_EQ(rep.two_component_mf_ok,
            q.depletion_over_stored < rep.threshold && q.std_over_stored < rep.threshold);
}

TEST(ValidityReport, NoCrossCouplingRemovesKineticTerm) {
  auto cfg = sodium_reference_config();
  cfg.species.a12 = 0.0;
  const auto rep = validity_report(cfg);
  EXPECT_EQ(rep.ratios.rescaled_kinetic_over_self, 0.0);
  EXPECT_TRUE(rep.two_component_tf_ok);
}

TEST(ValidityReport, StrongerSelfCouplingPassesKineticTest) {
  auto cfg = sodium_reference_config();
  const auto sc = derive_scales(cfg);
  // Scale a22 so that a22~ grows by 1e4.
  cfg.species.a22 += (1e4 - 1.0) * sc.a22_tilde;
  const auto rep = validity_report(cfg);
  EXPECT_TRUE(rep.two_component_tf_ok);
  EXPECT_LT(rep.ratios.rescaled_kinetic_over_self, 1.0);
}

TEST(ValidityReport, EmptyStoredComponent) {
  auto cfg = sodium_reference_config();
  cfg.n_stored_max = 0;
  const auto rep = validity_report(cfg);
  EXPECT_TRUE(std::isinf(rep.ratios.rescaled_kinetic_over_self));
  EXPECT_FALSE(rep.two_component_tf_ok);
  EXPECT_FALSE(rep.two_component_mf_ok);
}

TEST(ValidityReport, GridConverged) {
  const auto& cfg = sodium_reference_config();
  AnalysisOptions coarse, fine;
  coarse.n_points = 4096;
  fine.n_points = 8192;
  const auto a = validity_report(cfg, coarse).ratios;
  const auto b = validity_report(cfg, fine).ratios;
  EXPECT_LT(rel(a.kinetic_over_host, b.kinetic_over_host), 1e-4);
  EXPECT_LT(rel(a.depletion_over_host, b.depletion_over_host), 1e-4);
  EXPECT_LT(rel(a.rescaled_kinetic_over_self, b.rescaled_kinetic_over_self), 1e-4);
  EXPECT_LT(rel(a.depletion_over_stored, b.depletion_over_stored), 1e-4);
  EXPECT_LT(rel(a.std_over_stored, b.std_over_stored), 1e-4);
}

TEST(AnalysisOptions, CellVolumeOverride) {
  const auto& cfg = sodium_reference_config();
  const double d3 = std::pow(derive_scales(cfg).d, 3);
  AnalysisOptions o;
  o.cell_volume = 4.0 * d3;
  const auto a = density_profile(cfg);
  const auto b = density_profile(cfg, o);
  EXPECT_EQ(a.cell_volume, d3);
  EXPECT_EQ(b.cell_volume, 4.0 * d3);
  EXPECT_LT(rel(b.density_std[0], a.density_std[0]), 1e-14);
}

}  // namespace
}  // namespace becnlo
