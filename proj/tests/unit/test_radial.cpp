#include <gtest/gtest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "becnlo/errors.hpp"
#include "becnlo/radial.hpp"

namespace becnlo {
namespace {

TEST(RadialGrid, Layout) {
  const RadialGrid g(2.0, 21);
  EXPECT_DOUBLE_EQ(g.spacing(), 0.1);
  EXPECT_DOUBLE_EQ(g.r(0), 0.0);
  EXPECT_DOUBLE_EQ(g.r(20), 2.0);
  EXPECT_EQ(g.last_index_within(0.35), 3u);
  EXPECT_EQ(g.last_index_within(0.3), 3u);
  EXPECT_EQ(g.last_index_within(5.0), 20u);
  EXPECT_EQ(g.last_index_within(-1.0), 0u);
}

TEST(RadialGrid, RejectsDegenerateGrids) {
  EXPECT_THROW(RadialGrid(1.0, 15), ValidationError);
  EXPECT_THROW(RadialGrid(0.0, 64), ValidationError);
  EXPECT_THROW(RadialGrid(std::numeric_limits<double>::infinity(), 64), ValidationError);
}

TEST(RadialField, EnforcesInvariants) {
  const RadialGrid g(1.0, 16);
  std::vector<double> v(16, 1.0);
  v[3] = -1e-30;
  EXPECT_THROW(RadialField(g, v, FieldUnit::kDensity), NumericalError);
  EXPECT_NO_THROW(RadialField(g, v, FieldUnit::kEnergy));
  v[3] = std::nan("");
  EXPECT_THROW(RadialField(g, v, FieldUnit::kEnergy), NumericalError);
  EXPECT_THROW(RadialField(g, std::vector<double>(15), FieldUnit::kEnergy), ValidationError);
}

TEST(Simpson, ExactForCubicsAtEveryParity) {
  auto cubic = [](double x) { return 1.0 - 2.0 * x + 0.5 * x * x + 3.0 * x * x * x; };
  auto exact = [](double b) { return b - b * b + b * b * b / 6.0 + 0.75 * b * b * b * b; };
  for (std::size_t n : {3u, 4u, 5u, 6u, 17u, 64u}) {
    const double b = 1.7;
    const double h = b / static_cast<double>(n - 1);
    std::vector<double> f(n);
    for (std::size_t i = 0; i < n; ++i) f[i] = cubic(h * static_cast<double>(i));
    EXPECT_NEAR(quad::simpson(f, h), exact(b), 1e-12) << "n = " << n;
  }
  EXPECT_NEAR(quad::simpson(cubic, 0.0, 1.7, 7), exact(1.7), 1e-12);
}

TEST(RadialIntegral, GaussianNormalization) {
  const RadialGrid g(12.0, 2001);
  const double s = 1.3;
  auto f = RadialField::sample(g, FieldUnit::kDensity, [s](double r) {
    return std::pow(M_PI, -1.5) * std::pow(s, -3) * std::exp(-r * r / (s * s));
  });
  EXPECT_NEAR(quad::radial_integral(f), 1.0, 1e-12);
}

TEST(RadialIntegral, KinkedIntegrandWithOffNodeCutoff) {
  // 4 pi \int_0^R r^2 (R^2 - r^2) dr = 8 pi R^5 / 15, with R between nodes.
  const double radius = 0.7371;
  for (std::size_t n : {2048u, 4096u}) {
    const RadialGrid g(1.0, n);
    auto f = RadialField::sample(g, FieldUnit::kDensity,
                                 [&](double r) { return std::max(0.0, radius * radius - r * r); });
    const double exact = 8.0 * M_PI * std::pow(radius, 5) / 15.0;
    EXPECT_LT(std::abs(quad::radial_integral(f, radius) - exact) / exact, 1e-10);
    // Without the cutoff Simpson crosses the kink and loses accuracy.
    EXPECT_GT(std::abs(quad::radial_integral(f) - exact) / exact, 1e-9);
  }
}

}  // namespace
}  // namespace becnlo
