#include <gtest/gtest.h>

#include "gtoda/numeric/checks.hpp"

using namespace gtoda::numeric;

namespace {

TodaCheckSpec toda_case(SpectralParams p, std::vector<double> x, Route route, Gauge gauge = Gauge::AsPrinted) {
  TodaCheckSpec t;
  t.params = std::move(p);
  t.x = std::move(x);
  t.route = route;
  t.gauge = gauge;
  return t;
}

}  // namespace

TEST(TodaRankTwo, DirectRouteAtReferencePoint) {
  const auto rec = check_toda_equation(toda_case({2, {0.6, 1.1}, 1.0}, {0.2, -0.4}, Route::Direct));
  EXPECT_DOUBLE_EQ(toda_energy({2, {0.6, 1.1}, 1.0}, Gauge::AsPrinted), 4.07);
  EXPECT_LT(*rec.residual, 1e-3) << rec.note;
}

TEST(TodaRankTwo, GustafsonRouteSecondPoint) {
  const auto rec = check_toda_equation(toda_case({2, {0.3, 0.9}, 1.2}, {-0.1, 0.5}, Route::Gustafson));
  EXPECT_LT(*rec.residual, 1e-3) << rec.note;
}

TEST(TodaRankTwo, TildeGauge) {
  const auto rec = check_toda_equation(toda_case({2, {0.6, 1.1}, 1.0}, {0.2, -0.4}, Route::Gustafson, Gauge::Tilde));
  EXPECT_LT(*rec.residual, 1e-3) << rec.note;
}

TEST(RoutesRankTwo, AgreeAtReferencePoint) {
  const std::vector<double> x{0.2, -0.4};
  const auto cmp = compare_routes({2, {0.6, 1.1}, 1.0}, x);
  for (const auto& r : cmp.report.records) EXPECT_TRUE(r.pass) << r.id << " " << *r.residual;
  for (const auto& s : cmp.samples) EXPECT_LE(std::abs(s.value.imag()), s.error_estimate);
}

TEST(RoutesRankTwo, AgreeAwayFromUnitCoupling) {
  // Sensitive to every power of c in the normalizations.
  const std::vector<double> x{0.5, 0.1};
  const auto cmp = compare_routes({2, {0.45, 0.8}, 0.8}, x);
  for (const auto& r : cmp.report.records) EXPECT_LT(*r.residual, 1e-6) << r.id;
}

TEST(PropertiesRankTwo, WeylInvariance) {
  const std::vector<double> x{0.1, -0.2};
  const auto base = eval_wave({2, {0.5, 1.0}, 1.0}, x, Route::Gustafson);
  for (const auto& g : std::vector<std::vector<double>>{{1.0, 0.5}, {-0.5, 1.0}, {0.5, -1.0}, {-1.0, -0.5}}) {
    const auto w = eval_wave({2, g, 1.0}, x, Route::Gustafson);
    EXPECT_LE(std::abs(w.value - base.value), w.error_estimate + base.error_estimate) << g[0] << ", " << g[1];
    EXPECT_LE(std::abs(w.value.imag()), w.error_estimate);
  }
}

TEST(PropertiesRankTwo, StepHalvingWithinEstimate) {
  SpectralParams p{2, {0.6, 1.1}, 1.0};
  const std::vector<double> x{0.2, -0.4};
  const auto a = eval_wave(p, x, Route::Gustafson);
  WaveOptions opt;
  opt.grid = a.grid;
  opt.grid->step /= 2;
  opt.grid->budget = 1e11;
  const auto b = eval_wave(p, x, Route::Gustafson, opt);
  EXPECT_LT(std::abs(b.value - a.value), a.error_estimate);
}

TEST(PropertiesRankTwo, DegenerateSpectrumWarns) {
  SpectralParams p{2, {0.7, -0.7}, 1.0};
  EXPECT_EQ(p.warnings().size(), 1u);
  const std::vector<double> x{0.0, 0.0};
  const auto w = eval_wave(p, x, Route::Gustafson);
  EXPECT_TRUE(std::isfinite(w.value.real()));
}
