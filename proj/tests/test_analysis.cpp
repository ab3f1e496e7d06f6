// Copyright 2026 The anyonpair Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <cmath>
#include <vector>

#include <gtest/gtest.h>

#include "anyonpair/analysis.hpp"
#include "anyonpair/errors.hpp"
#include "anyonpair/hom.hpp"
#include "anyonpair/phase_matching.hpp"
#include "anyonpair/pump.hpp"
#include "oracles.hpp"

namespace anyonpair {
namespace {

ErrorKind kind_of(const auto& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::numerical;
}

constexpr double kBeta = 1e11;

FrequencyGrid pm_grid() { return FrequencyGrid::centered(12.0 * kBeta, 2001); }

HomCurve constant_curve(const DelayGrid& delays, double value) {
    return {delays, std::vector<double>(delays.size(), value)};
}

TEST(EstimateExchange, RecoversAlphaAndOrientationOfAnalyticFamily) {
    for (int step = 0; step <= 100; ++step) {
        const double alpha = 0.01 * step;
        for (auto sectors : {SectorAssignment::standard, SectorAssignment::swapped}) {
            const auto estimate = estimate_exchange(analytic_anyon_pm(alpha, kBeta, pm_grid(), sectors));
            EXPECT_NEAR(estimate.alpha, alpha, 1e-9);
            if (step > 0 && step < 100) {
                EXPECT_EQ(estimate.sectors, sectors) << "alpha " << alpha;
            }
        }
    }
}

TEST(EstimateExchange, GaussianIsBosonic) {
    EXPECT_NEAR(estimate_alpha(analytic_anyon_pm(0.0, kBeta, FrequencyGrid::centered(12.0 * kBeta, 2000))), 0.0,
                1e-12);
}

TEST(EstimateExchange, InvariantUnderGlobalPhaseAndScale) {
    oracle::Rng rng(61);
    for (int trial = 0; trial < 20; ++trial) {
        const double alpha = rng.uniform(0.0, 1.0);
        auto pm = analytic_anyon_pm(alpha, kBeta, pm_grid());
        const cplx factor = std::polar(rng.uniform(0.1, 10.0), rng.uniform(-kPi, kPi));
        for (auto& v : pm.values) v *= factor;
        EXPECT_NEAR(estimate_alpha(pm), alpha, 1e-9);
    }
}

TEST(EstimateExchange, ShiftedSteppedPumpIsNearlyFermionic) {
    const DeviceParams device;
    const double beta = beta_from_waist(device, 1e-3);
    const auto grid = SpatialGrid::centered(0.5 * device.waveguide_length, 2048);
    const auto pm_grid = FrequencyGrid::centered(160.0 * beta, 8001);
    const auto left = estimate_exchange(pm_from_pump(gaussian_step_pump(grid, {1e-3, -0.4e-3, 0.0, kPi}), device, pm_grid));
    const auto right = estimate_exchange(pm_from_pump(gaussian_step_pump(grid, {1e-3, 0.4e-3, 0.0, kPi}), device, pm_grid));
    EXPECT_NEAR(left.alpha, 0.9992, 5e-4);
    EXPECT_NEAR(right.alpha, left.alpha, 1e-10);
    EXPECT_EQ(left.sectors, SectorAssignment::standard);
    EXPECT_EQ(right.sectors, SectorAssignment::swapped);
}

TEST(EstimateExchange, IllPosedInputs) {
    const auto grid = pm_grid();
    std::vector<cplx> one_sided(grid.size(), 0.0);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        if (grid[k] > 0.0) one_sided[k] = std::exp(-grid[k] / kBeta);
    }
    EXPECT_EQ(kind_of([&] { estimate_alpha(normalized_pm(grid, one_sided)); }), ErrorKind::ill_posed);

    // Disjoint supports on the two half-lines.
    std::vector<cplx> disjoint(grid.size(), 0.0);
    for (std::size_t k = 0; k < grid.size(); ++k) {
        const double x = grid[k] / kBeta;
        if (x > 1.0 && x < 2.0) disjoint[k] = 1.0;
        if (x < -3.0 && x > -4.0) disjoint[k] = 1.0;
    }
    EXPECT_EQ(kind_of([&] { estimate_alpha(normalized_pm(grid, disjoint)); }), ErrorKind::ill_posed);

    const auto asymmetric = normalized_pm(FrequencyGrid::spanning(-1.0, 2.0, 31), std::vector<cplx>(31, 1.0));
    EXPECT_EQ(kind_of([&] { estimate_alpha(asymmetric); }), ErrorKind::pairing);
}

TEST(ZeroDelayProbability, ValuesAndMonotonicity) {
    EXPECT_DOUBLE_EQ(zero_delay_probability(0.0), 0.0);
    EXPECT_NEAR(zero_delay_probability(0.5), 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(zero_delay_probability(1.0), 1.0);
    EXPECT_NEAR(zero_delay_probability(1.0 / 3.0), 0.25, 1e-15);
    double previous = -1.0;
    for (int step = 0; step <= 1000; ++step) {
        const double p = zero_delay_probability(0.001 * step);
        EXPECT_GT(p, previous);
        previous = p;
    }
    EXPECT_EQ(kind_of([] { zero_delay_probability(-0.1); }), ErrorKind::domain);
    EXPECT_EQ(kind_of([] { zero_delay_probability(1.1); }), ErrorKind::domain);
}

TEST(CurveOverlap, Cases) {
    const auto delays = DelayGrid::centered(1.0, 11);
    EXPECT_DOUBLE_EQ(curve_overlap(constant_curve(delays, 0.5), constant_curve(delays, 0.5)), 1.0);
    EXPECT_DOUBLE_EQ(curve_overlap(constant_curve(delays, 1.0), constant_curve(delays, 0.0)), 0.0);
    EXPECT_NEAR(curve_overlap(constant_curve(delays, 0.75), constant_curve(delays, 0.25)), 0.5, 1e-15);
    EXPECT_DOUBLE_EQ(curve_overlap(constant_curve(delays, 0.0), constant_curve(delays, 0.0)), 1.0);
    EXPECT_EQ(kind_of([&] { curve_overlap(constant_curve(delays, 0.5), constant_curve(DelayGrid::centered(2.0, 11), 0.5)); }),
              ErrorKind::grid);
}

TEST(CurveOverlap, SymmetricAndBounded) {
    oracle::Rng rng(62);
    const auto delays = DelayGrid::centered(1.0, 41);
    for (int trial = 0; trial < 50; ++trial) {
        HomCurve a = constant_curve(delays, 0.0);
        HomCurve b = constant_curve(delays, 0.0);
        for (auto& p : a.probability) p = rng.uniform(0.0, 1.0);
        for (auto& p : b.probability) p = rng.uniform(0.0, 1.0);
        const double ab = curve_overlap(a, b);
        EXPECT_DOUBLE_EQ(ab, curve_overlap(b, a));
        EXPECT_GE(ab, 0.0);
        EXPECT_LE(ab, 1.0);
    }
}

TEST(CrossCorrelation, Cases) {
    const auto delays = DelayGrid::centered(1.0, 21);
    HomCurve a = constant_curve(delays, 0.0);
    for (std::size_t t = 0; t < delays.size(); ++t) a.probability[t] = 0.5 + 0.4 * delays[t];
    HomCurve scaled = a;
    for (auto& p : scaled.probability) p *= 0.5;
    EXPECT_NEAR(curve_cross_correlation(a, a), 1.0, 1e-15);
    EXPECT_NEAR(curve_cross_correlation(a, scaled), 1.0, 1e-15);
    EXPECT_LT(curve_cross_correlation(a, constant_curve(delays, 0.5)), 1.0);
    EXPECT_EQ(kind_of([&] { curve_cross_correlation(a, constant_curve(delays, 0.0)); }), ErrorKind::domain);
}

TEST(PointSymmetry, AnalyticCurves) {
    const auto delays = DelayGrid::centered(10.0 / kBeta, 201);
    EXPECT_LT(point_symmetry_residual(hom_curve_1d(analytic_anyon_pm(0.5, kBeta, pm_grid()), delays)), 1e-8);
    EXPECT_NEAR(point_symmetry_residual(hom_curve_1d(analytic_anyon_pm(0.0, kBeta, pm_grid()), delays)), 1.0, 1e-12);
    EXPECT_GT(point_symmetry_residual(hom_curve_1d(analytic_anyon_pm(0.25, kBeta, pm_grid()), delays)), 0.1);
    EXPECT_EQ(kind_of([] { point_symmetry_residual(constant_curve(DelayGrid(1.0, 1.0, 5), 0.5)); }),
              ErrorKind::pairing);
}

TEST(ProbabilityAtZero, SampleOrInterpolation) {
    HomCurve odd = constant_curve(DelayGrid::centered(1.0, 5), 0.0);
    odd.probability = {0.1, 0.2, 0.3, 0.4, 0.5};
    EXPECT_DOUBLE_EQ(probability_at_zero(odd), 0.3);
    HomCurve even = constant_curve(DelayGrid::centered(1.0, 4), 0.0);
    even.probability = {0.1, 0.2, 0.4, 0.5};
    EXPECT_NEAR(probability_at_zero(even), 0.3, 1e-15);
    EXPECT_EQ(kind_of([] { probability_at_zero(constant_curve(DelayGrid(5.0, 1.0, 3), 0.5)); }), ErrorKind::window);
}

TEST(MakeReport, FieldsForIdealHalf) {
    const auto pm = analytic_anyon_pm(0.5, kBeta, pm_grid());
    const auto curve = hom_curve_1d(pm, DelayGrid::centered(10.0 / kBeta, 201));
    const auto report = make_report(pm, curve, curve, 0.5);
    EXPECT_NEAR(report.estimated_alpha, 0.5, 1e-9);
    EXPECT_NEAR(report.zero_delay_P, 0.5, 1e-12);
    EXPECT_LT(report.point_symmetry_residual, 1e-8);
    EXPECT_LT(report.exchange_residual, 1e-12);
    EXPECT_LT(report.conjugation_residual, 1e-12);
    EXPECT_DOUBLE_EQ(report.overlap_vs_reference, 1.0);
    EXPECT_EQ(kind_of([&] { make_report(pm, curve, curve, 2.0); }), ErrorKind::domain);
}

}  // namespace
}  // namespace anyonpair
