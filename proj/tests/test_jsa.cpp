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


#include <algorithm>
#include <cmath>
#include <numeric>
#include <vector>

#include <Eigen/Dense>
#include <gtest/gtest.h>

#include "anyonpair/errors.hpp"
#include "anyonpair/jsa.hpp"
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

// JSA axis and a phase-matching grid with the same step, so every omega_-
// the axis produces is a pm grid node (no interpolation error).
struct Grids {
    FrequencyGrid axis;
    FrequencyGrid pm;
};

Grids matched_grids(double half_width, std::size_t n) {
    const auto axis = FrequencyGrid::centered(half_width, n);
    return {axis, FrequencyGrid(0.0, axis.step(), 2 * n - 1)};
}

PumpSpectrum spectrum(double sigma) { return {2.4e15, sigma}; }

TEST(BuildJsa, GaussianProductMatchesClosedForm) {
    const auto g = matched_grids(6.0 * kBeta, 128);
    const double sigma = 0.7 * kBeta;
    const auto jsa = build_jsa(spectrum(sigma), analytic_anyon_pm(0.0, kBeta, g.pm), g.axis);
    std::vector<cplx> expected(jsa.values.size());
    for (std::size_t i = 0; i < jsa.size(); ++i) {
        for (std::size_t j = 0; j < jsa.size(); ++j) {
            const double plus = g.axis[i] + g.axis[j];
            const double minus = g.axis[i] - g.axis[j];
            expected[i * jsa.size() + j] =
                std::exp(-plus * plus / (4.0 * sigma * sigma)) * std::exp(-minus * minus / (2.0 * kBeta * kBeta));
        }
    }
    const auto ref = normalized_jsa(g.axis, 2.4e15, expected);
    for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_NEAR(std::abs(jsa.values[k] - ref.values[k]), 0.0, 1e-12 / kBeta);
}

TEST(BuildJsa, NarrowSpectrumElongatesAlongDiagonal) {
    const auto g = matched_grids(6.0 * kBeta, 128);
    const auto jsa = build_jsa(spectrum(0.1 * kBeta), analytic_anyon_pm(0.0, kBeta, g.pm), g.axis);
    const auto intensity = jsi(jsa);
    double plus2 = 0.0;
    double minus2 = 0.0;
    for (std::size_t i = 0; i < jsa.size(); ++i) {
        for (std::size_t j = 0; j < jsa.size(); ++j) {
            const double p = g.axis[i] + g.axis[j];
            const double m = g.axis[i] - g.axis[j];
            plus2 += intensity[i * jsa.size() + j] * p * p;
            minus2 += intensity[i * jsa.size() + j] * m * m;
        }
    }
    EXPECT_GT(minus2, 20.0 * plus2);
}

TEST(BuildJsa, NormalizedTransposeAndJsi) {
    oracle::Rng rng(41);
    const auto g = matched_grids(5.0 * kBeta, 96);
    for (int trial = 0; trial < 5; ++trial) {
        const auto pm = analytic_anyon_pm(rng.uniform(0.0, 1.0), kBeta, g.pm);
        const auto jsa = build_jsa(spectrum(rng.uniform(0.1, 2.0) * kBeta), pm, g.axis);
        EXPECT_NEAR(jsa_norm(jsa), 1.0, 1e-9);
        const auto t = transpose(jsa);
        EXPECT_NEAR(jsa_norm(t), 1.0, 1e-9);
        EXPECT_EQ(transpose(t).values, jsa.values);
        const auto intensity = jsi(jsa);
        double total = 0.0;
        for (std::size_t i = 0; i < jsa.size(); ++i) {
            for (std::size_t j = 0; j < jsa.size(); ++j) {
                EXPECT_GE(intensity[i * jsa.size() + j], 0.0);
                total += g.axis.weight(i) * g.axis.weight(j) * intensity[i * jsa.size() + j];
            }
        }
        EXPECT_NEAR(total, 1.0, 1e-9);
        auto rotated = jsa;
        const cplx phase = std::polar(1.0, rng.uniform(-kPi, kPi));
        for (auto& v : rotated.values) v *= phase;
        const auto rotated_intensity = jsi(rotated);
        for (std::size_t k = 0; k < intensity.size(); ++k) EXPECT_NEAR(rotated_intensity[k], intensity[k], 1e-12 * intensity[k] + 1e-300);
    }
}

TEST(BuildJsa, TransposeEqualsReflectedPhaseMatching) {
    const auto axis = FrequencyGrid::centered(5.0 * kBeta, 101);
    const auto pm = analytic_anyon_pm(0.37, kBeta, FrequencyGrid::centered(11.0 * kBeta, 1777));
    auto reflected = pm;
    std::reverse(reflected.values.begin(), reflected.values.end());
    const auto a = transpose(build_jsa(spectrum(0.5 * kBeta), pm, axis));
    const auto b = build_jsa(spectrum(0.5 * kBeta), reflected, axis);
    for (std::size_t k = 0; k < a.values.size(); ++k) EXPECT_NEAR(std::abs(a.values[k] - b.values[k]), 0.0, 1e-12 / kBeta);
}

TEST(JsaExchange, AnalyticFamilyInheritsExchangePhase) {
    const auto g = matched_grids(5.0 * kBeta, 128);
    for (double alpha : {0.0, 0.25, 0.5, 0.75, 1.0}) {
        for (auto sectors : {SectorAssignment::standard, SectorAssignment::swapped}) {
            const auto jsa = build_jsa(spectrum(0.8 * kBeta), analytic_anyon_pm(alpha, kBeta, g.pm, sectors), g.axis);
            EXPECT_LT(jsa_exchange_residual(jsa, alpha, sectors), 1e-9);
        }
    }
}

TEST(JsaExchange, AlphaHalfJsiIsTransposeSymmetric) {
    const auto g = matched_grids(5.0 * kBeta, 128);
    const auto jsa = build_jsa(spectrum(0.8 * kBeta), analytic_anyon_pm(0.5, kBeta, g.pm), g.axis);
    EXPECT_GT(jsa_symmetry_residual(jsa), 0.1);
    EXPECT_LT(jsi_transpose_residual(jsi(jsa), jsa.size()), 1e-10);
}

TEST(JsaExchange, BosonAgainstFermionIsMaximalOffDiagonal) {
    const auto g = matched_grids(5.0 * kBeta, 128);
    const auto jsa = build_jsa(spectrum(0.8 * kBeta), analytic_anyon_pm(0.0, kBeta, g.pm), g.axis);
    // The diagonal has sign(omega_-) = 0 and contributes nothing.
    double diagonal = 0.0;
    for (std::size_t i = 0; i < jsa.size(); ++i) diagonal += g.axis.weight(i) * g.axis.weight(i) * std::norm(jsa(i, i));
    EXPECT_NEAR(jsa_exchange_residual(jsa, 1.0), 2.0 * std::sqrt(1.0 - diagonal), 1e-12);
    EXPECT_LT(jsa_exchange_residual(jsa, 0.0), 1e-12);
}

TEST(JsaExchange, DoubleTransposeBraidingBookkeeping) {
    const auto g = matched_grids(5.0 * kBeta, 64);
    const auto jsa = build_jsa(spectrum(0.8 * kBeta), analytic_anyon_pm(0.3, kBeta, g.pm), g.axis);
    const auto twice = transpose(transpose(jsa));
    EXPECT_EQ(twice.values, jsa.values);
    // phi vs e^{2 i alpha pi sign} (phi^T)^T is phi vs e^{2 i alpha pi sign} phi.
    const auto braid = [&](const JointSpectralAmplitude& other) {
        double sum = 0.0;
        for (std::size_t i = 0; i < jsa.size(); ++i) {
            for (std::size_t j = 0; j < jsa.size(); ++j) {
                const cplx phase = std::polar(1.0, 2.0 * 0.3 * kPi * sign_of(g.axis[i] - g.axis[j]));
                sum += g.axis.weight(i) * g.axis.weight(j) * std::norm(jsa(i, j) - phase * other(i, j));
            }
        }
        return std::sqrt(sum);
    };
    EXPECT_EQ(braid(twice), braid(jsa));
}

TEST(BuildJsa, RankOneInRotatedCoordinates) {
    // The JSA sampled on the rotated sub-lattice i + j = p, i - j = q (p, q of
    // equal parity) is the matrix f(omega_+) g(omega_-).
    const std::size_t n = 160;
    const auto g = matched_grids(6.0 * kBeta, n);
    const DeviceParams device;
    const double beta = beta_from_waist(device, 1e-3);
    const auto pump = gaussian_step_pump(SpatialGrid::centered(0.5 * device.waveguide_length, 1024),
                                         {1e-3, -0.4e-3, 0.0, kPi});
    const auto pm = normalized_pm(g.pm, phase_matching_integral(pump, device, g.pm));
    const auto jsa = build_jsa(spectrum(0.6 * beta), pm, g.axis);
    ASSERT_GT(kBeta, 0.9 * beta);
    // Rotated square inside the n x n grid with p and q of the same parity.
    const long center = static_cast<long>(n) - 1;
    const long radius = static_cast<long>(n) / 2 - 2;
    std::vector<long> ps;
    std::vector<long> qs;
    for (long d = -radius; d <= radius; d += 2) {
        ps.push_back(center + d);
        qs.push_back(d + center % 2);
    }
    Eigen::MatrixXcd m(static_cast<long>(ps.size()), static_cast<long>(qs.size()));
    for (std::size_t a = 0; a < ps.size(); ++a) {
        for (std::size_t b = 0; b < qs.size(); ++b) {
            const long i = (ps[a] + qs[b]) / 2;
            const long j = (ps[a] - qs[b]) / 2;
            ASSERT_TRUE(i >= 0 && j >= 0 && i < static_cast<long>(n) && j < static_cast<long>(n));
            m(static_cast<long>(a), static_cast<long>(b)) = jsa(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
        }
    }
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(m);
    const auto s = svd.singularValues();
    EXPECT_LT(s(1), 1e-8 * s(0));
}

TEST(AntidiagonalMarginal, SumsToOneAndShowsTwoLobesForAlphaHalf) {
    const auto g = matched_grids(5.0 * kBeta, 128);
    const auto jsa = build_jsa(spectrum(0.3 * kBeta), analytic_anyon_pm(0.5, kBeta, g.pm), g.axis);
    const auto marginal = antidiagonal_marginal(jsi(jsa), g.axis);
    EXPECT_NEAR(std::accumulate(marginal.begin(), marginal.end(), 0.0), 1.0, 1e-9);
    const std::size_t mid = marginal.size() / 2;
    const auto left = std::max_element(marginal.begin(), marginal.begin() + static_cast<long>(mid));
    const auto right = std::max_element(marginal.begin() + static_cast<long>(mid) + 1, marginal.end());
    EXPECT_NEAR(*left / *right, 1.0, 1e-10);
    EXPECT_LT(marginal[mid], 0.5 * *left);
}

TEST(BuildJsa, Errors) {
    const auto g = matched_grids(5.0 * kBeta, 32);
    const auto pm = analytic_anyon_pm(0.5, kBeta, g.pm);
    EXPECT_EQ(kind_of([&] { build_jsa(spectrum(kBeta), pm, g.axis, FrequencyGrid::centered(5.0 * kBeta, 33)); }),
              ErrorKind::grid);
    const auto short_pm = analytic_anyon_pm(0.5, kBeta, FrequencyGrid::centered(5.0 * kBeta, 101));
    EXPECT_EQ(kind_of([&] { build_jsa(spectrum(kBeta), short_pm, g.axis); }), ErrorKind::window);
    EXPECT_EQ(kind_of([&] { build_jsa(spectrum(0.0), pm, g.axis); }), ErrorKind::domain);
    EXPECT_NO_THROW(build_jsa(spectrum(kBeta), pm, g.axis, g.axis));
}

TEST(PumpSpectrum, TransformLimitedDefault) {
    const DeviceParams device;
    const auto s = PumpSpectrum::from_device(device);
    EXPECT_DOUBLE_EQ(s.bandwidth_sigma, 0.5 / 4.5e-12);
    EXPECT_DOUBLE_EQ(s.center_omega, 2.0 * kPi * kSpeedOfLight / 773e-9);
    EXPECT_DOUBLE_EQ(s.amplitude(0.0), 1.0);
    // Intensity standard deviation sigma: |amplitude|^2 = exp(-x^2 / (2 sigma^2)).
    EXPECT_NEAR(std::pow(s.amplitude(s.bandwidth_sigma), 2), std::exp(-0.5), 1e-15);
}

}  // namespace
}  // namespace anyonpair
