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

#include "anyonpair/jsa.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "anyonpair/errors.hpp"

namespace anyonpair {

double PumpSpectrum::amplitude(double sum_detuning) const {
    const double x = sum_detuning / bandwidth_sigma;
    return std::exp(-0.25 * x * x);
}

PumpSpectrum PumpSpectrum::from_device(const DeviceParams& params) {
    params.validate();
    return {params.pump_angular_frequency(), transform_limited_bandwidth(params.pulse_duration)};
}

JointSpectralAmplitude build_jsa(const PumpSpectrum& spectrum, const PhaseMatching& pm, const FrequencyGrid& axis) {
    require(std::isfinite(spectrum.bandwidth_sigma) && spectrum.bandwidth_sigma > 0.0, ErrorKind::domain,
            "pump bandwidth must be positive");
    const double span = axis.back() - axis.front();
    const double slack = 1e-9 * pm.grid.step();
    require(pm.grid.front() <= -span + slack && pm.grid.back() >= span - slack, ErrorKind::window,
            "phase-matching grid must cover omega_- in [-" + std::to_string(span) + ", " + std::to_string(span) +
                "] rad/s spanned by the JSA axes");

    const std::size_t n = axis.size();
    std::vector<cplx> values(n * n);
    const auto rows = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(static)
    for (std::int64_t row = 0; row < rows; ++row) {
        const auto i = static_cast<std::size_t>(row);
        for (std::size_t j = 0; j < n; ++j) {
            const double sum = axis[i] + axis[j];
            const double diff = axis[i] - axis[j];
            values[i * n + j] = spectrum.amplitude(sum) * interpolate(pm, diff);
        }
    }
    return normalized_jsa(axis, spectrum.center_omega, std::move(values));
}

JointSpectralAmplitude build_jsa(const PumpSpectrum& spectrum, const PhaseMatching& pm,
                                 const FrequencyGrid& signal_axis, const FrequencyGrid& idler_axis) {
    require(signal_axis == idler_axis, ErrorKind::grid, "signal and idler axes must be identical (square grid)");
    return build_jsa(spectrum, pm, signal_axis);
}

double jsa_norm(const JointSpectralAmplitude& jsa) {
    const std::size_t n = jsa.size();
    require(jsa.values.size() == n * n, ErrorKind::grid, "JSA matrix is not square on its axis");
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        double row = 0.0;
        for (std::size_t j = 0; j < n; ++j) row += jsa.axis.weight(j) * std::norm(jsa(i, j));
        sum += jsa.axis.weight(i) * row;
    }
    return std::sqrt(sum);
}

JointSpectralAmplitude normalized_jsa(const FrequencyGrid& axis, double center_omega, std::vector<cplx> values) {
    JointSpectralAmplitude jsa{axis, center_omega, std::move(values)};
    const double norm = jsa_norm(jsa);
    require(std::isfinite(norm), ErrorKind::numerical, "JSA contains non-finite values");
    require(norm > 0.0, ErrorKind::domain, "JSA vanishes on the grid");
    for (auto& v : jsa.values) v /= norm;
    return jsa;
}

JointSpectralAmplitude transpose(const JointSpectralAmplitude& jsa) {
    JointSpectralAmplitude out = jsa;
    const std::size_t n = jsa.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) = jsa(j, i);
    }
    return out;
}

std::vector<double> jsi(const JointSpectralAmplitude& jsa) {
    std::vector<double> intensity(jsa.values.size());
    std::transform(jsa.values.begin(), jsa.values.end(), intensity.begin(), [](const cplx& v) { return std::norm(v); });
    return intensity;
}

double jsa_exchange_residual(const JointSpectralAmplitude& jsa, double alpha, SectorAssignment sectors) {
    const std::size_t n = jsa.size();
    require(jsa.values.size() == n * n, ErrorKind::grid, "JSA matrix is not square on its axis");
    const double turn = alpha * kPi * orientation(sectors);
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const cplx phase = std::polar(1.0, turn * sign_of(jsa.axis[i] - jsa.axis[j]));
            sum += jsa.axis.weight(i) * jsa.axis.weight(j) * std::norm(jsa(i, j) - phase * jsa(j, i));
        }
    }
    return std::sqrt(sum);
}

double jsa_symmetry_residual(const JointSpectralAmplitude& jsa) { return jsa_exchange_residual(jsa, 0.0); }

double jsi_transpose_residual(const std::vector<double>& intensity, std::size_t n) {
    require(intensity.size() == n * n, ErrorKind::grid, "intensity matrix is not n x n");
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) worst = std::max(worst, std::abs(intensity[i * n + j] - intensity[j * n + i]));
    }
    return worst;
}

std::vector<double> antidiagonal_marginal(const std::vector<double>& intensity, const FrequencyGrid& axis) {
    const std::size_t n = axis.size();
    require(intensity.size() == n * n, ErrorKind::grid, "intensity matrix is not n x n");
    std::vector<double> marginal(2 * n - 1, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            marginal[i + (n - 1) - j] += axis.weight(i) * axis.weight(j) * intensity[i * n + j];
        }
    }
    return marginal;
}

}  // namespace anyonpair
