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

#include "anyonpair/pump.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anyonpair/errors.hpp"
#include "anyonpair/kernels.hpp"

namespace anyonpair {

namespace {

void peak_normalize(std::vector<cplx>& amplitude) {
    double peak = 0.0;
    for (const auto& a : amplitude) {
        require(std::isfinite(a.real()) && std::isfinite(a.imag()), ErrorKind::domain,
                "pump amplitude contains non-finite values");
        peak = std::max(peak, std::abs(a));
    }
    require(peak > 0.0, ErrorKind::domain, "pump amplitude is identically zero");
    for (auto& a : amplitude) a /= peak;
}

// Index of the last sample <= position (ties go to the -z side of the step).
std::size_t step_index(const SpatialGrid& grid, double position) {
    const double slack = 1e-9 * grid.step();
    require(position >= grid.front() - slack && position <= grid.back() + slack, ErrorKind::domain,
            "phase-step position lies outside the spatial grid");
    std::size_t idx = 0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        if (grid[i] <= position + slack) idx = i;
    }
    return idx;
}

}  // namespace

PumpProfile gaussian_step_pump(const SpatialGrid& grid, const GaussianStepSpec& spec) {
    require(std::isfinite(spec.waist) && spec.waist > 0.0, ErrorKind::domain, "pump waist must be positive");
    require(std::isfinite(spec.center_shift) && std::isfinite(spec.step_phase), ErrorKind::domain,
            "pump shift and step phase must be finite");
    const std::size_t last_unstepped = step_index(grid, spec.step_position);

    std::vector<cplx> amplitude(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const double u = (grid[i] - spec.center_shift) / spec.waist;
        const double phase = i > last_unstepped ? spec.step_phase : 0.0;
        amplitude[i] = std::polar(std::exp(-0.5 * u * u), phase);
    }
    peak_normalize(amplitude);
    return {grid, std::move(amplitude), Carrier::demodulated};
}

PumpProfile ideal_anyon_pump(const SpatialGrid& grid, double alpha, double beta, const DeviceParams& params,
                             const InverseTransformOptions& options) {
    require_alpha(alpha);
    params.validate();
    require(std::isfinite(beta) && beta > 0.0, ErrorKind::domain, "phase-matching width beta must be positive");
    require(options.padding_factor >= 1.0, ErrorKind::domain, "padding factor must be >= 1");
    require(options.spectral_extent > 0.0, ErrorKind::domain, "spectral extent must be positive");

    const double vg = params.group_velocity;
    const double dz = grid.step();
    const double nyquist = kPi * vg / dz;
    require(nyquist >= 8.0 * beta, ErrorKind::sampling,
            "spatial grid too coarse for the target spectrum: need dz <= pi v_g / (8 beta) = " +
                std::to_string(kPi * vg / (8.0 * beta)) + " m");
    const double k_deg = degenerate_wavenumber(params);
    if (options.carrier == Carrier::explicit_samples) {
        require(k_deg == 0.0 || dz <= kPi / (5.0 * k_deg), ErrorKind::sampling,
                "spatial grid too coarse to resolve the exp(i k_deg z) carrier: need dz <= " +
                    std::to_string(kPi / (5.0 * k_deg)) + " m");
    }

    // Internal frequency grid: its spacing makes the discrete transform periodic
    // with period padding_factor * (spatial window).
    const double window = static_cast<double>(grid.size()) * dz;
    const double d_omega = 2.0 * kPi * vg / (options.padding_factor * window);
    const auto half_count = static_cast<std::size_t>(std::ceil(options.spectral_extent * beta / d_omega));
    const FrequencyGrid omega = FrequencyGrid(0.0, d_omega, 2 * half_count + 1);

    std::vector<cplx> terms(omega.size());
    double spectral_power = 0.0;
    for (std::size_t k = 0; k < omega.size(); ++k) {
        const cplx value = anyon_pm_value(alpha, beta, omega[k], options.sectors);
        terms[k] = omega.weight(k) * value / (2.0 * kPi * vg);
        spectral_power += omega.weight(k) * std::norm(value);
    }
    const auto omega_samples = omega.samples();
    const auto z_samples = grid.samples();
    std::vector<cplx> amplitude(grid.size());
    kernels::fourier_sum_parallel(terms, omega_samples, z_samples, 1.0 / vg, amplitude);

    // Validity: the pump has to fit inside the waveguide.
    double inside = 0.0;
    const double half_length = 0.5 * params.waveguide_length;
    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (std::abs(grid[j]) <= half_length) inside += grid.weight(j) * std::norm(amplitude[j]);
    }
    // Parseval for the 1/(2 pi v_g) inverse measure.
    const double total = spectral_power / (2.0 * kPi * vg);
    if (inside < 0.99 * total) {
        warn("ideal pump is wider than the waveguide: only " + std::to_string(100.0 * inside / total) +
             "% of its power lies in [-L/2, L/2]; the inverse-transform design is not valid there");
    }

    if (options.carrier == Carrier::explicit_samples) {
        for (std::size_t j = 0; j < grid.size(); ++j) amplitude[j] *= std::polar(1.0, k_deg * grid[j]);
    }
    peak_normalize(amplitude);
    return {grid, std::move(amplitude), options.carrier};
}

PumpProfile custom_pump(const SpatialGrid& grid, std::span<const double> modulus, std::span<const double> phase) {
    require(modulus.size() == grid.size() && phase.size() == grid.size(), ErrorKind::domain,
            "custom pump: modulus/phase length must match the grid (" + std::to_string(grid.size()) + ")");
    std::vector<cplx> amplitude(grid.size());
    for (std::size_t i = 0; i < grid.size(); ++i) {
        require(std::isfinite(modulus[i]) && modulus[i] >= 0.0, ErrorKind::domain,
                "custom pump: modulus must be finite and non-negative (index " + std::to_string(i) + ")");
        require(std::isfinite(phase[i]), ErrorKind::domain, "custom pump: phase must be finite");
        amplitude[i] = std::polar(modulus[i], phase[i]);
    }
    peak_normalize(amplitude);
    return {grid, std::move(amplitude), Carrier::demodulated};
}

PumpProfile pump_from_samples(const SpatialGrid& grid, std::vector<cplx> amplitude, Carrier carrier) {
    require(amplitude.size() == grid.size(), ErrorKind::domain, "pump samples do not match the grid length");
    peak_normalize(amplitude);
    return {grid, std::move(amplitude), carrier};
}

}  // namespace anyonpair
