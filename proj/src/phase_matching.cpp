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

#include "anyonpair/phase_matching.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "anyonpair/errors.hpp"
#include "anyonpair/kernels.hpp"

namespace anyonpair {

namespace {

// Amplitude below which a pump edge sample counts as "support ended".
constexpr double kNegligibleEdge = 1e-6;

struct Integration {
    std::size_t first = 0;
    std::size_t last = 0;  // inclusive
};

Integration integration_range(const PumpProfile& pump, double half_length) {
    const auto& grid = pump.grid;
    const double slack = 1e-9 * grid.step();
    const bool covers = grid.front() <= -half_length + slack && grid.back() >= half_length - slack;
    if (!covers) {
        const bool edges_quiet =
            std::abs(pump.amplitude.front()) <= kNegligibleEdge && std::abs(pump.amplitude.back()) <= kNegligibleEdge;
        require(edges_quiet, ErrorKind::window,
                "pump grid does not cover [-L/2, L/2] and the pump has not decayed at the grid edges");
    }
    Integration range{grid.size(), 0};
    for (std::size_t j = 0; j < grid.size(); ++j) {
        if (std::abs(grid[j]) <= half_length + slack) {
            range.first = std::min(range.first, j);
            range.last = j;
        }
    }
    require(range.first < range.last, ErrorKind::window, "fewer than two pump samples lie inside the waveguide");
    return range;
}

double trapezoid_weight(const Integration& range, std::size_t j, double step) {
    return (j == range.first || j == range.last) ? 0.5 * step : step;
}

}  // namespace

std::vector<cplx> phase_matching_integral(const PumpProfile& pump, const DeviceParams& params,
                                          const FrequencyGrid& grid) {
    params.validate();
    require(pump.amplitude.size() == pump.grid.size(), ErrorKind::grid, "pump samples do not match the pump grid");
    const double vg = params.group_velocity;
    const double dz = pump.grid.step();
    const bool explicit_carrier = pump.carrier == Carrier::explicit_samples;
    const double k_deg = degenerate_wavenumber(params);

    const double max_omega = std::max(std::abs(grid.front()), std::abs(grid.back()));
    const double max_k = max_omega / vg + (explicit_carrier ? k_deg : 0.0);
    require(max_k <= kPi / dz, ErrorKind::sampling,
            "frequency window exceeds the Nyquist limit of the pump grid (aliasing); refine dz or shrink the window");

    const Integration range = integration_range(pump, 0.5 * params.waveguide_length);
    const std::size_t count = range.last - range.first + 1;
    std::vector<cplx> terms(count);
    std::vector<double> z(count);
    for (std::size_t n = 0; n < count; ++n) {
        const std::size_t j = range.first + n;
        z[n] = pump.grid[j];
        terms[n] = trapezoid_weight(range, j, dz) * pump.amplitude[j];
        if (explicit_carrier) terms[n] *= std::polar(1.0, -k_deg * z[n]);
    }
    const auto omega = grid.samples();
    std::vector<cplx> values(grid.size());
    kernels::fourier_sum_parallel(terms, z, omega, -1.0 / vg, values);
    return values;
}

PhaseMatching pm_from_pump(const PumpProfile& pump, const DeviceParams& params, const FrequencyGrid& grid) {
    auto values = phase_matching_integral(pump, params, grid);

    // Discrete Parseval: the trapezoid sum is a DTFT of the weighted samples, so
    // its power over the full Nyquist band is 2 pi v_g sum |w_j A_j|^2 / dz.
    const Integration range = integration_range(pump, 0.5 * params.waveguide_length);
    const double dz = pump.grid.step();
    double band_power = 0.0;
    for (std::size_t j = range.first; j <= range.last; ++j) {
        const double w = trapezoid_weight(range, j, dz);
        band_power += w * w * std::norm(pump.amplitude[j]);
    }
    band_power *= 2.0 * kPi * params.group_velocity / dz;
    const double captured = l2_norm(grid, values);
    require(captured * captured >= 0.99 * band_power, ErrorKind::window,
            "frequency window captures only " + std::to_string(100.0 * captured * captured / band_power) +
                "% of the phase-matching power (need >= 99%); widen the frequency grid");
    return normalized_pm(grid, std::move(values));
}

PhaseMatching analytic_anyon_pm(double alpha, double beta, const FrequencyGrid& grid, SectorAssignment sectors) {
    require_alpha(alpha);
    require(std::isfinite(beta) && beta > 0.0, ErrorKind::domain, "phase-matching width beta must be positive");
    std::vector<cplx> values(grid.size());
    for (std::size_t k = 0; k < grid.size(); ++k) values[k] = anyon_pm_value(alpha, beta, grid[k], sectors);
    return normalized_pm(grid, std::move(values));
}

double l2_norm(const FrequencyGrid& grid, std::span<const cplx> values) {
    require(values.size() == grid.size(), ErrorKind::grid, "sample count does not match the frequency grid");
    double sum = 0.0;
    for (std::size_t k = 0; k < values.size(); ++k) sum += grid.weight(k) * std::norm(values[k]);
    return std::sqrt(sum);
}

PhaseMatching normalized_pm(const FrequencyGrid& grid, std::vector<cplx> values) {
    const double norm = l2_norm(grid, values);
    require(std::isfinite(norm), ErrorKind::numerical, "phase matching contains non-finite values");
    require(norm > 0.0, ErrorKind::domain, "phase matching vanishes on the frequency grid");
    for (auto& v : values) v /= norm;
    return {grid, std::move(values)};
}

double exchange_phase_residual(const PhaseMatching& pm, double alpha, SectorAssignment sectors) {
    require_symmetric(pm.grid, "phase-matching");
    const double turn = alpha * kPi * orientation(sectors);
    double sum = 0.0;
    for (std::size_t k = 0; k < pm.grid.size(); ++k) {
        const cplx partner = pm.values[pm.grid.mirror(k)];
        sum += pm.grid.weight(k) * std::norm(pm.values[k] - std::polar(1.0, turn * sign_of(pm.grid[k])) * partner);
    }
    return std::sqrt(sum);
}

double conjugation_symmetry_residual(const PhaseMatching& pm) {
    require_symmetric(pm.grid, "phase-matching");
    double sum = 0.0;
    for (std::size_t k = 0; k < pm.grid.size(); ++k) {
        sum += pm.grid.weight(k) * std::norm(pm.values[k] - std::conj(pm.values[pm.grid.mirror(k)]));
    }
    return std::sqrt(sum);
}

double l2_overlap(const FrequencyGrid& grid, std::span<const cplx> a, std::span<const cplx> b) {
    require(a.size() == grid.size() && b.size() == grid.size(), ErrorKind::grid, "overlap: length mismatch");
    cplx inner{0.0, 0.0};
    for (std::size_t k = 0; k < grid.size(); ++k) inner += grid.weight(k) * std::conj(a[k]) * b[k];
    const double na = l2_norm(grid, a);
    const double nb = l2_norm(grid, b);
    require(na > 0.0 && nb > 0.0, ErrorKind::domain, "overlap of a vanishing function");
    return std::abs(inner) / (na * nb);
}

cplx interpolate(const PhaseMatching& pm, double omega) {
    const auto& grid = pm.grid;
    const double slack = 1e-9 * grid.step();
    require(omega >= grid.front() - slack && omega <= grid.back() + slack, ErrorKind::window,
            "phase-matching grid does not cover omega_- = " + std::to_string(omega) + " rad/s");
    const double position = (omega - grid.front()) / grid.step();
    auto lower = static_cast<std::size_t>(std::clamp(std::floor(position), 0.0, static_cast<double>(grid.size() - 2)));
    const double frac = std::clamp(position - static_cast<double>(lower), 0.0, 1.0);
    if (frac == 0.0) return pm.values[lower];
    if (frac == 1.0) return pm.values[lower + 1];
    return (1.0 - frac) * pm.values[lower] + frac * pm.values[lower + 1];
}

}  // namespace anyonpair
