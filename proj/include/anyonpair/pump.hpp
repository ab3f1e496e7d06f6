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

#pragma once

#include <span>
#include <vector>

#include "anyonpair/device.hpp"
#include "anyonpair/exchange.hpp"
#include "anyonpair/grid.hpp"

namespace anyonpair {

/// How the pump's transverse wavevector projection is represented.
///
/// Physically the pump carries exp(i k_deg z) along the waveguide. `demodulated`
/// profiles store only the slowly varying envelope and the carrier is removed
/// analytically when computing phase matching. `explicit_samples` profiles
/// contain the carrier in their samples, so the spatial grid has to resolve it.
enum class Carrier { demodulated, explicit_samples };

/// Complex pump amplitude A_p(z) on a spatial grid, peak-normalized so that
/// max |A_p| == 1.
struct PumpProfile {
    SpatialGrid grid;
    std::vector<cplx> amplitude;
    Carrier carrier = Carrier::demodulated;
};

/// Phase-only shaped Gaussian:
///   A_p(z) = exp(-(z - center_shift)^2 / (2 waist^2)) * exp(i step_phase H(z - z_step)).
///
/// Waist convention: `waist` is the 1/e half-width of exp(-z^2/(2 w^2)), i.e.
/// the standard deviation of the amplitude. With this choice a centered
/// flat-phase pump produces a Gaussian phase matching exp(-omega^2/(2 beta^2))
/// with exactly beta = v_g / waist.
///
/// The phase step sits at z_step, the last grid sample <= step_position: samples
/// up to and including z_step keep phase 0, later samples get step_phase.
struct GaussianStepSpec {
    double waist = 1e-3;         // m
    double center_shift = 0.0;   // m
    double step_position = 0.0;  // m
    double step_phase = 0.0;     // rad
};

PumpProfile gaussian_step_pump(const SpatialGrid& grid, const GaussianStepSpec& spec);

struct InverseTransformOptions {
    /// Period of the discrete inverse transform in units of the spatial window.
    /// Controls the spacing of the internal frequency grid.
    double padding_factor = 8.0;
    /// Half-width of the internal frequency grid in units of beta.
    double spectral_extent = 12.0;
    SectorAssignment sectors = SectorAssignment::standard;
    Carrier carrier = Carrier::demodulated;
};

/// Pump that generates the anyonic phase matching analytic_anyon_pm(alpha, beta)
/// through the inverse of the phase-matching transform,
///   A_p(z) ∝ exp(i k_deg z) (1 / 2 pi v_g) ∫ dω exp(i ω z / v_g) φ_PM(ω).
/// The carrier is only materialized for Carrier::explicit_samples.
///
/// Throws ErrorKind::sampling if the grid cannot carry the target spectrum or,
/// with an explicit carrier, if dz > pi / (5 k_deg). Warns (does not throw) if
/// more than 1% of the pump power falls outside [-L/2, L/2].
PumpProfile ideal_anyon_pump(const SpatialGrid& grid, double alpha, double beta, const DeviceParams& params,
                             const InverseTransformOptions& options = {});

/// A_p = modulus * exp(i phase), peak-normalized.
PumpProfile custom_pump(const SpatialGrid& grid, std::span<const double> modulus, std::span<const double> phase);

/// Adopts complex samples as they are (e.g. read back from CSV), peak-normalized.
PumpProfile pump_from_samples(const SpatialGrid& grid, std::vector<cplx> amplitude,
                              Carrier carrier = Carrier::demodulated);

}  // namespace anyonpair
