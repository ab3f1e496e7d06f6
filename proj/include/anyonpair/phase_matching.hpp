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
#include "anyonpair/pump.hpp"

namespace anyonpair {

/// Phase-matching function phi_PM(omega_-) on a difference-frequency grid,
/// L2-normalized with trapezoid weights: sum_k w_k |phi_k|^2 == 1.
struct PhaseMatching {
    FrequencyGrid grid;
    std::vector<cplx> values;
};

/// Raw transverse-pump phase-matching integral, before normalization:
///
///   phi_PM(omega) = ∫_{-L/2}^{L/2} dz A_p(z) exp(-i (k_deg + omega / v_g) z)
///
/// evaluated by the trapezoid rule over the pump samples with |z| <= L/2. For a
/// demodulated pump the exp(-i k_deg z) factor cancels the pump's own carrier
/// and is dropped analytically. Linear in the pump amplitude.
///
/// Throws ErrorKind::window if the pump grid neither covers [-L/2, L/2] nor
/// decays to zero at its ends, and ErrorKind::sampling if the frequency grid
/// reaches past the Nyquist limit of the pump grid.
std::vector<cplx> phase_matching_integral(const PumpProfile& pump, const DeviceParams& params,
                                          const FrequencyGrid& grid);

/// Normalized phase matching of a pump. Also throws ErrorKind::window when the
/// frequency grid captures less than 99% of the spectral power (measured by
/// discrete Parseval against the pump samples).
PhaseMatching pm_from_pump(const PumpProfile& pump, const DeviceParams& params, const FrequencyGrid& grid);

/// Anyonic phase matching
///   C |omega|^alpha exp(i alpha (pi/2) sign(omega)) exp(-omega^2 / (2 beta^2)),
/// L2-normalized. alpha = 1/2 gives the +-pi/4 two-sector function; alpha = 0
/// the plain Gaussian; alpha = 1 an odd function (i * omega * Gaussian).
PhaseMatching analytic_anyon_pm(double alpha, double beta, const FrequencyGrid& grid,
                                SectorAssignment sectors = SectorAssignment::standard);

/// Wraps samples as a PhaseMatching after L2 normalization.
PhaseMatching normalized_pm(const FrequencyGrid& grid, std::vector<cplx> values);

double l2_norm(const FrequencyGrid& grid, std::span<const cplx> values);

/// || phi(omega) - exp(i alpha pi sign(omega)) phi(-omega) ||_2 over paired samples.
/// Zero iff `pm` realizes exchange parameter alpha with the given sector
/// orientation. Requires a symmetric grid.
double exchange_phase_residual(const PhaseMatching& pm, double alpha,
                               SectorAssignment sectors = SectorAssignment::standard);

/// || phi(omega) - conj(phi(-omega)) ||_2 over paired samples.
double conjugation_symmetry_residual(const PhaseMatching& pm);

/// |<a, b>| / (||a|| ||b||) for two functions on the same grid.
double l2_overlap(const FrequencyGrid& grid, std::span<const cplx> a, std::span<const cplx> b);

/// Linear interpolation of phi_PM at omega. Throws ErrorKind::window outside the grid.
cplx interpolate(const PhaseMatching& pm, double omega);

}  // namespace anyonpair
