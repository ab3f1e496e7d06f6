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

#include <cstddef>
#include <vector>

#include "anyonpair/device.hpp"
#include "anyonpair/exchange.hpp"
#include "anyonpair/grid.hpp"
#include "anyonpair/phase_matching.hpp"

namespace anyonpair {

/// Gaussian pump spectrum in the sum frequency omega_+ = omega_s + omega_i.
/// `bandwidth_sigma` is the standard deviation of the spectral intensity, so
/// the amplitude is exp(-(omega_+ - center)^2 / (4 sigma^2)).
struct PumpSpectrum {
    double center_omega = 0.0;     // rad/s
    double bandwidth_sigma = 0.0;  // rad/s

    /// Amplitude at a sum-frequency detuning omega_+ - center_omega.
    double amplitude(double sum_detuning) const;

    /// Transform-limited spectrum of the device's pump pulse.
    static PumpSpectrum from_device(const DeviceParams& params);
};

/// Joint spectral amplitude phi(omega_s, omega_i) on a square grid.
///
/// Both axes are the same grid of detunings from the degenerate frequency
/// center_omega / 2, so omega_- = axis[i] - axis[j] and the matrix transpose is
/// exactly the signal/idler exchange. Row index = signal, column = idler,
/// row-major. L2-normalized with 2D trapezoid weights.
struct JointSpectralAmplitude {
    FrequencyGrid axis;
    double center_omega = 0.0;
    std::vector<cplx> values;

    std::size_t size() const { return axis.size(); }
    const cplx& operator()(std::size_t i, std::size_t j) const { return values[i * axis.size() + j]; }
    cplx& operator()(std::size_t i, std::size_t j) { return values[i * axis.size() + j]; }
};

/// phi(omega_s, omega_i) = phi_spectral(omega_+) * phi_PM(omega_-), evaluated
/// pointwise in rotated coordinates (phi_PM interpolated linearly), then
/// normalized. Throws ErrorKind::window if the pm grid does not span every
/// omega_- the axes produce.
JointSpectralAmplitude build_jsa(const PumpSpectrum& spectrum, const PhaseMatching& pm, const FrequencyGrid& axis);

/// Two-axis form; throws ErrorKind::grid unless the axes are identical.
JointSpectralAmplitude build_jsa(const PumpSpectrum& spectrum, const PhaseMatching& pm,
                                 const FrequencyGrid& signal_axis, const FrequencyGrid& idler_axis);

/// Normalizes raw samples into a JSA.
JointSpectralAmplitude normalized_jsa(const FrequencyGrid& axis, double center_omega, std::vector<cplx> values);

double jsa_norm(const JointSpectralAmplitude& jsa);

/// Signal/idler exchange: phi^T.
JointSpectralAmplitude transpose(const JointSpectralAmplitude& jsa);

/// Joint spectral intensity |phi|^2, row-major. Sums to 1 under 2D trapezoid weights.
std::vector<double> jsi(const JointSpectralAmplitude& jsa);

/// || phi - exp(i alpha pi sign(omega_s - omega_i)) phi^T ||_2.
double jsa_exchange_residual(const JointSpectralAmplitude& jsa, double alpha,
                             SectorAssignment sectors = SectorAssignment::standard);

/// || phi^T - phi ||_2; zero iff the JSA is exchange-symmetric.
double jsa_symmetry_residual(const JointSpectralAmplitude& jsa);

/// max |I(s,i) - I(i,s)| for a row-major n x n intensity matrix.
double jsi_transpose_residual(const std::vector<double>& intensity, std::size_t n);

/// JSI integrated along lines of constant omega_-: entry m (0 .. 2n-2) holds
/// sum_{i-j = m-(n-1)} w_i w_j I(i,j), at omega_- = (m - (n-1)) * step.
std::vector<double> antidiagonal_marginal(const std::vector<double>& intensity, const FrequencyGrid& axis);

}  // namespace anyonpair
