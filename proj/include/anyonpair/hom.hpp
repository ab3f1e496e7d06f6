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

// Hong-Ou-Mandel coincidence probability.
//
// Delay convention: every curve uses the kernel exp(-i omega_- tau), i.e.
//
//   P(tau) = 1/2 (1 - Re[∫ dω phi(ω) phi*(-ω) exp(-i ω tau)] / ∫ dω |phi|^2)
//
// for a phase-matching function and, for a full JSA,
//
//   P(tau) = 1/2 (1 - Re[∬ phi(s,i) phi*(i,s) exp(-i (s - i) tau)] / ∬ |phi|^2).
//
// A formulation that delays the signal photon (kernel exp(+i (s - i) tau))
// is the same curve read at -tau. With the standard anyonic sectors an
// alpha = 1/2 state then shows its peak at tau < 0 and its dip at tau > 0.

#include <vector>

#include "anyonpair/grid.hpp"
#include "anyonpair/jsa.hpp"
#include "anyonpair/phase_matching.hpp"

namespace anyonpair {

struct HomCurve {
    DelayGrid delays;
    std::vector<double> probability;
};

/// A(omega_s, omega_i) = exp(i alpha (pi/2) sign(omega_s - omega_i)).
/// Unimodular with A(i, s) = conj(A(s, i)).
struct ExchangePhaseFunction {
    double alpha = 0.0;

    cplx operator()(double omega_s, double omega_i) const;
    /// Principal square root, exp(i alpha (pi/4) sign(omega_s - omega_i)).
    cplx principal_sqrt(double omega_s, double omega_i) const;
};

/// Coincidence curve from a phase-matching function (narrow-pump reduction).
/// Requires a symmetric frequency grid.
HomCurve hom_curve_1d(const PhaseMatching& pm, const DelayGrid& delays);

/// Coincidence curve of a bosonic JSA by nested trapezoid quadrature.
HomCurve hom_curve_2d_bosons(const JointSpectralAmplitude& jsa, const DelayGrid& delays);

/// Coincidence curve of anyons with exchange-symmetric spectrum phi_A whose
/// creation operators obey the fractional commutation rule set by `exchange`:
///   integrand phi_A(s,i) phi_A*(i,s) A*(i,s).
/// Throws ErrorKind::precondition if phi_A is not symmetric (residual >= 1e-8).
HomCurve hom_curve_2d_anyons(const JointSpectralAmplitude& jsa_symmetric, const ExchangePhaseFunction& exchange,
                             const DelayGrid& delays);

/// Bosonic spectrum that reproduces the anyonic interference of phi_A:
/// phi_B = sqrt(A) phi_A (principal root). Same precondition as above.
JointSpectralAmplitude anyon_to_boson_map(const JointSpectralAmplitude& jsa_symmetric,
                                          const ExchangePhaseFunction& exchange);

/// Serial-reference variants used to cross-check the OpenMP kernels.
HomCurve hom_curve_1d_reference(const PhaseMatching& pm, const DelayGrid& delays);
HomCurve hom_curve_2d_bosons_reference(const JointSpectralAmplitude& jsa, const DelayGrid& delays);

}  // namespace anyonpair
