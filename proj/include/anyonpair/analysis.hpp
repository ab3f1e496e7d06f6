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

#include "anyonpair/exchange.hpp"
#include "anyonpair/hom.hpp"
#include "anyonpair/phase_matching.hpp"

namespace anyonpair {

struct ExchangeEstimate {
    double alpha = 0.0;
    SectorAssignment sectors = SectorAssignment::standard;
};

/// Exchange parameter realized by a phase-matching function.
///
/// Uses the power-weighted circular mean S = sum_{omega>0} w phi(omega) phi*(-omega).
/// The residual ||phi(ω) - e^{i α π sign ω} phi(-ω)|| is minimized over
/// alpha in [0, 1] and over both sector orientations by alpha = |arg S| / pi,
/// with the orientation given by the sign of arg S.
///
/// Throws ErrorKind::ill_posed if either half-line carries < 1e-6 of the power
/// or the two halves have no phase relation (S == 0).
ExchangeEstimate estimate_exchange(const PhaseMatching& pm);
double estimate_alpha(const PhaseMatching& pm);

/// (1 - cos(alpha pi)) / 2.
double zero_delay_probability(double alpha);

/// 1 - ∫|a - b| dτ / ∫(a + b) dτ. Symmetric, 1 iff a == b. Grids must match.
double curve_overlap(const HomCurve& a, const HomCurve& b);

/// <a, b> / (||a|| ||b||) with trapezoid weights.
double curve_cross_correlation(const HomCurve& a, const HomCurve& b);

/// max over paired delays of |P(tau) + P(-tau) - 1|.
double point_symmetry_residual(const HomCurve& curve);

/// P at tau = 0, linearly interpolated if 0 is not a sample.
double probability_at_zero(const HomCurve& curve);

struct StatisticsReport {
    double estimated_alpha = 0.0;
    double zero_delay_P = 0.0;
    double point_symmetry_residual = 0.0;
    double exchange_residual = 0.0;
    double conjugation_residual = 0.0;
    double overlap_vs_reference = 0.0;
};

/// Collects the diagnostics for `pm` and its interferogram `curve`, comparing
/// against `reference` (the ideal curve for `reference_alpha`). The exchange
/// residual is evaluated with the sector orientation detected in `pm`.
StatisticsReport make_report(const PhaseMatching& pm, const HomCurve& curve, const HomCurve& reference,
                             double reference_alpha);

}  // namespace anyonpair
