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

#include "anyonpair/analysis.hpp"

#include <algorithm>
#include <cmath>

#include "anyonpair/errors.hpp"

namespace anyonpair {

namespace {

constexpr double kMinSectorPower = 1e-6;

void require_same_delays(const HomCurve& a, const HomCurve& b) {
    require(a.delays == b.delays, ErrorKind::grid, "curves are sampled on different delay grids");
    require(a.probability.size() == a.delays.size() && b.probability.size() == b.delays.size(), ErrorKind::grid,
            "curve length does not match its delay grid");
}

}  // namespace

ExchangeEstimate estimate_exchange(const PhaseMatching& pm) {
    require_symmetric(pm.grid, "phase-matching");
    cplx circular{0.0, 0.0};
    double positive = 0.0;
    double negative = 0.0;
    for (std::size_t k = 0; k < pm.grid.size(); ++k) {
        const double w = pm.grid.weight(k);
        if (pm.grid[k] > 0.0) {
            circular += w * pm.values[k] * std::conj(pm.values[pm.grid.mirror(k)]);
            positive += w * std::norm(pm.values[k]);
        } else if (pm.grid[k] < 0.0) {
            negative += w * std::norm(pm.values[k]);
        }
    }
    const double total = positive + negative;
    require(total > 0.0 && positive >= kMinSectorPower * total && negative >= kMinSectorPower * total,
            ErrorKind::ill_posed, "one omega_- half-line carries < 1e-6 of the phase-matching power");
    require(std::abs(circular) > 1e-12 * std::sqrt(positive * negative), ErrorKind::ill_posed,
            "the omega_- > 0 and omega_- < 0 halves do not overlap; exchange phase undefined");
    const double theta = std::arg(circular);
    return {std::min(1.0, std::abs(theta) / kPi), theta >= 0.0 ? SectorAssignment::standard : SectorAssignment::swapped};
}

double estimate_alpha(const PhaseMatching& pm) { return estimate_exchange(pm).alpha; }

double zero_delay_probability(double alpha) {
    require_alpha(alpha);
    return 0.5 * (1.0 - std::cos(alpha * kPi));
}

double curve_overlap(const HomCurve& a, const HomCurve& b) {
    require_same_delays(a, b);
    double difference = 0.0;
    double total = 0.0;
    for (std::size_t t = 0; t < a.delays.size(); ++t) {
        const double w = a.delays.weight(t);
        difference += w * std::abs(a.probability[t] - b.probability[t]);
        total += w * (a.probability[t] + b.probability[t]);
    }
    if (total == 0.0) return 1.0;
    return std::clamp(1.0 - difference / total, 0.0, 1.0);
}

double curve_cross_correlation(const HomCurve& a, const HomCurve& b) {
    require_same_delays(a, b);
    double ab = 0.0;
    double aa = 0.0;
    double bb = 0.0;
    for (std::size_t t = 0; t < a.delays.size(); ++t) {
        const double w = a.delays.weight(t);
        ab += w * a.probability[t] * b.probability[t];
        aa += w * a.probability[t] * a.probability[t];
        bb += w * b.probability[t] * b.probability[t];
    }
    require(aa > 0.0 && bb > 0.0, ErrorKind::domain, "cross-correlation of an all-zero curve");
    return ab / std::sqrt(aa * bb);
}

double point_symmetry_residual(const HomCurve& curve) {
    require_symmetric(curve.delays, "delay");
    double worst = 0.0;
    for (std::size_t t = 0; t < curve.delays.size(); ++t) {
        worst = std::max(worst, std::abs(curve.probability[t] + curve.probability[curve.delays.mirror(t)] - 1.0));
    }
    return worst;
}

double probability_at_zero(const HomCurve& curve) {
    const auto& delays = curve.delays;
    require(delays.front() <= 0.0 && delays.back() >= 0.0, ErrorKind::window, "delay grid does not contain tau = 0");
    const double position = -delays.front() / delays.step();
    const auto lower = static_cast<std::size_t>(std::min(std::floor(position), static_cast<double>(delays.size() - 1)));
    const double frac = position - static_cast<double>(lower);
    if (frac == 0.0 || lower + 1 >= delays.size()) return curve.probability[lower];
    return (1.0 - frac) * curve.probability[lower] + frac * curve.probability[lower + 1];
}

StatisticsReport make_report(const PhaseMatching& pm, const HomCurve& curve, const HomCurve& reference,
                             double reference_alpha) {
    require_alpha(reference_alpha);
    const ExchangeEstimate estimate = estimate_exchange(pm);
    StatisticsReport report;
    report.estimated_alpha = estimate.alpha;
    report.zero_delay_P = probability_at_zero(curve);
    report.point_symmetry_residual = point_symmetry_residual(curve);
    report.exchange_residual = exchange_phase_residual(pm, reference_alpha, estimate.sectors);
    report.conjugation_residual = conjugation_symmetry_residual(pm);
    report.overlap_vs_reference = curve_overlap(curve, reference);
    return report;
}

}  // namespace anyonpair
