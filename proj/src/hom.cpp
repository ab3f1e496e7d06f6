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

#include "anyonpair/hom.hpp"

#include <cmath>
#include <string>

#include "anyonpair/errors.hpp"
#include "anyonpair/kernels.hpp"

namespace anyonpair {

namespace {

constexpr double kClampSlack = 1e-9;
constexpr double kRoundOff = 1e-12;
constexpr double kSymmetryTolerance = 1e-8;

double finalize_probability(double p, double tau) {
    if (p >= 0.0 && p <= 1.0) return p;
    require(p >= -kClampSlack && p <= 1.0 + kClampSlack, ErrorKind::numerical,
            "coincidence probability " + std::to_string(p) + " at tau = " + std::to_string(tau) +
                " s is outside [0, 1]; quadrature failed");
    if (p >= -kRoundOff && p <= 1.0 + kRoundOff) return p < 0.0 ? 0.0 : 1.0;
    warn("clamped coincidence probability " + std::to_string(p) + " at tau = " + std::to_string(tau) + " s");
    return p < 0.0 ? 0.0 : 1.0;
}

HomCurve to_curve(const DelayGrid& delays, const std::vector<cplx>& overlap, double norm) {
    HomCurve curve{delays, std::vector<double>(delays.size())};
    for (std::size_t t = 0; t < delays.size(); ++t) {
        curve.probability[t] = finalize_probability(0.5 * (1.0 - overlap[t].real() / norm), delays[t]);
    }
    return curve;
}

std::vector<cplx> pm_overlap_terms(const PhaseMatching& pm, double& norm) {
    require_symmetric(pm.grid, "phase-matching");
    std::vector<cplx> terms(pm.grid.size());
    norm = 0.0;
    for (std::size_t k = 0; k < pm.grid.size(); ++k) {
        const double w = pm.grid.weight(k);
        terms[k] = w * pm.values[k] * std::conj(pm.values[pm.grid.mirror(k)]);
        norm += w * std::norm(pm.values[k]);
    }
    require(norm > 0.0, ErrorKind::domain, "phase matching vanishes");
    return terms;
}

// Weighted integrand w_i w_j phi(i,j) conj(phi(j,i)) * extra(i,j).
template <class Extra>
std::vector<cplx> jsa_overlap_terms(const JointSpectralAmplitude& jsa, double& norm, Extra extra) {
    const std::size_t n = jsa.size();
    require(jsa.values.size() == n * n, ErrorKind::grid, "JSA matrix is not square on its axis");
    std::vector<cplx> products(n * n);
    norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double w = jsa.axis.weight(i) * jsa.axis.weight(j);
            products[i * n + j] = w * jsa(i, j) * std::conj(jsa(j, i)) * extra(i, j);
            norm += w * std::norm(jsa(i, j));
        }
    }
    require(norm > 0.0, ErrorKind::domain, "JSA vanishes");
    return products;
}

void require_exchange_symmetric(const JointSpectralAmplitude& jsa) {
    const double residual = jsa_symmetry_residual(jsa);
    require(residual < kSymmetryTolerance, ErrorKind::precondition,
            "anyonic spectrum phi_A must be exchange-symmetric (residual " + std::to_string(residual) + ")");
}

HomCurve curve_1d(const PhaseMatching& pm, const DelayGrid& delays, bool parallel) {
    double norm = 0.0;
    const auto terms = pm_overlap_terms(pm, norm);
    const auto omega = pm.grid.samples();
    const auto tau = delays.samples();
    std::vector<cplx> overlap(delays.size());
    if (parallel) {
        kernels::fourier_sum_parallel(terms, omega, tau, -1.0, overlap);
    } else {
        kernels::fourier_sum_serial(terms, omega, tau, -1.0, overlap);
    }
    return to_curve(delays, overlap, norm);
}

HomCurve curve_2d(const std::vector<cplx>& products, double norm, const FrequencyGrid& axis, const DelayGrid& delays,
                  bool parallel) {
    const auto omega = axis.samples();
    const auto tau = delays.samples();
    std::vector<cplx> overlap(delays.size());
    if (parallel) {
        kernels::hom_overlap_2d_parallel(products, omega, tau, overlap);
    } else {
        kernels::hom_overlap_2d_serial(products, omega, tau, overlap);
    }
    return to_curve(delays, overlap, norm);
}

}  // namespace

cplx ExchangePhaseFunction::operator()(double omega_s, double omega_i) const {
    return std::polar(1.0, alpha * 0.5 * kPi * sign_of(omega_s - omega_i));
}

cplx ExchangePhaseFunction::principal_sqrt(double omega_s, double omega_i) const {
    return std::polar(1.0, alpha * 0.25 * kPi * sign_of(omega_s - omega_i));
}

HomCurve hom_curve_1d(const PhaseMatching& pm, const DelayGrid& delays) { return curve_1d(pm, delays, true); }

HomCurve hom_curve_1d_reference(const PhaseMatching& pm, const DelayGrid& delays) {
    return curve_1d(pm, delays, false);
}

HomCurve hom_curve_2d_bosons(const JointSpectralAmplitude& jsa, const DelayGrid& delays) {
    double norm = 0.0;
    const auto products = jsa_overlap_terms(jsa, norm, [](std::size_t, std::size_t) { return cplx{1.0, 0.0}; });
    return curve_2d(products, norm, jsa.axis, delays, true);
}

HomCurve hom_curve_2d_bosons_reference(const JointSpectralAmplitude& jsa, const DelayGrid& delays) {
    double norm = 0.0;
    const auto products = jsa_overlap_terms(jsa, norm, [](std::size_t, std::size_t) { return cplx{1.0, 0.0}; });
    return curve_2d(products, norm, jsa.axis, delays, false);
}

HomCurve hom_curve_2d_anyons(const JointSpectralAmplitude& jsa_symmetric, const ExchangePhaseFunction& exchange,
                             const DelayGrid& delays) {
    require_alpha(exchange.alpha);
    require_exchange_symmetric(jsa_symmetric);
    const auto& axis = jsa_symmetric.axis;
    double norm = 0.0;
    const auto products = jsa_overlap_terms(jsa_symmetric, norm, [&](std::size_t i, std::size_t j) {
        return std::conj(exchange(axis[j], axis[i]));
    });
    return curve_2d(products, norm, axis, delays, true);
}

JointSpectralAmplitude anyon_to_boson_map(const JointSpectralAmplitude& jsa_symmetric,
                                          const ExchangePhaseFunction& exchange) {
    require_alpha(exchange.alpha);
    require_exchange_symmetric(jsa_symmetric);
    JointSpectralAmplitude out = jsa_symmetric;
    const std::size_t n = out.size();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) out(i, j) *= exchange.principal_sqrt(out.axis[i], out.axis[j]);
    }
    return out;
}

}  // namespace anyonpair
