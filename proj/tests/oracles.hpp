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

// Reference computations for the tests. Everything here is written directly
// from the defining integrals with one std::exp per term and no shared code
// with the library kernels, so agreement is a meaningful check.

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>
#include <vector>

namespace oracle {

using cplx = std::complex<double>;
inline constexpr double kPi = std::numbers::pi;

inline std::vector<double> linspace(double first, double last, std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = first + (last - first) * static_cast<double>(i) / static_cast<double>(n - 1);
    return x;
}

inline double trapezoid_weight(std::size_t i, std::size_t n, double step) {
    return (i == 0 || i + 1 == n) ? 0.5 * step : step;
}

/// ∫_{|z|<=L/2} A(z) exp(-i (k + omega/v) z) dz by the trapezoid rule over the samples inside.
inline std::vector<cplx> pm_integral(const std::vector<double>& z, const std::vector<cplx>& a, double length,
                                     double vg, double k, const std::vector<double>& omega) {
    std::vector<std::size_t> inside;
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (std::abs(z[j]) <= 0.5 * length * (1.0 + 1e-12)) inside.push_back(j);
    }
    const double dz = z[1] - z[0];
    std::vector<cplx> out(omega.size());
    for (std::size_t m = 0; m < omega.size(); ++m) {
        cplx sum = 0.0;
        for (std::size_t n = 0; n < inside.size(); ++n) {
            const std::size_t j = inside[n];
            sum += trapezoid_weight(n, inside.size(), dz) * a[j] * std::exp(cplx(0.0, -(k + omega[m] / vg) * z[j]));
        }
        out[m] = sum;
    }
    return out;
}

/// Coincidence probability from phase-matching samples on a symmetric grid.
inline std::vector<double> hom_1d(const std::vector<double>& omega, const std::vector<cplx>& phi,
                                  const std::vector<double>& tau) {
    const std::size_t n = omega.size();
    const double d = omega[1] - omega[0];
    double norm = 0.0;
    for (std::size_t k = 0; k < n; ++k) norm += trapezoid_weight(k, n, d) * std::norm(phi[k]);
    std::vector<double> p(tau.size());
    for (std::size_t t = 0; t < tau.size(); ++t) {
        cplx s = 0.0;
        for (std::size_t k = 0; k < n; ++k) {
            s += trapezoid_weight(k, n, d) * phi[k] * std::conj(phi[n - 1 - k]) * std::exp(cplx(0.0, -omega[k] * tau[t]));
        }
        p[t] = 0.5 * (1.0 - s.real() / norm);
    }
    return p;
}

/// Direct double-sum coincidence probability for an n x n row-major JSA.
inline std::vector<double> hom_2d(const std::vector<double>& axis, const std::vector<cplx>& phi,
                                  const std::vector<double>& tau) {
    const std::size_t n = axis.size();
    const double d = axis[1] - axis[0];
    double norm = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            norm += trapezoid_weight(i, n, d) * trapezoid_weight(j, n, d) * std::norm(phi[i * n + j]);
        }
    }
    std::vector<double> p(tau.size());
    for (std::size_t t = 0; t < tau.size(); ++t) {
        cplx s = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                s += trapezoid_weight(i, n, d) * trapezoid_weight(j, n, d) * phi[i * n + j] * std::conj(phi[j * n + i]) *
                     std::exp(cplx(0.0, -(axis[i] - axis[j]) * tau[t]));
            }
        }
        p[t] = 0.5 * (1.0 - s.real() / norm);
    }
    return p;
}

/// Continuum curve of a Gaussian phase matching exp(-w^2/(2 beta^2)).
inline double gaussian_hom(double beta, double tau) {
    return 0.5 * (1.0 - std::exp(-0.25 * beta * beta * tau * tau));
}

/// Continuum curve of the odd phase matching w * exp(-w^2/(2 beta^2)).
inline double odd_hom(double beta, double tau) {
    const double x = beta * tau;
    return 0.5 * (1.0 + (1.0 - 0.5 * x * x) * std::exp(-0.25 * x * x));
}

/// Half-line integral ∫_0^∞ |phi|^2 cos(omega tau - offset) on a symmetric grid.
/// The omega = 0 sample contributes with half weight (half of its full-line share).
inline double half_line_cosine(const std::vector<double>& omega, const std::vector<cplx>& phi, double tau,
                               double offset) {
    const std::size_t n = omega.size();
    const double d = omega[1] - omega[0];
    double s = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        const double w = trapezoid_weight(k, n, d);
        if (omega[k] > 0.0) s += w * std::norm(phi[k]) * std::cos(omega[k] * tau - offset);
        if (omega[k] == 0.0) s += 0.5 * w * std::norm(phi[k]) * std::cos(offset);
    }
    return s;
}

/// Seeded generator for property tests.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    std::size_t index(std::size_t lo, std::size_t hi) {
        return std::uniform_int_distribution<std::size_t>(lo, hi)(engine_);
    }
    cplx complex_normal() {
        std::normal_distribution<double> g;
        return {g(engine_), g(engine_)};
    }
    std::vector<cplx> complex_vector(std::size_t n) {
        std::vector<cplx> v(n);
        for (auto& x : v) x = complex_normal();
        return v;
    }

private:
    std::mt19937_64 engine_;
};

}  // namespace oracle
