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

#include "anyonpair/kernels.hpp"

#include <omp.h>

#include <cstdint>
#include <vector>

#include "anyonpair/errors.hpp"

namespace anyonpair::kernels {

namespace {

// Recurrence drift is ~kReseed * 1e-16 between exact re-seeds.
constexpr std::size_t kReseed = 32;

cplx fourier_sample(std::span<const cplx> terms, std::span<const double> in_pos, double x, double rate) {
    const std::size_t n = terms.size();
    const double step = in_pos.size() > 1 ? in_pos[1] - in_pos[0] : 0.0;
    const cplx rotation = std::polar(1.0, rate * x * step);
    cplx acc{0.0, 0.0};
    cplx phase{1.0, 0.0};
    for (std::size_t j = 0; j < n; ++j) {
        if (j % kReseed == 0) phase = std::polar(1.0, rate * x * in_pos[j]);
        acc += terms[j] * phase;
        phase *= rotation;
    }
    return acc;
}

void check_fourier_args(std::span<const cplx> terms, std::span<const double> in_pos,
                        std::span<const double> out_pos, std::span<cplx> out) {
    require(terms.size() == in_pos.size(), ErrorKind::grid, "fourier_sum: terms/positions length mismatch");
    require(out.size() == out_pos.size(), ErrorKind::grid, "fourier_sum: output length mismatch");
}

// Per-delay work shared by both 2D variants: sum_i e_i * sum_j P_ij * conj(e_j)
// with e_k = exp(-i axis[k] tau).
cplx hom_overlap_sample(std::span<const cplx> products, std::span<const double> axis, double tau,
                        std::vector<cplx>& phases) {
    const std::size_t n = axis.size();
    for (std::size_t k = 0; k < n; ++k) phases[k] = std::polar(1.0, -axis[k] * tau);
    cplx acc{0.0, 0.0};
    for (std::size_t i = 0; i < n; ++i) {
        const cplx* row = products.data() + i * n;
        cplx inner{0.0, 0.0};
        for (std::size_t j = 0; j < n; ++j) inner += row[j] * std::conj(phases[j]);
        acc += phases[i] * inner;
    }
    return acc;
}

void check_hom_args(std::span<const cplx> products, std::span<const double> axis, std::span<const double> delays,
                    std::span<cplx> overlap) {
    require(products.size() == axis.size() * axis.size(), ErrorKind::grid, "hom_overlap_2d: matrix is not n x n");
    require(overlap.size() == delays.size(), ErrorKind::grid, "hom_overlap_2d: output length mismatch");
}

}  // namespace

void fourier_sum_serial(std::span<const cplx> terms, std::span<const double> in_pos,
                        std::span<const double> out_pos, double rate, std::span<cplx> out) {
    check_fourier_args(terms, in_pos, out_pos, out);
    for (std::size_t m = 0; m < out_pos.size(); ++m) out[m] = fourier_sample(terms, in_pos, out_pos[m], rate);
}

void fourier_sum_parallel(std::span<const cplx> terms, std::span<const double> in_pos,
                          std::span<const double> out_pos, double rate, std::span<cplx> out) {
    check_fourier_args(terms, in_pos, out_pos, out);
    const auto count = static_cast<std::int64_t>(out_pos.size());
#pragma omp parallel for schedule(static)
    for (std::int64_t m = 0; m < count; ++m) out[m] = fourier_sample(terms, in_pos, out_pos[m], rate);
}

void hom_overlap_2d_serial(std::span<const cplx> products, std::span<const double> axis,
                           std::span<const double> delays, std::span<cplx> overlap) {
    check_hom_args(products, axis, delays, overlap);
    std::vector<cplx> phases(axis.size());
    for (std::size_t t = 0; t < delays.size(); ++t) overlap[t] = hom_overlap_sample(products, axis, delays[t], phases);
}

void hom_overlap_2d_parallel(std::span<const cplx> products, std::span<const double> axis,
                             std::span<const double> delays, std::span<cplx> overlap) {
    check_hom_args(products, axis, delays, overlap);
    const auto count = static_cast<std::int64_t>(delays.size());
#pragma omp parallel
    {
        std::vector<cplx> phases(axis.size());
#pragma omp for schedule(dynamic, 4)
        for (std::int64_t t = 0; t < count; ++t) overlap[t] = hom_overlap_sample(products, axis, delays[t], phases);
    }
}

int max_threads() { return omp_get_max_threads(); }

}  // namespace anyonpair::kernels
