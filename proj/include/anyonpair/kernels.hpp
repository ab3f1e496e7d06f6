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

// Hot loops of the pipeline. Each kernel has a serial reference and an OpenMP
// version that performs the identical arithmetic per output sample, so the two
// agree bit for bit and the parallel one stays deterministic for any thread
// count. Parallelism is only over independent outputs; no cross-thread
// reductions.

#include <complex>
#include <cstddef>
#include <span>

namespace anyonpair::kernels {

using cplx = std::complex<double>;

/// out[m] = sum_j terms[j] * exp(i * rate * out_pos[m] * in_pos[j])
///
/// `in_pos` must be uniformly spaced; the phase factor is advanced by a
/// rotation recurrence and re-seeded exactly every few samples. Quadrature
/// weights are expected to be folded into `terms`.
void fourier_sum_serial(std::span<const cplx> terms, std::span<const double> in_pos,
                        std::span<const double> out_pos, double rate, std::span<cplx> out);
void fourier_sum_parallel(std::span<const cplx> terms, std::span<const double> in_pos,
                          std::span<const double> out_pos, double rate, std::span<cplx> out);

/// overlap[t] = sum_{i,j} products[i*n + j] * exp(-i (axis[i] - axis[j]) delays[t])
///
/// `products` is the n x n row-major matrix of weighted two-photon overlap
/// integrands (e.g. w_i w_j phi(i,j) conj(phi(j,i))).
void hom_overlap_2d_serial(std::span<const cplx> products, std::span<const double> axis,
                           std::span<const double> delays, std::span<cplx> overlap);
void hom_overlap_2d_parallel(std::span<const cplx> products, std::span<const double> axis,
                             std::span<const double> delays, std::span<cplx> overlap);

/// Number of OpenMP threads the parallel kernels will use.
int max_threads();

}  // namespace anyonpair::kernels
