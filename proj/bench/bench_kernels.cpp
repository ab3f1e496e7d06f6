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


#include <cmath>
#include <cstddef>
#include <vector>

#include <benchmark/benchmark.h>

#include "anyonpair/kernels.hpp"

namespace {

using anyonpair::kernels::cplx;

std::vector<double> centered(double half_width, std::size_t n) {
    std::vector<double> x(n);
    for (std::size_t k = 0; k < n; ++k) x[k] = -half_width + 2.0 * half_width * static_cast<double>(k) / static_cast<double>(n - 1);
    return x;
}

std::vector<cplx> gaussian_terms(const std::vector<double>& x) {
    std::vector<cplx> t(x.size());
    for (std::size_t k = 0; k < x.size(); ++k) t[k] = std::polar(std::exp(-0.5 * x[k] * x[k]), 0.3 * x[k]);
    return t;
}

template <auto Kernel>
void fourier_sum(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto in = centered(12.0, n);
    const auto out_pos = centered(40.0, n);
    const auto terms = gaussian_terms(in);
    std::vector<cplx> out(n);
    for (auto _ : state) {
        Kernel(terms, in, out_pos, 1.0, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(static_cast<long>(state.iterations()) * static_cast<long>(n * n));
}

template <auto Kernel>
void hom_overlap_2d(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const auto axis = centered(5.0, n);
    const auto delays = centered(10.0, 201);
    std::vector<cplx> products(n * n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) products[i * n + j] = std::exp(-0.5 * (axis[i] * axis[i] + axis[j] * axis[j]));
    }
    std::vector<cplx> overlap(delays.size());
    for (auto _ : state) {
        Kernel(products, axis, delays, overlap);
        benchmark::DoNotOptimize(overlap.data());
    }
    state.SetItemsProcessed(static_cast<long>(state.iterations()) * static_cast<long>(n * n * delays.size()));
}

BENCHMARK(fourier_sum<anyonpair::kernels::fourier_sum_serial>)->Name("fourier_sum/serial")->Arg(2048)->Arg(8192);
BENCHMARK(fourier_sum<anyonpair::kernels::fourier_sum_parallel>)->Name("fourier_sum/parallel")->Arg(2048)->Arg(8192)->UseRealTime();
BENCHMARK(hom_overlap_2d<anyonpair::kernels::hom_overlap_2d_serial>)->Name("hom_overlap_2d/serial")->Arg(128)->Arg(512);
BENCHMARK(hom_overlap_2d<anyonpair::kernels::hom_overlap_2d_parallel>)->Name("hom_overlap_2d/parallel")->Arg(128)->Arg(512)->UseRealTime();

}  // namespace

BENCHMARK_MAIN();
