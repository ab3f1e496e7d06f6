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

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "anyonpair/errors.hpp"

namespace anyonpair {

/// Uniform 1D sample grid.
///
/// Samples are stored as (center, step, size) and generated as
///   x_i = center + (i - (size-1)/2) * step,
/// so a grid with center == 0 has x_{size-1-i} == -x_i bit for bit. The
/// exchange, conjugation and point-symmetry diagnostics all rely on that exact
/// pairing. The tag keeps positions, frequencies and delays from being mixed.
template <class Tag>
class UniformGrid {
public:
    UniformGrid(double center, double step, std::size_t size) : center_(center), step_(step), size_(size) {
        require(size >= 2, ErrorKind::grid, "grid needs at least two samples");
        require(std::isfinite(step) && step > 0.0, ErrorKind::grid, "grid spacing must be positive and finite");
        require(std::isfinite(center), ErrorKind::grid, "grid center must be finite");
    }

    /// Symmetric grid on [-half_width, half_width]; contains 0 iff size is odd.
    static UniformGrid centered(double half_width, std::size_t size) {
        require(size >= 2, ErrorKind::grid, "grid needs at least two samples");
        return UniformGrid(0.0, 2.0 * half_width / static_cast<double>(size - 1), size);
    }

    /// Grid with first sample `first` and last sample `last`.
    static UniformGrid spanning(double first, double last, std::size_t size) {
        require(size >= 2, ErrorKind::grid, "grid needs at least two samples");
        require(last > first, ErrorKind::grid, "grid end must exceed grid start");
        return UniformGrid(0.5 * (first + last), (last - first) / static_cast<double>(size - 1), size);
    }

    /// Adopts externally supplied samples; they must be uniform to 1e-12 relative.
    static UniformGrid from_samples(std::span<const double> samples) {
        require(samples.size() >= 2, ErrorKind::grid, "grid needs at least two samples");
        auto grid = spanning(samples.front(), samples.back(), samples.size());
        double scale = std::max(std::abs(samples.front()), std::abs(samples.back()));
        for (std::size_t i = 0; i < samples.size(); ++i) {
            require(std::abs(samples[i] - grid[i]) <= 1e-12 * scale, ErrorKind::grid,
                    "samples are not uniformly spaced (index " + std::to_string(i) + ")");
        }
        return grid;
    }

    double operator[](std::size_t i) const {
        return center_ + (2.0 * static_cast<double>(i) - static_cast<double>(size_ - 1)) * 0.5 * step_;
    }

    std::size_t size() const { return size_; }
    double step() const { return step_; }
    double center() const { return center_; }
    double front() const { return (*this)[0]; }
    double back() const { return (*this)[size_ - 1]; }

    bool is_symmetric() const { return center_ == 0.0; }

    /// Index of the sample at -x_i on a symmetric grid.
    std::size_t mirror(std::size_t i) const { return size_ - 1 - i; }

    /// Trapezoid weight of sample i.
    double weight(std::size_t i) const { return (i == 0 || i + 1 == size_) ? 0.5 * step_ : step_; }

    std::vector<double> weights() const {
        std::vector<double> w(size_, step_);
        w.front() *= 0.5;
        w.back() *= 0.5;
        return w;
    }

    std::vector<double> samples() const {
        std::vector<double> x(size_);
        for (std::size_t i = 0; i < size_; ++i) x[i] = (*this)[i];
        return x;
    }

    bool contains(double x) const { return x >= front() && x <= back(); }

    friend bool operator==(const UniformGrid&, const UniformGrid&) = default;

private:
    double center_;
    double step_;
    std::size_t size_;
};

struct SpatialTag {};
struct FrequencyTag {};
struct DelayTag {};

/// Positions z along the waveguide, meters.
using SpatialGrid = UniformGrid<SpatialTag>;
/// Angular frequencies (difference frequency or detuning), rad/s.
using FrequencyGrid = UniformGrid<FrequencyTag>;
/// Interferometer delays, seconds.
using DelayGrid = UniformGrid<DelayTag>;

template <class Tag>
void require_symmetric(const UniformGrid<Tag>& grid, const std::string& what) {
    require(grid.is_symmetric(), ErrorKind::pairing, what + " grid must be symmetric about 0 for +x/-x pairing");
}

}  // namespace anyonpair
