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

#include "anyonpair/exchange.hpp"

#include <cmath>
#include <string>

#include "anyonpair/device.hpp"
#include "anyonpair/errors.hpp"

namespace anyonpair {

void require_alpha(double alpha) {
    require(std::isfinite(alpha) && alpha >= 0.0 && alpha <= 1.0, ErrorKind::domain,
            "exchange parameter alpha must lie in [0, 1], got " + std::to_string(alpha));
}

cplx anyon_pm_value(double alpha, double beta, double omega, SectorAssignment sectors) {
    const double x = omega / beta;
    double modulus;
    if (alpha == 0.0) {
        modulus = 1.0;
    } else if (omega == 0.0) {
        modulus = 0.0;
    } else {
        modulus = std::pow(std::abs(x), alpha);
    }
    modulus *= std::exp(-0.5 * x * x);
    return std::polar(modulus, alpha * 0.5 * kPi * sign_of(omega) * orientation(sectors));
}

}  // namespace anyonpair
