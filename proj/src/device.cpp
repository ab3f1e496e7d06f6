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

#include "anyonpair/device.hpp"

#include <cmath>
#include <string>

#include "anyonpair/errors.hpp"

namespace anyonpair {

void DeviceParams::validate() const {
    auto positive = [](double x) { return std::isfinite(x) && x > 0.0; };
    require(positive(speed_of_light), ErrorKind::domain, "speed of light must be positive");
    require(positive(waveguide_length), ErrorKind::domain, "waveguide length must be positive");
    require(positive(group_velocity) && group_velocity < speed_of_light, ErrorKind::domain,
            "group velocity must lie in (0, c), got " + std::to_string(group_velocity) + " m/s");
    require(positive(pump_wavelength), ErrorKind::domain, "pump wavelength must be positive");
    require(positive(pulse_duration), ErrorKind::domain, "pulse duration must be positive");
    require(std::isfinite(incidence_angle) && incidence_angle >= 0.0 && incidence_angle <= 0.5 * kPi,
            ErrorKind::domain, "incidence angle must lie in [0, 90] degrees");
}

double DeviceParams::pump_angular_frequency() const { return 2.0 * kPi * speed_of_light / pump_wavelength; }

double degenerate_wavenumber(const DeviceParams& params) {
    params.validate();
    return params.pump_angular_frequency() * std::sin(params.incidence_angle) / params.speed_of_light;
}

double beta_from_waist(const DeviceParams& params, double waist) {
    params.validate();
    require(std::isfinite(waist) && waist > 0.0, ErrorKind::domain, "waist must be positive");
    return params.group_velocity / waist;
}

double transform_limited_bandwidth(double pulse_duration) {
    require(std::isfinite(pulse_duration) && pulse_duration > 0.0, ErrorKind::domain,
            "pulse duration must be positive");
    return 0.5 / pulse_duration;
}

}  // namespace anyonpair
