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

#include <numbers>

namespace anyonpair {

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kSpeedOfLight = 299'792'458.0;  // m/s, exact

/// Group index behind the default group velocity. Not a measured property of
/// any particular device: an AlGaAs-scale placeholder that users matching an
/// absolute delay axis must replace with a calibrated value.
inline constexpr double kDefaultGroupIndex = 3.5;

inline constexpr double degrees_to_radians(double deg) { return deg * kPi / 180.0; }
inline constexpr double radians_to_degrees(double rad) { return rad * 180.0 / kPi; }

/// Transverse-pump SPDC source. SI units throughout; angles in radians.
/// Immutable once validated.
struct DeviceParams {
    double waveguide_length = 1.9e-3;                          // L, m
    double group_velocity = kSpeedOfLight / kDefaultGroupIndex;  // v_g, m/s
    double pump_wavelength = 773e-9;                           // lambda_p, m
    double incidence_angle = degrees_to_radians(0.5);          // theta_deg, rad
    double pulse_duration = 4.5e-12;                           // s
    double speed_of_light = kSpeedOfLight;                     // m/s

    /// Throws ErrorKind::domain on L <= 0, v_g outside (0, c), non-positive
    /// wavelength or pulse duration, or an angle outside [0, pi/2].
    void validate() const;

    double pump_angular_frequency() const;
};

/// k_deg = omega_p sin(theta_deg) / c = (2 pi / lambda_p) sin(theta_deg), rad/m.
double degenerate_wavenumber(const DeviceParams& params);

/// Phase-matching width beta = v_g / w_z, rad/s.
double beta_from_waist(const DeviceParams& params, double waist);

/// Pump spectral bandwidth for a transform-limited Gaussian pulse, taking the
/// pulse duration as the standard deviation of the temporal intensity; the
/// return value is the standard deviation of the spectral intensity,
/// 1 / (2 * duration).
double transform_limited_bandwidth(double pulse_duration);

}  // namespace anyonpair
