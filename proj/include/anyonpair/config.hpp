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

// Experiment configuration files.
//
// Flat INI: [section] headers, `key = value` lines, '#' or ';' comments.
// Every dimensional value needs a unit suffix:
//
//   length      m mm um nm
//   time        s ns ps fs
//   angle       rad deg pi          (pi: multiples of pi rad)
//   frequency   rad/s rad/ps beta   (beta: multiples of the pump's beta)
//   velocity    m/s
//
// Unknown sections or keys are errors, so typos do not silently fall back to
// defaults. Errors carry "file:line:".

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

#include "anyonpair/device.hpp"
#include "anyonpair/exchange.hpp"
#include "anyonpair/pump.hpp"

namespace anyonpair {

enum class PumpKind { gaussian_step, ideal_anyon, custom };
enum class HomFormula { one_d, two_d };

/// A frequency that is either absolute (rad/s) or a multiple of beta.
struct FrequencyValue {
    double value = 0.0;
    bool in_beta = false;

    double resolve(double beta) const { return in_beta ? value * beta : value; }
};

struct PumpConfig {
    PumpKind kind = PumpKind::gaussian_step;
    /// gaussian_step parameters; `gaussian.waist` also sets beta = v_g / waist
    /// for every kind.
    GaussianStepSpec gaussian;
    double alpha = 0.5;  // ideal_anyon
    InverseTransformOptions inverse;
    std::filesystem::path custom_file;  // custom, resolved against the config's directory
};

struct GridConfig {
    std::size_t spatial_points = 2048;
    std::optional<double> spatial_half_width;  // default L/2
    std::size_t frequency_points = 8001;
    FrequencyValue frequency_half_width{160.0, true};
    std::size_t jsa_points = 512;
    FrequencyValue jsa_half_width{32.0, true};
    std::size_t delay_points = 201;
    double delay_half_width = 120e-12;
};

struct OutputConfig {
    std::filesystem::path directory = "anyonpair_out";
    bool pump = true;
    bool pm = true;
    bool jsa = true;
    bool jsi = true;
    bool hom = true;
    bool report = true;
};

struct ExperimentConfig {
    DeviceParams device;
    bool group_velocity_given = false;
    PumpConfig pump;
    GridConfig grids;
    std::optional<double> pump_bandwidth;  // rad/s; default transform-limited
    HomFormula formula = HomFormula::one_d;
    double reference_alpha = 0.5;
    OutputConfig output;
};

/// Parses and validates a configuration. Throws ErrorKind::config with
/// "source:line: message" on malformed input, unknown keys, missing units,
/// out-of-range values or a missing custom pump file.
ExperimentConfig parse_config(std::istream& in, const std::string& source,
                              const std::filesystem::path& base_directory = {});
ExperimentConfig load_config(const std::filesystem::path& path);

/// Applies one `key = value` setting as if it appeared under [section]
/// (command-line overrides). Call validate_config afterwards.
void apply_setting(ExperimentConfig& config, const std::string& section, const std::string& key,
                   const std::string& value, const std::string& where,
                   const std::filesystem::path& base_directory = {});

/// Cross-field checks shared by parse_config and command-line overrides.
void validate_config(const ExperimentConfig& config, const std::string& source);

}  // namespace anyonpair
