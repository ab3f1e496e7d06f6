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

// End-to-end experiment: pump -> phase matching -> JSA -> HOM -> report.

#include <filesystem>
#include <string>
#include <vector>

#include "anyonpair/analysis.hpp"
#include "anyonpair/config.hpp"
#include "anyonpair/hom.hpp"
#include "anyonpair/jsa.hpp"
#include "anyonpair/phase_matching.hpp"
#include "anyonpair/pump.hpp"

namespace anyonpair {

/// beta = v_g / waist of the configured pump.
double config_beta(const ExperimentConfig& config);

SpatialGrid config_spatial_grid(const ExperimentConfig& config);
FrequencyGrid config_pm_grid(const ExperimentConfig& config);
FrequencyGrid config_jsa_axis(const ExperimentConfig& config);
DelayGrid config_delay_grid(const ExperimentConfig& config);
PumpSpectrum config_spectrum(const ExperimentConfig& config);

PumpProfile build_pump(const ExperimentConfig& config);

struct PipelineResult {
    double beta = 0.0;
    PumpProfile pump;
    PhaseMatching pm;
    JointSpectralAmplitude jsa;
    HomCurve hom;
    /// Ideal curve for config.reference_alpha, oriented like the detected sectors.
    HomCurve reference;
    StatisticsReport report;
};

PipelineResult run_pipeline(const ExperimentConfig& config);

/// Writes the files enabled in config.output into `directory` (created if
/// needed) and returns their paths.
std::vector<std::filesystem::path> write_outputs(const PipelineResult& result, const ExperimentConfig& config,
                                                 const std::filesystem::path& directory);

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Invariants that hold for every well-formed experiment. Properties that only
/// apply to some pumps (e.g. the mirror law needs a symmetric spatial grid)
/// are reported as passed with a "skipped" detail when they do not apply.
std::vector<CheckResult> verify_experiment(const ExperimentConfig& config);

/// Documented sup-norm agreement between the 1D and 2D coincidence formulas
/// on the configured grids.
inline constexpr double kFormulaAgreementTolerance = 1e-2;

}  // namespace anyonpair
