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

// Plot-ready output files. CSV is comma-separated with a header row and every
// number in %.16e (17 significant digits), which round-trips doubles exactly.

#include <filesystem>
#include <functional>
#include <iosfwd>
#include <string>

#include "anyonpair/analysis.hpp"
#include "anyonpair/hom.hpp"
#include "anyonpair/jsa.hpp"
#include "anyonpair/phase_matching.hpp"
#include "anyonpair/pump.hpp"

namespace anyonpair::io {

std::string format_double(double x);

void write_pump_csv(std::ostream& out, const PumpProfile& pump);
void write_pm_csv(std::ostream& out, const PhaseMatching& pm);
void write_jsa_csv(std::ostream& out, const JointSpectralAmplitude& jsa);
void write_jsi_csv(std::ostream& out, const JointSpectralAmplitude& jsa);
/// Adds a tau_beta column (tau * beta) when beta > 0.
void write_hom_csv(std::ostream& out, const HomCurve& curve, double beta = 0.0);
void write_jsa_json(std::ostream& out, const JointSpectralAmplitude& jsa);
void write_report_json(std::ostream& out, const StatisticsReport& report);

/// Reads a z_m,re,im file. Throws ErrorKind::config with the offending line.
PumpProfile read_pump_csv(std::istream& in, const std::string& source, Carrier carrier = Carrier::demodulated);
PumpProfile read_pump_csv(const std::filesystem::path& path, Carrier carrier = Carrier::demodulated);

JointSpectralAmplitude read_jsa_json(std::istream& in);

/// Opens `path` for writing and runs `writer` on it; throws ErrorKind::config
/// if the file cannot be written.
void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer);

}  // namespace anyonpair::io
