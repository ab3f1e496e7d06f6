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


#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "anyonpair/config.hpp"
#include "anyonpair/errors.hpp"
#include "anyonpair/io.hpp"
#include "anyonpair/pipeline.hpp"

namespace {

using namespace anyonpair;
namespace fs = std::filesystem;

constexpr int kExitConfig = 2;
constexpr int kExitPhysics = 3;
constexpr int kExitNumerical = 4;
constexpr const char* kOutputEnv = "ANYONPAIR_OUTPUT_DIR";

struct Options {
    std::string config_path;
    std::string output;
    std::vector<std::string> settings;
    std::string formula;
    std::optional<double> alpha;
};

ExperimentConfig load(const Options& opts) {
    ExperimentConfig config;
    fs::path base;
    if (!opts.config_path.empty()) {
        config = load_config(opts.config_path);
        base = fs::path(opts.config_path).parent_path();
    }
    for (const auto& setting : opts.settings) {
        const auto dot = setting.find('.');
        const auto eq = setting.find('=');
        require(dot != std::string::npos && eq != std::string::npos && dot < eq, ErrorKind::config,
                "--set " + setting + ": expected section.key=value");
        apply_setting(config, setting.substr(0, dot), setting.substr(dot + 1, eq - dot - 1), setting.substr(eq + 1),
                      "--set " + setting, fs::current_path());
    }
    if (!opts.formula.empty()) {
        apply_setting(config, "hom", "formula", opts.formula, "--formula");
    }
    validate_config(config, opts.config_path.empty() ? "command line" : opts.config_path);
    if (!config.group_velocity_given) {
        warn("group velocity not configured; using the placeholder c/3.5 (group index 3.5)");
    }
    return config;
}

fs::path output_directory(const Options& opts, const ExperimentConfig& config) {
    if (!opts.output.empty()) return opts.output;
    if (const char* env = std::getenv(kOutputEnv); env != nullptr && *env != '\0') return env;
    return config.output.directory;
}

void report_written(const std::vector<fs::path>& files) {
    for (const auto& f : files) std::cout << "wrote " << f.string() << '\n';
}

std::vector<fs::path> write_selected(const PipelineResult& result, ExperimentConfig config, const fs::path& dir,
                                     std::initializer_list<bool OutputConfig::*> fields) {
    OutputConfig selected;
    selected.pump = selected.pm = selected.jsa = selected.jsi = selected.hom = selected.report = false;
    for (auto field : fields) selected.*field = config.output.*field;
    config.output = selected;
    return write_outputs(result, config, dir);
}

int run_stage(const std::string& stage, const Options& opts) {
    const ExperimentConfig config = load(opts);
    const fs::path dir = output_directory(opts, config);
    if (stage == "pump") {
        const PumpProfile pump = build_pump(config);
        fs::create_directories(dir);
        io::write_file(dir / "pump.csv", [&](std::ostream& s) { io::write_pump_csv(s, pump); });
        report_written({dir / "pump.csv"});
        return 0;
    }
    if (stage == "pm" || stage == "design") {
        const PumpProfile pump = build_pump(config);
        const PhaseMatching pm = pm_from_pump(pump, config.device, config_pm_grid(config));
        fs::create_directories(dir);
        io::write_file(dir / "pump.csv", [&](std::ostream& s) { io::write_pump_csv(s, pump); });
        io::write_file(dir / "pm.csv", [&](std::ostream& s) { io::write_pm_csv(s, pm); });
        report_written({dir / "pump.csv", dir / "pm.csv"});
        const ExchangeEstimate estimate = estimate_exchange(pm);
        std::cout << "estimated_alpha " << io::format_double(estimate.alpha) << " ("
                  << (estimate.sectors == SectorAssignment::standard ? "standard" : "swapped") << " sectors)\n";
        return 0;
    }
    const PipelineResult result = run_pipeline(config);
    if (stage == "jsa") {
        auto files = write_selected(result, config, dir, {&OutputConfig::jsa, &OutputConfig::jsi});
        const fs::path amplitude_csv = dir / "jsa.csv";
        io::write_file(amplitude_csv, [&](std::ostream& s) { io::write_jsa_csv(s, result.jsa); });
        files.push_back(amplitude_csv);
        report_written(files);
        return 0;
    }
    if (stage == "hom") {
        report_written(write_selected(result, config, dir, {&OutputConfig::hom, &OutputConfig::report}));
        return 0;
    }
    report_written(write_outputs(result, config, dir));
    const StatisticsReport& r = result.report;
    std::cout << "estimated_alpha " << io::format_double(r.estimated_alpha) << '\n'
              << "zero_delay_P " << io::format_double(r.zero_delay_P) << '\n'
              << "overlap_vs_reference " << io::format_double(r.overlap_vs_reference) << '\n'
              << "cross_correlation_vs_reference "
              << io::format_double(curve_cross_correlation(result.hom, result.reference)) << '\n';
    return 0;
}

int run_verify(const Options& opts) {
    const ExperimentConfig config = load(opts);
    bool all = true;
    for (const auto& c : verify_experiment(config)) {
        std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << ": " << c.detail << '\n';
        all = all && c.passed;
    }
    return all ? 0 : kExitNumerical;
}

int exit_code(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::config:
            return kExitConfig;
        case ErrorKind::numerical:
            return kExitNumerical;
        default:
            return kExitPhysics;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Anyonic photon-pair simulator: pump -> phase matching -> JSA -> HOM"};
    app.require_subcommand(1);
    Options opts;

    const auto add_common = [&](CLI::App* sub, bool config_required) {
        auto* config = sub->add_option("config", opts.config_path, "Experiment config file");
        if (config_required) config->required();
        config->check(CLI::ExistingFile);
        sub->add_option("-o,--output", opts.output, std::string("Output directory (overrides $") + kOutputEnv + ")");
        sub->add_option("--set", opts.settings, "Override a config entry, e.g. --set pump.shift=0.4mm");
    };

    std::string stage;
    struct Stage {
        const char* name;
        const char* help;
    };
    const Stage stages[] = {
        {"run", "Full pipeline; writes pump.csv, pm.csv, jsa.json, jsi.csv, hom.csv, report.json"},
        {"pump", "Pump profile only (pump.csv)"},
        {"pm", "Pump and phase matching (pump.csv, pm.csv)"},
        {"jsa", "Joint spectrum (jsa.json, jsi.csv, jsa.csv)"},
        {"hom", "Coincidence curve and report (hom.csv, report.json)"},
    };
    for (const auto& s : stages) {
        auto* sub = app.add_subcommand(s.name, s.help);
        add_common(sub, true);
        if (std::string(s.name) == "hom" || std::string(s.name) == "run") {
            sub->add_option("--formula", opts.formula, "Coincidence formula")->check(CLI::IsMember({"1d", "2d"}));
        }
        sub->callback([&stage, name = s.name] { stage = name; });
    }
    auto* design = app.add_subcommand("design", "Ideal anyonic pump for a target alpha (pump.csv, pm.csv)");
    add_common(design, false);
    design->add_option("--alpha", opts.alpha, "Target exchange parameter")->required()->check(CLI::Range(0.0, 1.0));
    design->callback([&] { stage = "design"; });
    auto* verify = app.add_subcommand("verify", "Check the simulator's invariants on a config");
    add_common(verify, true);
    verify->callback([&] { stage = "verify"; });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitConfig;
    }

    try {
        if (stage == "design") {
            opts.settings.insert(opts.settings.begin(), {"pump.kind=ideal_anyon", "pump.alpha=" + io::format_double(*opts.alpha)});
        }
        return stage == "verify" ? run_verify(opts) : run_stage(stage, opts);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_code(e.kind());
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitPhysics;
    }
}
