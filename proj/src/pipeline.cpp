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


#include "anyonpair/pipeline.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "anyonpair/device.hpp"
#include "anyonpair/errors.hpp"
#include "anyonpair/io.hpp"

namespace anyonpair {

namespace {

double max_abs_difference(const std::vector<double>& a, const std::vector<double>& b) {
    double worst = 0.0;
    for (std::size_t k = 0; k < a.size(); ++k) worst = std::max(worst, std::abs(a[k] - b[k]));
    return worst;
}

std::string scientific(double x) {
    std::ostringstream s;
    s.precision(3);
    s << std::scientific << x;
    return s.str();
}

CheckResult check(std::string name, bool passed, std::string detail) {
    return {std::move(name), passed, std::move(detail)};
}

std::string serialize(const PipelineResult& r) {
    std::ostringstream s;
    io::write_pump_csv(s, r.pump);
    io::write_pm_csv(s, r.pm);
    io::write_jsa_json(s, r.jsa);
    io::write_hom_csv(s, r.hom, r.beta);
    io::write_report_json(s, r.report);
    return s.str();
}

}  // namespace

double config_beta(const ExperimentConfig& config) { return beta_from_waist(config.device, config.pump.gaussian.waist); }

SpatialGrid config_spatial_grid(const ExperimentConfig& config) {
    const double half = config.grids.spatial_half_width.value_or(0.5 * config.device.waveguide_length);
    return SpatialGrid::centered(half, config.grids.spatial_points);
}

FrequencyGrid config_pm_grid(const ExperimentConfig& config) {
    return FrequencyGrid::centered(config.grids.frequency_half_width.resolve(config_beta(config)),
                                   config.grids.frequency_points);
}

FrequencyGrid config_jsa_axis(const ExperimentConfig& config) {
    return FrequencyGrid::centered(config.grids.jsa_half_width.resolve(config_beta(config)), config.grids.jsa_points);
}

DelayGrid config_delay_grid(const ExperimentConfig& config) {
    return DelayGrid::centered(config.grids.delay_half_width, config.grids.delay_points);
}

PumpSpectrum config_spectrum(const ExperimentConfig& config) {
    PumpSpectrum spectrum = PumpSpectrum::from_device(config.device);
    if (config.pump_bandwidth) spectrum.bandwidth_sigma = *config.pump_bandwidth;
    return spectrum;
}

PumpProfile build_pump(const ExperimentConfig& config) {
    switch (config.pump.kind) {
        case PumpKind::gaussian_step:
            return gaussian_step_pump(config_spatial_grid(config), config.pump.gaussian);
        case PumpKind::ideal_anyon:
            return ideal_anyon_pump(config_spatial_grid(config), config.pump.alpha, config_beta(config), config.device,
                                    config.pump.inverse);
        case PumpKind::custom:
            return io::read_pump_csv(config.pump.custom_file, config.pump.inverse.carrier);
    }
    fail(ErrorKind::config, "unknown pump kind");
}

PipelineResult run_pipeline(const ExperimentConfig& config) {
    const double beta = config_beta(config);
    PumpProfile pump = build_pump(config);
    PhaseMatching pm = pm_from_pump(pump, config.device, config_pm_grid(config));
    JointSpectralAmplitude jsa = build_jsa(config_spectrum(config), pm, config_jsa_axis(config));
    const DelayGrid delays = config_delay_grid(config);
    HomCurve hom = config.formula == HomFormula::one_d ? hom_curve_1d(pm, delays) : hom_curve_2d_bosons(jsa, delays);
    const ExchangeEstimate estimate = estimate_exchange(pm);
    HomCurve reference = hom_curve_1d(analytic_anyon_pm(config.reference_alpha, beta, pm.grid, estimate.sectors), delays);
    const StatisticsReport report = make_report(pm, hom, reference, config.reference_alpha);
    return {beta, std::move(pump), std::move(pm), std::move(jsa), std::move(hom), std::move(reference), report};
}

std::vector<std::filesystem::path> write_outputs(const PipelineResult& result, const ExperimentConfig& config,
                                                 const std::filesystem::path& directory) {
    std::error_code ec;
    std::filesystem::create_directories(directory, ec);
    require(!ec, ErrorKind::config, "cannot create output directory " + directory.string() + ": " + ec.message());
    std::vector<std::filesystem::path> written;
    const auto emit = [&](bool enabled, const char* name, const std::function<void(std::ostream&)>& writer) {
        if (!enabled) return;
        written.push_back(directory / name);
        io::write_file(written.back(), writer);
    };
    const OutputConfig& out = config.output;
    emit(out.pump, "pump.csv", [&](std::ostream& s) { io::write_pump_csv(s, result.pump); });
    emit(out.pm, "pm.csv", [&](std::ostream& s) { io::write_pm_csv(s, result.pm); });
    emit(out.jsa, "jsa.json", [&](std::ostream& s) { io::write_jsa_json(s, result.jsa); });
    emit(out.jsi, "jsi.csv", [&](std::ostream& s) { io::write_jsi_csv(s, result.jsa); });
    emit(out.hom, "hom.csv", [&](std::ostream& s) { io::write_hom_csv(s, result.hom, result.beta); });
    emit(out.report, "report.json", [&](std::ostream& s) { io::write_report_json(s, result.report); });
    return written;
}

std::vector<CheckResult> verify_experiment(const ExperimentConfig& config) {
    std::vector<CheckResult> checks;
    const PipelineResult r = run_pipeline(config);
    const DelayGrid delays = r.hom.delays;

    const double pm_norm = l2_norm(r.pm.grid, r.pm.values);
    checks.push_back(check("pm_normalized", std::abs(pm_norm - 1.0) < 1e-10, "||phi_PM|| - 1 = " + scientific(pm_norm - 1.0)));
    const double jsa_norm_value = jsa_norm(r.jsa);
    checks.push_back(check("jsa_normalized", std::abs(jsa_norm_value - 1.0) < 1e-10,
                           "||phi|| - 1 = " + scientific(jsa_norm_value - 1.0)));

    const auto [low, high] = std::minmax_element(r.hom.probability.begin(), r.hom.probability.end());
    checks.push_back(check("hom_in_unit_interval", *low >= 0.0 && *high <= 1.0,
                           "range [" + scientific(*low) + ", " + scientific(*high) + "]"));

    const double tail_start = 6.0 / r.beta;
    if (delays.back() > tail_start) {
        double sum = 0.0;
        std::size_t n = 0;
        for (std::size_t t = 0; t < delays.size(); ++t) {
            if (std::abs(delays[t]) > tail_start) {
                sum += r.hom.probability[t];
                ++n;
            }
        }
        const double tail = n > 0 ? sum / static_cast<double>(n) : 0.5;
        checks.push_back(check("tail_mean_half", std::abs(tail - 0.5) < 1e-3,
                               "mean P over |tau| > 6/beta = " + scientific(tail)));
    } else {
        checks.push_back(check("tail_mean_half", true, "skipped: delay window shorter than 6/beta"));
    }

    const HomCurve curve_1d = hom_curve_1d(r.pm, delays);
    const HomCurve serial_1d = hom_curve_1d_reference(r.pm, delays);
    checks.push_back(check("parallel_matches_serial_1d", curve_1d.probability == serial_1d.probability,
                           "max diff " + scientific(max_abs_difference(curve_1d.probability, serial_1d.probability))));
    const HomCurve curve_2d = hom_curve_2d_bosons(r.jsa, delays);
    const HomCurve serial_2d = hom_curve_2d_bosons_reference(r.jsa, delays);
    checks.push_back(check("parallel_matches_serial_2d", curve_2d.probability == serial_2d.probability,
                           "max diff " + scientific(max_abs_difference(curve_2d.probability, serial_2d.probability))));

    const double formula_gap = max_abs_difference(curve_1d.probability, curve_2d.probability);
    checks.push_back(check("formula_1d_matches_2d", formula_gap < kFormulaAgreementTolerance,
                           "sup |P_1d - P_2d| = " + scientific(formula_gap) + " (tolerance " +
                               scientific(kFormulaAgreementTolerance) + ")"));

    const double jsi_asymmetry = jsi_transpose_residual(jsi(r.jsa), r.jsa.size());
    checks.push_back(check("jsi_finite", std::isfinite(jsi_asymmetry), "transpose residual " + scientific(jsi_asymmetry)));

    if (r.pump.grid.is_symmetric() && r.pump.carrier == Carrier::demodulated) {
        PumpProfile mirrored = r.pump;
        std::reverse(mirrored.amplitude.begin(), mirrored.amplitude.end());
        const HomCurve mirror_curve = hom_curve_1d(pm_from_pump(mirrored, config.device, r.pm.grid), delays);
        double worst = 0.0;
        for (std::size_t t = 0; t < delays.size(); ++t) {
            worst = std::max(worst, std::abs(mirror_curve.probability[t] - curve_1d.probability[delays.mirror(t)]));
        }
        checks.push_back(check("mirror_law", worst < 1e-8, "max |P_mirror(tau) - P(-tau)| = " + scientific(worst)));
    } else {
        checks.push_back(check("mirror_law", true, "skipped: needs a symmetric demodulated pump grid"));
    }

    const bool deterministic = serialize(r) == serialize(run_pipeline(config));
    checks.push_back(check("deterministic_rerun", deterministic, deterministic ? "outputs identical" : "outputs differ"));

    checks.push_back(check("exchange_estimate", r.report.estimated_alpha >= 0.0 && r.report.estimated_alpha <= 1.0,
                           "estimated alpha " + scientific(r.report.estimated_alpha)));
    return checks;
}

}  // namespace anyonpair
