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


#include "anyonpair/io.hpp"

#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "anyonpair/errors.hpp"

namespace anyonpair::io {

namespace {

using nlohmann::json;

void write_row(std::ostream& out, std::initializer_list<double> values) {
    bool first = true;
    for (double v : values) {
        if (!first) out << ',';
        out << format_double(v);
        first = false;
    }
    out << '\n';
}

std::string_view trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_field(std::string_view field, const std::string& where) {
    field = trim(field);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    require(ec == std::errc() && ptr == field.data() + field.size(), ErrorKind::config,
            where + ": cannot parse number '" + std::string(field) + "'");
    return value;
}

}  // namespace

std::string format_double(double x) {
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.16e", x);
    return buffer;
}

void write_pump_csv(std::ostream& out, const PumpProfile& pump) {
    out << "z_m,re,im\n";
    for (std::size_t i = 0; i < pump.grid.size(); ++i) {
        write_row(out, {pump.grid[i], pump.amplitude[i].real(), pump.amplitude[i].imag()});
    }
}

void write_pm_csv(std::ostream& out, const PhaseMatching& pm) {
    out << "omega_minus_rad_s,re,im,modulus,phase_rad\n";
    for (std::size_t k = 0; k < pm.grid.size(); ++k) {
        const cplx v = pm.values[k];
        write_row(out, {pm.grid[k], v.real(), v.imag(), std::abs(v), std::arg(v)});
    }
}

void write_jsa_csv(std::ostream& out, const JointSpectralAmplitude& jsa) {
    out << "detuning_s_rad_s,detuning_i_rad_s,re,im\n";
    for (std::size_t i = 0; i < jsa.size(); ++i) {
        for (std::size_t j = 0; j < jsa.size(); ++j) {
            write_row(out, {jsa.axis[i], jsa.axis[j], jsa(i, j).real(), jsa(i, j).imag()});
        }
    }
}

void write_jsi_csv(std::ostream& out, const JointSpectralAmplitude& jsa) {
    out << "detuning_s_rad_s,detuning_i_rad_s,intensity\n";
    for (std::size_t i = 0; i < jsa.size(); ++i) {
        for (std::size_t j = 0; j < jsa.size(); ++j) write_row(out, {jsa.axis[i], jsa.axis[j], std::norm(jsa(i, j))});
    }
}

void write_hom_csv(std::ostream& out, const HomCurve& curve, double beta) {
    out << (beta > 0.0 ? "tau_s,probability,tau_beta\n" : "tau_s,probability\n");
    for (std::size_t t = 0; t < curve.delays.size(); ++t) {
        if (beta > 0.0) {
            write_row(out, {curve.delays[t], curve.probability[t], curve.delays[t] * beta});
        } else {
            write_row(out, {curve.delays[t], curve.probability[t]});
        }
    }
}

void write_jsa_json(std::ostream& out, const JointSpectralAmplitude& jsa) {
    json values = json::array();
    for (std::size_t i = 0; i < jsa.size(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < jsa.size(); ++j) row.push_back({jsa(i, j).real(), jsa(i, j).imag()});
        values.push_back(std::move(row));
    }
    json doc;
    doc["center_omega_rad_s"] = jsa.center_omega;
    doc["detuning_rad_s"] = jsa.axis.samples();
    doc["values"] = std::move(values);
    out << doc.dump() << '\n';
}

void write_report_json(std::ostream& out, const StatisticsReport& report) {
    json doc;
    doc["estimated_alpha"] = report.estimated_alpha;
    doc["zero_delay_P"] = report.zero_delay_P;
    doc["point_symmetry_residual"] = report.point_symmetry_residual;
    doc["exchange_residual"] = report.exchange_residual;
    doc["conjugation_residual"] = report.conjugation_residual;
    doc["overlap_vs_reference"] = report.overlap_vs_reference;
    out << doc.dump(2) << '\n';
}

PumpProfile read_pump_csv(std::istream& in, const std::string& source, Carrier carrier) {
    std::string line;
    std::size_t number = 0;
    bool header = false;
    std::vector<double> z;
    std::vector<cplx> amplitude;
    while (std::getline(in, line)) {
        ++number;
        const std::string where = source + ":" + std::to_string(number);
        const auto content = trim(line);
        if (content.empty() || content.front() == '#') continue;
        if (!header) {
            require(content == "z_m,re,im", ErrorKind::config, where + ": expected header 'z_m,re,im'");
            header = true;
            continue;
        }
        const auto c1 = content.find(',');
        const auto c2 = c1 == std::string_view::npos ? c1 : content.find(',', c1 + 1);
        require(c2 != std::string_view::npos && content.find(',', c2 + 1) == std::string_view::npos, ErrorKind::config,
                where + ": expected three comma-separated columns");
        z.push_back(parse_field(content.substr(0, c1), where));
        amplitude.emplace_back(parse_field(content.substr(c1 + 1, c2 - c1 - 1), where),
                               parse_field(content.substr(c2 + 1), where));
    }
    require(header, ErrorKind::config, source + ": empty pump file");
    require(z.size() >= 2, ErrorKind::config, source + ": pump file needs at least two samples");
    return pump_from_samples(SpatialGrid::from_samples(z), std::move(amplitude), carrier);
}

PumpProfile read_pump_csv(const std::filesystem::path& path, Carrier carrier) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::config, "cannot open pump file " + path.string());
    return read_pump_csv(in, path.string(), carrier);
}

JointSpectralAmplitude read_jsa_json(std::istream& in) {
    json doc;
    try {
        doc = json::parse(in);
        const auto axis = doc.at("detuning_rad_s").get<std::vector<double>>();
        const auto& rows = doc.at("values");
        JointSpectralAmplitude jsa{FrequencyGrid::from_samples(axis), doc.at("center_omega_rad_s").get<double>(), {}};
        require(rows.size() == axis.size(), ErrorKind::config, "JSA json: row count does not match the axis");
        jsa.values.reserve(axis.size() * axis.size());
        for (const auto& row : rows) {
            require(row.size() == axis.size(), ErrorKind::config, "JSA json: column count does not match the axis");
            for (const auto& v : row) jsa.values.emplace_back(v.at(0).get<double>(), v.at(1).get<double>());
        }
        return jsa;
    } catch (const json::exception& e) {
        fail(ErrorKind::config, std::string("JSA json: ") + e.what());
    }
}

void write_file(const std::filesystem::path& path, const std::function<void(std::ostream&)>& writer) {
    std::ofstream out(path, std::ios::binary);
    require(static_cast<bool>(out), ErrorKind::config, "cannot open " + path.string() + " for writing");
    writer(out);
    out.flush();
    require(static_cast<bool>(out), ErrorKind::config, "failed writing " + path.string());
}

}  // namespace anyonpair::io
