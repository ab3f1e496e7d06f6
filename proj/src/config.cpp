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


#include "anyonpair/config.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <functional>
#include <istream>
#include <map>
#include <set>
#include <sstream>
#include <string_view>
#include <utility>
#include <vector>

#include "anyonpair/errors.hpp"

namespace anyonpair {

namespace {

struct Entry {
    std::string key;
    std::string value;
    std::string where;  // "source:line"
};

[[noreturn]] void bad(const Entry& e, const std::string& message) {
    fail(ErrorKind::config, e.where + ": " + e.key + ": " + message);
}

std::string_view trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

using UnitTable = std::vector<std::pair<std::string_view, double>>;

const UnitTable kLength = {{"m", 1.0}, {"mm", 1e-3}, {"um", 1e-6}, {"nm", 1e-9}};
const UnitTable kTime = {{"s", 1.0}, {"ns", 1e-9}, {"ps", 1e-12}, {"fs", 1e-15}};
const UnitTable kAngle = {{"rad", 1.0}, {"deg", kPi / 180.0}, {"pi", kPi}};
const UnitTable kVelocity = {{"m/s", 1.0}};
const UnitTable kRate = {{"rad/s", 1.0}, {"rad/ps", 1e12}};

std::string unit_list(const UnitTable& units) {
    std::string out;
    for (const auto& [name, scale] : units) out += (out.empty() ? "" : ", ") + std::string(name);
    return out;
}

// Number followed by an optional unit word.
std::pair<double, std::string_view> split_quantity(const Entry& e) {
    const std::string_view text = trim(e.value);
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data()) bad(e, "expected a number, got '" + std::string(text) + "'");
    if (!std::isfinite(value)) bad(e, "value must be finite");
    return {value, trim(text.substr(static_cast<std::size_t>(ptr - text.data())))};
}

double quantity(const Entry& e, const UnitTable& units) {
    const auto [value, unit] = split_quantity(e);
    if (unit.empty()) bad(e, "missing unit (one of " + unit_list(units) + ")");
    for (const auto& [name, scale] : units) {
        if (unit == name) return value * scale;
    }
    bad(e, "unknown unit '" + std::string(unit) + "' (expected one of " + unit_list(units) + ")");
}

double positive(const Entry& e, double value) {
    if (!(value > 0.0)) bad(e, "must be positive");
    return value;
}

double plain_number(const Entry& e) {
    const auto [value, unit] = split_quantity(e);
    if (!unit.empty()) bad(e, "dimensionless value takes no unit, got '" + std::string(unit) + "'");
    return value;
}

std::size_t count(const Entry& e) {
    const double value = plain_number(e);
    if (value < 2.0 || value != std::floor(value) || value > 1e8) bad(e, "must be an integer >= 2");
    return static_cast<std::size_t>(value);
}

FrequencyValue frequency(const Entry& e) {
    const auto [value, unit] = split_quantity(e);
    if (unit == "beta") return {positive(e, value), true};
    return {positive(e, quantity(e, kRate)), false};
}

template <class T>
T choice(const Entry& e, const std::vector<std::pair<std::string_view, T>>& options) {
    const std::string_view word = trim(e.value);
    std::string expected;
    for (const auto& [name, value] : options) {
        if (word == name) return value;
        expected += (expected.empty() ? "" : ", ") + std::string(name);
    }
    bad(e, "expected one of " + expected + ", got '" + std::string(word) + "'");
}

using Handler = std::function<void(ExperimentConfig&, const Entry&)>;
using Section = std::map<std::string, Handler, std::less<>>;

struct Context {
    std::filesystem::path base_directory;
};

std::map<std::string, Section, std::less<>> make_schema(const Context& ctx) {
    std::map<std::string, Section, std::less<>> schema;
    schema["device"] = {
        {"length", [](auto& c, const Entry& e) { c.device.waveguide_length = positive(e, quantity(e, kLength)); }},
        {"group_velocity",
         [](auto& c, const Entry& e) {
             c.device.group_velocity = positive(e, quantity(e, kVelocity));
             c.group_velocity_given = true;
         }},
        {"group_index",
         [](auto& c, const Entry& e) {
             const double n = plain_number(e);
             if (!(n > 1.0)) bad(e, "group index must exceed 1");
             c.device.group_velocity = c.device.speed_of_light / n;
             c.group_velocity_given = true;
         }},
        {"pump_wavelength",
         [](auto& c, const Entry& e) { c.device.pump_wavelength = positive(e, quantity(e, kLength)); }},
        {"incidence_angle", [](auto& c, const Entry& e) { c.device.incidence_angle = quantity(e, kAngle); }},
        {"pulse_duration", [](auto& c, const Entry& e) { c.device.pulse_duration = positive(e, quantity(e, kTime)); }},
    };
    schema["pump"] = {
        {"kind",
         [](auto& c, const Entry& e) {
             c.pump.kind = choice<PumpKind>(e, {{"gaussian_step", PumpKind::gaussian_step},
                                                {"ideal_anyon", PumpKind::ideal_anyon},
                                                {"custom", PumpKind::custom}});
         }},
        {"waist", [](auto& c, const Entry& e) { c.pump.gaussian.waist = positive(e, quantity(e, kLength)); }},
        {"shift", [](auto& c, const Entry& e) { c.pump.gaussian.center_shift = quantity(e, kLength); }},
        {"step_position", [](auto& c, const Entry& e) { c.pump.gaussian.step_position = quantity(e, kLength); }},
        {"step_phase", [](auto& c, const Entry& e) { c.pump.gaussian.step_phase = quantity(e, kAngle); }},
        {"alpha",
         [](auto& c, const Entry& e) {
             c.pump.alpha = plain_number(e);
             if (c.pump.alpha < 0.0 || c.pump.alpha > 1.0) bad(e, "alpha must lie in [0, 1]");
         }},
        {"sectors",
         [](auto& c, const Entry& e) {
             c.pump.inverse.sectors = choice<SectorAssignment>(
                 e, {{"standard", SectorAssignment::standard}, {"swapped", SectorAssignment::swapped}});
         }},
        {"carrier",
         [](auto& c, const Entry& e) {
             c.pump.inverse.carrier =
                 choice<Carrier>(e, {{"demodulated", Carrier::demodulated}, {"explicit", Carrier::explicit_samples}});
         }},
        {"padding",
         [](auto& c, const Entry& e) {
             c.pump.inverse.padding_factor = plain_number(e);
             if (c.pump.inverse.padding_factor < 1.0) bad(e, "padding must be >= 1");
         }},
        {"spectral_extent",
         [](auto& c, const Entry& e) {
             const auto [value, unit] = split_quantity(e);
             if (unit != "beta") bad(e, "spectral_extent is given in units of beta (e.g. '12 beta')");
             c.pump.inverse.spectral_extent = positive(e, value);
         }},
        {"file",
         [ctx](auto& c, const Entry& e) {
             std::filesystem::path path(std::string(trim(e.value)));
             if (path.empty()) bad(e, "empty file name");
             if (path.is_relative()) path = ctx.base_directory / path;
             if (!std::filesystem::is_regular_file(path)) bad(e, "pump file '" + path.string() + "' does not exist");
             c.pump.custom_file = path;
         }},
    };
    schema["grids"] = {
        {"spatial_points", [](auto& c, const Entry& e) { c.grids.spatial_points = count(e); }},
        {"spatial_half_width",
         [](auto& c, const Entry& e) { c.grids.spatial_half_width = positive(e, quantity(e, kLength)); }},
        {"frequency_points", [](auto& c, const Entry& e) { c.grids.frequency_points = count(e); }},
        {"frequency_half_width", [](auto& c, const Entry& e) { c.grids.frequency_half_width = frequency(e); }},
        {"jsa_points", [](auto& c, const Entry& e) { c.grids.jsa_points = count(e); }},
        {"jsa_half_width", [](auto& c, const Entry& e) { c.grids.jsa_half_width = frequency(e); }},
        {"delay_points", [](auto& c, const Entry& e) { c.grids.delay_points = count(e); }},
        {"delay_half_width",
         [](auto& c, const Entry& e) { c.grids.delay_half_width = positive(e, quantity(e, kTime)); }},
    };
    schema["jsa"] = {
        {"bandwidth", [](auto& c, const Entry& e) { c.pump_bandwidth = positive(e, quantity(e, kRate)); }},
    };
    schema["hom"] = {
        {"formula",
         [](auto& c, const Entry& e) {
             c.formula = choice<HomFormula>(e, {{"1d", HomFormula::one_d}, {"2d", HomFormula::two_d}});
         }},
    };
    schema["analysis"] = {
        {"reference_alpha",
         [](auto& c, const Entry& e) {
             c.reference_alpha = plain_number(e);
             if (c.reference_alpha < 0.0 || c.reference_alpha > 1.0) bad(e, "reference_alpha must lie in [0, 1]");
         }},
    };
    schema["output"] = {
        {"directory",
         [](auto& c, const Entry& e) {
             const auto dir = trim(e.value);
             if (dir.empty()) bad(e, "empty directory");
             c.output.directory = std::string(dir);
         }},
        {"files",
         [](auto& c, const Entry& e) {
             OutputConfig& o = c.output;
             o.pump = o.pm = o.jsa = o.jsi = o.hom = o.report = false;
             std::stringstream list{std::string(e.value)};
             std::string item;
             while (std::getline(list, item, ',')) {
                 const auto name = trim(item);
                 if (name == "pump") o.pump = true;
                 else if (name == "pm") o.pm = true;
                 else if (name == "jsa") o.jsa = true;
                 else if (name == "jsi") o.jsi = true;
                 else if (name == "hom") o.hom = true;
                 else if (name == "report") o.report = true;
                 else if (name == "all") o.pump = o.pm = o.jsa = o.jsi = o.hom = o.report = true;
                 else bad(e, "unknown output '" + std::string(name) + "' (pump, pm, jsa, jsi, hom, report, all)");
             }
         }},
    };
    return schema;
}

}  // namespace

ExperimentConfig parse_config(std::istream& in, const std::string& source,
                              const std::filesystem::path& base_directory) {
    const auto schema = make_schema(Context{base_directory});
    ExperimentConfig config;
    const Section* section = nullptr;
    std::string section_name;
    std::set<std::string> seen;
    std::string line;
    std::size_t number = 0;
    while (std::getline(in, line)) {
        ++number;
        const std::string where = source + ":" + std::to_string(number);
        std::string_view text = line;
        if (const auto comment = text.find_first_of("#;"); comment != std::string_view::npos) {
            text = text.substr(0, comment);
        }
        text = trim(text);
        if (text.empty()) continue;
        if (text.front() == '[') {
            require(text.back() == ']', ErrorKind::config, where + ": unterminated section header");
            section_name = std::string(trim(text.substr(1, text.size() - 2)));
            const auto found = schema.find(section_name);
            require(found != schema.end(), ErrorKind::config, where + ": unknown section [" + section_name + "]");
            section = &found->second;
            continue;
        }
        const auto eq = text.find('=');
        require(eq != std::string_view::npos, ErrorKind::config, where + ": expected 'key = value'");
        require(section != nullptr, ErrorKind::config, where + ": key outside of any [section]");
        Entry entry{std::string(trim(text.substr(0, eq))), std::string(trim(text.substr(eq + 1))), where};
        const auto handler = section->find(entry.key);
        require(handler != section->end(), ErrorKind::config,
                where + ": unknown key '" + entry.key + "' in [" + section_name + "]");
        require(seen.insert(section_name + "." + entry.key).second, ErrorKind::config,
                where + ": duplicate key '" + entry.key + "'");
        if (entry.value.empty()) bad(entry, "missing value");
        handler->second(config, entry);
    }
    require(!(seen.count("device.group_velocity") && seen.count("device.group_index")), ErrorKind::config,
            source + ": give either group_velocity or group_index, not both");
    validate_config(config, source);
    return config;
}

void validate_config(const ExperimentConfig& config, const std::string& source) {
    require(config.pump.kind != PumpKind::custom || !config.pump.custom_file.empty(), ErrorKind::config,
            source + ": pump kind 'custom' needs a 'file' entry");
    try {
        config.device.validate();
    } catch (const Error& e) {
        fail(ErrorKind::config, source + ": " + e.what());
    }
}

void apply_setting(ExperimentConfig& config, const std::string& section, const std::string& key,
                   const std::string& value, const std::string& where, const std::filesystem::path& base_directory) {
    const auto schema = make_schema(Context{base_directory});
    const auto found = schema.find(section);
    require(found != schema.end(), ErrorKind::config, where + ": unknown section [" + section + "]");
    const auto handler = found->second.find(key);
    require(handler != found->second.end(), ErrorKind::config,
            where + ": unknown key '" + key + "' in [" + section + "]");
    Entry entry{key, std::string(trim(value)), where};
    if (entry.value.empty()) bad(entry, "missing value");
    handler->second(config, entry);
}

ExperimentConfig load_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    require(static_cast<bool>(in), ErrorKind::config, "cannot open config file " + path.string());
    return parse_config(in, path.string(), path.parent_path());
}

}  // namespace anyonpair
