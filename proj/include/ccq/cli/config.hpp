// Copyright 2026 The ccq Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Run configuration read from a JSON object with sections "circuit",
 * "sweep" and "bell". Unknown keys are rejected.
 *
 * {
 *   "circuit": {"eps_J": 30, "em_ratio": 0.25, "flux": [0, 0], "hbar": 658.2119569,
 *               "EC_eff": [0, 0], "EC_box": [0, 0], "E12": 1.875,
 *               "temperature": 0.03, "gap": 200, "regime_threshold": 0.2,
 *               "capacitance": {"C_m": 1e-18, "C_sum": [6e-16, 6e-16],
 *                               "C_g": [..], "V_g": [..], "C_p": [..], "V_p": 0}},
 *   "sweep":   {"zeta": [0.125, 0.1], "tau_max": 12, "tau_steps": 2000,
 *               "em_ratio": [0.25, 0.5], "t_max": 600, "t_steps": 3000},
 *   "bell":    {"t_e": "auto", "mode": "both", "shots": 10000, "seed": 1,
 *               "frame": "aligned", "theta1": .., "theta1p": .., "theta2": .., "theta2p": ..}
 * }
 *
 * E12 and em_ratio (E_m / eps_J, giving E12 = em_ratio eps_J / 4) are
 * mutually exclusive, as are E12 and a capacitance block.
 */

#pragma once

#include <cstdint>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "../bell.hpp"
#include "../circuit.hpp"

namespace ccq::cli {

/// Bad input: exit code 1.
class ConfigError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical check failed: exit code 2.
class ValidationError : public std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ReportMode { Analytic, Sampled, Both };

struct RunConfig {
    CircuitParams circuit = CircuitParams::symmetric(30.0, 0.25);
    std::optional<double> temperature;
    std::optional<double> gap;
    double regime_threshold = 0.2;

    // fig2
    std::vector<double> zetas{0.125, 0.1};
    double tau_max = 12.0;
    std::size_t tau_steps = 2000;

    // fig3
    std::vector<double> em_ratios{0.25, 0.5};
    double t_max = 600.0;
    std::size_t t_steps = 3000;

    // chsh
    std::optional<double> t_e; // nullopt = auto
    ReportMode mode = ReportMode::Both;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 20050101;
    AnalyzerFrame frame = AnalyzerFrame::Aligned;
    AnalyzerSettings angles;

    void validate() const {
        try {
            circuit.validate();
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("circuit: ") + e.what());
        }
        for (double z : zetas) {
            if (!(z >= 0.0 && z < 1.0)) {
                throw ConfigError("sweep.zeta values must lie in [0, 1)");
            }
        }
        if (zetas.empty() || em_ratios.empty()) {
            throw ConfigError("sweep lists must not be empty");
        }
        for (double r : em_ratios) {
            if (!(r >= 0.0) || !std::isfinite(r)) {
                throw ConfigError("sweep.em_ratio values must be >= 0");
            }
        }
        if (!(tau_max > 0.0) || tau_steps < 2) {
            throw ConfigError("sweep.tau_max must be > 0 and tau_steps >= 2");
        }
        if (!(t_max > 0.0) || t_steps < 2) {
            throw ConfigError("sweep.t_max must be > 0 and t_steps >= 2");
        }
        if (t_e && !(*t_e > 0.0)) {
            throw ConfigError("bell.t_e must be positive");
        }
        if (shots == 0) {
            throw ConfigError("shots must be >= 1");
        }
        if (temperature && !(*temperature > 0.0)) {
            throw ConfigError("circuit.temperature must be positive");
        }
        if (gap && !(*gap > 0.0)) {
            throw ConfigError("circuit.gap must be positive");
        }
    }
};

namespace detail {

using nlohmann::json;

inline void reject_unknown(const json &obj, const std::string &section,
                           const std::set<std::string> &allowed) {
    if (!obj.is_object()) {
        throw ConfigError("'" + section + "' must be an object");
    }
    for (const auto &[key, _] : obj.items()) {
        if (!allowed.contains(key)) {
            throw ConfigError("unknown key '" + section + "." + key + "'");
        }
    }
}

inline double number(const json &v, const std::string &what) {
    if (!v.is_number()) {
        throw ConfigError(what + " must be a number");
    }
    return v.get<double>();
}

/// A scalar applies to both qubits.
inline std::array<double, 2> pair(const json &v, const std::string &what) {
    if (v.is_number()) {
        const double x = v.get<double>();
        return {x, x};
    }
    if (v.is_array() && v.size() == 2) {
        return {number(v[0], what), number(v[1], what)};
    }
    throw ConfigError(what + " must be a number or a 2-element array");
}

inline std::vector<double> list(const json &v, const std::string &what) {
    if (v.is_number()) {
        return {v.get<double>()};
    }
    if (!v.is_array()) {
        throw ConfigError(what + " must be a number or an array");
    }
    std::vector<double> out;
    for (const auto &x : v) {
        out.push_back(number(x, what));
    }
    return out;
}

inline std::size_t count(const json &v, const std::string &what) {
    if (!v.is_number_integer() || v.get<long long>() < 0) {
        throw ConfigError(what + " must be a non-negative integer");
    }
    return v.get<std::size_t>();
}

inline void read_circuit(const json &c, RunConfig &cfg) {
    reject_unknown(c, "circuit",
                   {"eps_J", "flux", "E12", "em_ratio", "EC_eff", "EC_box", "hbar",
                    "temperature", "gap", "regime_threshold", "capacitance"});
    auto &p = cfg.circuit;
    if (c.contains("hbar")) {
        p.hbar = number(c["hbar"], "circuit.hbar");
    }
    if (c.contains("eps_J")) {
        p.eps_J = pair(c["eps_J"], "circuit.eps_J");
    }
    if (c.contains("flux")) {
        p.flux = pair(c["flux"], "circuit.flux");
    }
    if (c.contains("EC_eff")) {
        p.EC_eff = pair(c["EC_eff"], "circuit.EC_eff");
    }
    if (c.contains("EC_box")) {
        p.EC_box = pair(c["EC_box"], "circuit.EC_box");
    }
    const int sources = static_cast<int>(c.contains("E12")) +
                        static_cast<int>(c.contains("em_ratio")) +
                        static_cast<int>(c.contains("capacitance"));
    if (sources > 1) {
        throw ConfigError("circuit: give only one of E12, em_ratio, capacitance");
    }
    if (c.contains("E12")) {
        p.E12 = number(c["E12"], "circuit.E12");
    } else if (c.contains("em_ratio")) {
        const double r = number(c["em_ratio"], "circuit.em_ratio");
        if (p.eps_J[0] != p.eps_J[1]) {
            throw ConfigError("circuit.em_ratio needs a symmetric eps_J");
        }
        p.E12 = r * p.eps_J[0] / 4.0;
    } else if (c.contains("capacitance")) {
        const auto &cap = c["capacitance"];
        reject_unknown(cap, "circuit.capacitance",
                       {"C_m", "C_sum", "C_g", "V_g", "C_p", "V_p"});
        CapacitanceParams cp;
        if (cap.contains("C_m")) cp.C_m = number(cap["C_m"], "C_m");
        if (cap.contains("C_sum")) cp.C_sum = pair(cap["C_sum"], "C_sum");
        if (cap.contains("C_g")) cp.C_g = pair(cap["C_g"], "C_g");
        if (cap.contains("V_g")) cp.V_g = pair(cap["V_g"], "V_g");
        if (cap.contains("C_p")) cp.C_p = pair(cap["C_p"], "C_p");
        if (cap.contains("V_p")) cp.V_p = number(cap["V_p"], "V_p");
        try {
            p = apply_charging(p, energies_from_capacitances(cp));
        } catch (const std::invalid_argument &e) {
            throw ConfigError(std::string("circuit.capacitance: ") + e.what());
        }
    } else {
        p.E12 = 0.25 * p.eps_J[0] / 4.0;
    }
    if (c.contains("temperature")) {
        cfg.temperature = number(c["temperature"], "circuit.temperature");
    }
    if (c.contains("gap")) {
        cfg.gap = number(c["gap"], "circuit.gap");
    }
    if (c.contains("regime_threshold")) {
        cfg.regime_threshold = number(c["regime_threshold"], "circuit.regime_threshold");
    }
}

inline void read_sweep(const json &s, RunConfig &cfg) {
    reject_unknown(s, "sweep",
                   {"zeta", "tau_max", "tau_steps", "em_ratio", "t_max", "t_steps"});
    if (s.contains("zeta")) cfg.zetas = list(s["zeta"], "sweep.zeta");
    if (s.contains("tau_max")) cfg.tau_max = number(s["tau_max"], "sweep.tau_max");
    if (s.contains("tau_steps")) cfg.tau_steps = count(s["tau_steps"], "sweep.tau_steps");
    if (s.contains("em_ratio")) cfg.em_ratios = list(s["em_ratio"], "sweep.em_ratio");
    if (s.contains("t_max")) cfg.t_max = number(s["t_max"], "sweep.t_max");
    if (s.contains("t_steps")) cfg.t_steps = count(s["t_steps"], "sweep.t_steps");
}

inline ReportMode parse_mode(const std::string &m) {
    if (m == "analytic") return ReportMode::Analytic;
    if (m == "sampled") return ReportMode::Sampled;
    if (m == "both") return ReportMode::Both;
    throw ConfigError("mode must be analytic, sampled or both");
}

inline AnalyzerFrame parse_frame(const std::string &f) {
    if (f == "aligned") return AnalyzerFrame::Aligned;
    if (f == "literal") return AnalyzerFrame::Literal;
    throw ConfigError("frame must be aligned or literal");
}

inline void read_bell(const json &b, RunConfig &cfg) {
    reject_unknown(b, "bell",
                   {"t_e", "mode", "shots", "seed", "frame", "theta1", "theta1p",
                    "theta2", "theta2p"});
    if (b.contains("t_e")) {
        const auto &v = b["t_e"];
        if (v.is_string()) {
            if (v.get<std::string>() != "auto") {
                throw ConfigError("bell.t_e must be a number or \"auto\"");
            }
            cfg.t_e.reset();
        } else {
            cfg.t_e = number(v, "bell.t_e");
        }
    }
    if (b.contains("mode")) {
        if (!b["mode"].is_string()) throw ConfigError("bell.mode must be a string");
        cfg.mode = parse_mode(b["mode"].get<std::string>());
    }
    if (b.contains("frame")) {
        if (!b["frame"].is_string()) throw ConfigError("bell.frame must be a string");
        cfg.frame = parse_frame(b["frame"].get<std::string>());
    }
    if (b.contains("shots")) cfg.shots = count(b["shots"], "bell.shots");
    if (b.contains("seed")) cfg.seed = count(b["seed"], "bell.seed");
    if (b.contains("theta1")) cfg.angles.theta1 = number(b["theta1"], "bell.theta1");
    if (b.contains("theta1p")) cfg.angles.theta1p = number(b["theta1p"], "bell.theta1p");
    if (b.contains("theta2")) cfg.angles.theta2 = number(b["theta2"], "bell.theta2");
    if (b.contains("theta2p")) cfg.angles.theta2p = number(b["theta2p"], "bell.theta2p");
}

} // namespace detail

inline RunConfig parse_config(const std::string &text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error &e) {
        throw ConfigError(std::string("config is not valid JSON: ") + e.what());
    }
    detail::reject_unknown(j, "<root>", {"circuit", "sweep", "bell"});
    RunConfig cfg;
    try {
        if (j.contains("circuit")) detail::read_circuit(j["circuit"], cfg);
        if (j.contains("sweep")) detail::read_sweep(j["sweep"], cfg);
        if (j.contains("bell")) detail::read_bell(j["bell"], cfg);
    } catch (const nlohmann::json::exception &e) {
        throw ConfigError(std::string("config: ") + e.what());
    }
    cfg.validate();
    return cfg;
}

inline RunConfig load_config(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open config file '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_config(ss.str());
}

} // namespace ccq::cli
