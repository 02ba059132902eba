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
 * Implementations of the fig2, fig3, chsh and pulses subcommands. Each
 * writes CSV (or the pulses report) to `out` and a human summary to
 * `report`, and returns the process exit code. Input problems throw
 * ConfigError; failed numerical checks throw ValidationError.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <fstream>
#include <iomanip>
#include <limits>
#include <map>
#include <numbers>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "../bell.hpp"
#include "../dynamics.hpp"
#include "../entangle.hpp"
#include "../sequence_io.hpp"
#include "config.hpp"

namespace ccq::cli {

/// Fixed 12-significant-digit rendering; identical input gives identical text.
inline std::string num(double x) {
    std::ostringstream os;
    os << std::setprecision(12) << x;
    return os.str();
}

inline const char *flag(bool b) { return b ? "1" : "0"; }

inline void check_probability(double p, const char *what) {
    if (!(p >= -1e-10 && p <= 1.0 + 1e-10)) {
        throw ValidationError(std::string(what) + " outside [0, 1]: " + num(p));
    }
}

/// Writes the charge-regime check when both temperature and gap are configured.
/// Failed flags are warnings; they do not change the exit code.
inline void report_regime(const RunConfig &cfg, std::ostream &report) {
    if (!cfg.temperature || !cfg.gap) {
        return;
    }
    const auto r = check_regime(cfg.circuit, *cfg.temperature, *cfg.gap,
                                cfg.regime_threshold);
    for (std::size_t j = 0; j < 2; ++j) {
        const auto &q = r.qubit[j];
        report << "regime qubit " << j + 1 << ": kT/E_J=" << num(q.thermal_ratio)
               << " E_J/E_C=" << num(q.charge_ratio) << " E_C/gap=" << num(q.gap_ratio)
               << (q.ok() ? "" : "  warning: outside the charge regime") << '\n';
    }
}

// ---------------------------------------------------------------------------
// fig2

struct Fig2Series {
    double zeta = 0.0;
    std::vector<double> tau;
    std::vector<double> p_appr;
    std::vector<double> p_ex;
    double max_diff = 0.0;
};

inline Fig2Series fig2_series(double zeta, double tau_max, std::size_t steps) {
    const CircuitParams p = CircuitParams::dimensionless(zeta);
    Fig2Series s;
    s.zeta = zeta;
    for (std::size_t i = 0; i <= steps; ++i) {
        const double tau = tau_max * static_cast<double>(i) / static_cast<double>(steps);
        const auto pr = flip_probabilities(p, Qubit::One, tau);
        check_probability(pr.approx, "P_appr");
        check_probability(pr.exact, "P_ex");
        s.tau.push_back(tau);
        s.p_appr.push_back(pr.approx);
        s.p_ex.push_back(pr.exact);
        s.max_diff = std::max(s.max_diff, std::abs(pr.approx - pr.exact));
    }
    return s;
}

inline int cmd_fig2(const RunConfig &cfg, std::ostream &out, std::ostream &report) {
    cfg.validate();
    out << "zeta,tau,p_appr,p_ex,diff\n";
    for (double z : cfg.zetas) {
        const auto s = fig2_series(z, cfg.tau_max, cfg.tau_steps);
        for (std::size_t i = 0; i < s.tau.size(); ++i) {
            out << num(z) << ',' << num(s.tau[i]) << ',' << num(s.p_appr[i]) << ','
                << num(s.p_ex[i]) << ',' << num(s.p_appr[i] - s.p_ex[i]) << '\n';
        }
        report << "zeta=" << num(z) << " max|P_appr-P_ex|=" << num(s.max_diff) << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// fig3

inline constexpr double kBellThreshold = 0.70710678118654752;

struct Fig3Trace {
    double em_ratio = 0.0;
    CircuitParams params;
    ConcurrenceTrace trace;
    std::vector<PlateauState> plateaus;
};

inline Fig3Trace fig3_trace(const CircuitParams &base, double em_ratio, double t_max,
                            std::size_t steps, ConcurrenceForm form) {
    Fig3Trace f;
    f.em_ratio = em_ratio;
    f.params = base;
    try {
        f.params.E12 = em_ratio * symmetric_eps(base) / 4.0;
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    f.trace = concurrence_trace(f.params, t_max, steps, form);
    for (double c : f.trace.values) {
        check_probability(c, "concurrence");
    }
    f.plateaus = find_plateaus(f.params, t_max);
    return f;
}

inline int cmd_fig3(const RunConfig &cfg, std::ostream &out, std::ostream &report,
                    ConcurrenceForm form = ConcurrenceForm::Corrected,
                    std::ostream *plateau_csv = nullptr) {
    cfg.validate();
    out << "em_ratio,t_ps,concurrence,is_plateau,above_threshold\n";
    if (plateau_csv != nullptr) {
        *plateau_csv << "em_ratio,k,t_e_ps,concurrence,maximal\n";
    }
    for (double r : cfg.em_ratios) {
        const auto f = fig3_trace(cfg.circuit, r, cfg.t_max, cfg.t_steps, form);
        for (std::size_t i = 0; i < f.trace.times.size(); ++i) {
            const double c = f.trace.values[i];
            out << num(r) << ',' << num(f.trace.times[i]) << ',' << num(c) << ','
                << flag(near_plateau(f.params, f.trace.times[i])) << ','
                << flag(c > kBellThreshold) << '\n';
        }
        report << "em_ratio=" << num(r) << " E12=" << num(f.params.E12)
               << " ueV plateaus (threshold " << num(kBellThreshold) << "):\n";
        if (form == ConcurrenceForm::SquaredSine) {
            double worst = 0.0;
            for (std::size_t i = 0; i < f.trace.times.size(); ++i) {
                worst = std::max(worst, std::abs(f.trace.values[i] -
                                                 concurrence_evolved(f.params, f.trace.times[i])));
            }
            report << "  warning: sin^2(2 theta) form deviates from the propagator by up to "
                   << num(worst) << '\n';
        }
        report << "  k  t_e_ps  C_E(t_e)  maximal\n";
        for (const auto &pl : f.plateaus) {
            report << "  " << pl.k << "  " << num(pl.t_e) << "  " << num(pl.concurrence)
                   << "  " << (pl.maximal ? "yes" : "no") << '\n';
            if (plateau_csv != nullptr) {
                *plateau_csv << num(r) << ',' << pl.k << ',' << num(pl.t_e) << ','
                             << num(pl.concurrence) << ',' << flag(pl.maximal) << '\n';
            }
        }
    }
    return 0;
}

// ---------------------------------------------------------------------------
// chsh

/// First plateau flagged maximal within the horizon.
inline PlateauState auto_plateau(const CircuitParams &p, double t_max) {
    for (const auto &pl : find_plateaus(p, t_max)) {
        if (pl.maximal) {
            return pl;
        }
    }
    throw ConfigError("no maximal plateau within " + num(t_max) + " ps");
}

inline void write_chsh_row(std::ostream &out, const ChshResult &r) {
    out << num(r.t_e);
    for (double e : r.correlations) {
        out << ',' << num(e);
    }
    out << ',' << num(r.f) << ',' << flag(r.violated) << ',' << to_string(r.mode) << ','
        << r.shots << ',' << r.seed << '\n';
}

inline int cmd_chsh(const RunConfig &cfg, std::ostream &out, std::ostream &report) {
    cfg.validate();
    const CircuitParams &p = cfg.circuit;
    try {
        symmetric_eps(p);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(e.what());
    }
    const double t_e = cfg.t_e ? *cfg.t_e : auto_plateau(p, cfg.t_max).t_e;
    const StateVector prepared =
        evolve_state(StateVector::basis(0, 0), p, wp::CoResonantBoth{}, t_e);
    if (!prepared.is_normalized()) {
        throw ValidationError("evolved state lost normalisation");
    }
    const double c = concurrence_pure(prepared);

    out << "te_ps,E11,E21,E12,E22,f,violated,mode,shots,seed\n";
    report << "t_e=" << num(t_e) << " ps  E12=" << num(p.E12)
           << " ueV  concurrence=" << num(c)
           << "  2*sqrt2*|sin(E12 t_e/hbar)|=" << num(2.0 * std::numbers::sqrt2 *
                                                      std::abs(std::sin(p.E12 * t_e / p.hbar)))
           << '\n';

    std::optional<ChshResult> analytic;
    if (cfg.mode != ReportMode::Sampled) {
        analytic = chsh(p, t_e, cfg.angles, ChshMode::Analytic, cfg.frame);
        if (analytic->f > 2.0 * std::numbers::sqrt2 + 1e-10) {
            throw ValidationError("analytic CHSH value exceeds the Tsirelson bound");
        }
        write_chsh_row(out, *analytic);
        report << "analytic f=" << num(analytic->f)
               << (analytic->violated ? "  VIOLATED (f > 2)" : "  not violated") << '\n';
        for (const auto &w : analytic->warnings) {
            report << "warning: " << w << '\n';
        }
    }
    if (cfg.mode != ReportMode::Analytic) {
        const auto s =
            chsh(p, t_e, cfg.angles, ChshMode::Sampled, cfg.frame, cfg.shots, cfg.seed);
        write_chsh_row(out, s);
        double var = 0.0;
        for (double e : s.correlations) {
            var += std::pow(correlation_standard_error(e, cfg.shots), 2);
        }
        report << "sampled  f=" << num(s.f) << " +- " << num(std::sqrt(var)) << " ("
               << cfg.shots << " shots per setting, seed " << cfg.seed << ")"
               << (s.violated ? "  VIOLATED (f > 2)" : "  not violated") << '\n';
    }
    return 0;
}

// ---------------------------------------------------------------------------
// pulses

enum class TargetKind { Identity, ControlledZ, Rx, Rz };

struct PulseTarget {
    TargetKind kind = TargetKind::Identity;
    Qubit qubit = Qubit::One;
    double angle = 0.0;
    bool approximate = false; ///< decoupling-approximation target

    [[nodiscard]] Operator op() const {
        switch (kind) {
        case TargetKind::Identity:
            return Operator::identity();
        case TargetKind::ControlledZ:
            return Operator::diagonal({1.0, 1.0, 1.0, -1.0});
        case TargetKind::Rx:
            return rx(qubit, angle);
        case TargetKind::Rz:
            return rz(qubit, angle);
        }
        return Operator::identity();
    }

    [[nodiscard]] std::string describe() const {
        const std::string q = std::to_string(to_int(qubit));
        switch (kind) {
        case TargetKind::Identity:
            return "identity";
        case TargetKind::ControlledZ:
            return "cz = diag(1,1,1,-1)";
        case TargetKind::Rx:
            return "rx" + q + "(" + num(angle) + ") = exp(i a sx)";
        case TargetKind::Rz:
            return "rz" + q + "(" + num(angle) + ") = exp(-i a sz)";
        }
        return {};
    }

    /// 1e-9 on 1 - F for exact identities, 1e-3 for approximations.
    [[nodiscard]] double tolerance() const { return approximate ? 1e-3 : 1e-9; }
};

inline TargetKind parse_target_kind(const std::string &s) {
    if (s == "identity") return TargetKind::Identity;
    if (s == "cz") return TargetKind::ControlledZ;
    if (s == "rx") return TargetKind::Rx;
    if (s == "rz") return TargetKind::Rz;
    throw ConfigError("target must be identity, cz, rx or rz");
}

struct PulseProgram {
    std::string name;
    std::vector<SegmentRecord> records;
    CircuitParams params;
    PulseTarget target;
};

struct PulsesOptions {
    std::optional<std::string> sequence_text; ///< contents of a sequence file
    std::string builtin = "decouple-identity";
    int qubit = 1;
    double tau = 100.0;                  ///< delay for decouple-identity (ps)
    double angle = std::numbers::pi / 2; ///< phase for rz-refocused
    std::optional<double> zeta;          ///< overrides E12 = 2 zeta eps_J^(j)
    std::optional<std::string> target;   ///< required for sequence files
    double target_angle = 0.0;
    bool approximate = false;
};

inline const std::vector<std::string> &builtin_names() {
    static const std::vector<std::string> names{"decouple-identity",
                                                "decouple-identity-reversed", "cz",
                                                "rx-physical", "rz-refocused"};
    return names;
}

inline PulseProgram builtin_program(const std::string &name, CircuitParams p,
                                    const PulsesOptions &o) {
    const Qubit j = qubit_from_int(o.qubit);
    const int k = to_int(other(j));
    if (o.zeta) {
        p.E12 = 2.0 * *o.zeta * p.eps(j);
    }
    PulseProgram prog;
    prog.name = name;
    prog.params = p;
    using K = SegmentRecord::Kind;
    if (name == "decouple-identity" || name == "decouple-identity-reversed") {
        const SegmentRecord flip{K::Gate, "x", o.qubit, 0.0};
        const SegmentRecord wait{K::Evolve, "idle", 0, o.tau};
        prog.records = name == "decouple-identity"
                           ? std::vector<SegmentRecord>{flip, wait, flip, wait}
                           : std::vector<SegmentRecord>{wait, flip, wait, flip};
        prog.target = {TargetKind::Identity, j, 0.0, false};
    } else if (name == "cz") {
        const double q = std::numbers::pi / 4.0;
        prog.records = {{K::Gate, "rz", o.qubit, q},
                        {K::Gate, "rz", k, q},
                        {K::Gate, "zz", 0, -q}};
        prog.target = {TargetKind::ControlledZ, j, 0.0, false};
    } else if (name == "rx-physical") {
        prog.records = {{K::Evolve, "decouple", o.qubit, flip_time(p, j)}};
        prog.target = {TargetKind::Rx, j, std::numbers::pi / 2.0, true};
    } else if (name == "rz-refocused") {
        std::array<double, 2> e{};
        try {
            e = far_detuned_energies(p);
        } catch (const std::invalid_argument &err) {
            throw ConfigError(std::string("rz-refocused: ") + err.what());
        }
        const double t = o.angle * p.hbar / (2.0 * e[idx(j)]);
        if (t < 0.0) {
            throw ConfigError("rz-refocused: phase sign opposite to E_j needs a "
                              "reversed gate voltage (flip circuit.EC_eff)");
        }
        const SegmentRecord flip{K::Gate, "x", k, 0.0};
        const SegmentRecord hold{K::Evolve, "far_detuned", 0, t};
        prog.records = {flip, hold, flip, hold};
        prog.target = {TargetKind::Rz, j, o.angle, false};
    } else {
        throw ConfigError("unknown builtin sequence '" + name + "'");
    }
    return prog;
}

struct PulsesResult {
    Operator unitary;
    double total_duration = 0.0;
    double fidelity = 0.0;
    double unitarity_defect = 0.0;
    bool pass = false;
};

inline PulsesResult evaluate_program(const PulseProgram &prog) {
    PulsesResult r;
    PulseSequence seq;
    try {
        seq = to_sequence(prog.records, prog.params);
        r.unitary = run_sequence(seq);
    } catch (const std::invalid_argument &e) {
        throw ConfigError(std::string("pulses: ") + e.what());
    }
    r.total_duration = seq.total_duration();
    r.unitarity_defect = unitarity_defect(r.unitary);
    r.fidelity = fidelity_up_to_global_phase(prog.target.op(), r.unitary);
    r.pass = r.unitarity_defect <= 1e-10 && 1.0 - r.fidelity <= prog.target.tolerance();
    return r;
}

inline int cmd_pulses(const RunConfig &cfg, const PulsesOptions &o, std::ostream &out,
                      std::ostream &report) {
    cfg.validate();
    PulseProgram prog;
    if (o.sequence_text) {
        prog.name = "file";
        try {
            prog.records = parse_sequence(*o.sequence_text);
        } catch (const SequenceParseError &e) {
            throw ConfigError(std::string("sequence file ") + e.what());
        }
        prog.params = cfg.circuit;
        if (o.zeta) {
            prog.params.E12 = 2.0 * *o.zeta * prog.params.eps(qubit_from_int(o.qubit));
        }
        if (!o.target) {
            throw ConfigError("a sequence file needs --target");
        }
        prog.target = {parse_target_kind(*o.target), qubit_from_int(o.qubit),
                       o.target_angle, o.approximate};
    } else {
        prog = builtin_program(o.builtin, cfg.circuit, o);
    }
    const auto r = evaluate_program(prog);

    out << "sequence: " << prog.name << '\n';
    out << "segments: " << prog.records.size() << '\n';
    out << format_sequence(prog.records);
    out << "total_duration_ps: " << num(r.total_duration) << '\n';
    out << "target: " << prog.target.describe()
        << (prog.target.approximate ? " (approximate" : " (exact") << ", 1 - F <= "
        << num(prog.target.tolerance()) << ")\n";
    out << "fidelity: " << num(r.fidelity) << '\n';
    out << "unitarity_defect: " << num(r.unitarity_defect) << '\n';
    out << "unitary:\n";
    for (std::size_t i = 0; i < 4; ++i) {
        out << ' ';
        for (std::size_t jj = 0; jj < 4; ++jj) {
            const cplx v = r.unitary(i, jj);
            out << " (" << num(std::abs(v.real()) < 1e-15 ? 0.0 : v.real()) << ','
                << num(std::abs(v.imag()) < 1e-15 ? 0.0 : v.imag()) << ')';
        }
        out << '\n';
    }
    out << "result: " << (r.pass ? "PASS" : "FAIL") << '\n';
    report << prog.name << ": fidelity " << num(r.fidelity) << " vs "
           << prog.target.describe() << " -> " << (r.pass ? "PASS" : "FAIL") << '\n';
    return r.pass ? 0 : 2;
}

} // namespace ccq::cli
