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

// ccq: figures and protocol checks for two fixed-coupled charge qubits.
// Exit codes: 0 success, 1 usage/config error, 2 numerical-validation failure.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "ccq/cli/commands.hpp"
#include "ccq/cli/config.hpp"

namespace {

using namespace ccq;
using namespace ccq::cli;

std::string read_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ConfigError("cannot open '" + path + "'");
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Fixed-coupling charge-qubit simulator: decoupled gates, "
                 "concurrence dynamics and CHSH tests"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string config_path;
    std::string out_path;
    std::optional<std::uint64_t> seed;
    std::optional<std::uint64_t> shots;
    app.add_option("--config", config_path, "JSON configuration file");
    app.add_option("--out", out_path, "output file (default: stdout)");
    app.add_option("--seed", seed, "PRNG seed for sampled measurements");
    app.add_option("--shots", shots, "shots per analyser setting");

    // fig2
    auto *fig2 = app.add_subcommand("fig2", "effective vs exact flip probabilities");
    std::vector<double> zetas;
    std::optional<double> tau_max;
    std::optional<std::size_t> tau_steps;
    fig2->add_option("--zeta", zetas, "coupling ratios zeta = E12 / (2 eps_J)");
    fig2->add_option("--tau-max", tau_max, "largest tau = eps_J t / hbar");
    fig2->add_option("--steps", tau_steps, "grid intervals");

    // fig3
    auto *fig3 = app.add_subcommand("fig3", "concurrence dynamics under H3");
    std::vector<double> em_ratios;
    std::optional<double> eps_j;
    std::optional<double> t_max;
    std::optional<std::size_t> t_steps;
    bool squared_sine = false;
    std::string plateau_path;
    fig3->add_option("--eps-j", eps_j, "single-junction energy eps_J (ueV)");
    fig3->add_option("--em-ratio", em_ratios, "E_m / eps_J values");
    fig3->add_option("--t-max", t_max, "time horizon (ps)");
    fig3->add_option("--steps", t_steps, "grid intervals");
    fig3->add_flag("--squared-sine", squared_sine,
                   "use the inexact closed form with a sin^2(2 theta) term");
    fig3->add_option("--plateaus", plateau_path, "also write the plateau table as CSV");

    // chsh
    auto *chsh_cmd = app.add_subcommand("chsh", "CHSH test at a plateau time");
    std::string te_arg;
    std::string mode_arg;
    std::string frame_arg;
    std::optional<double> chsh_t_max;
    chsh_cmd->add_option("--te", te_arg, "plateau time in ps, or 'auto'");
    chsh_cmd->add_option("--mode", mode_arg, "analytic | sampled | both");
    chsh_cmd->add_option("--frame", frame_arg, "aligned | literal analyser frame");
    chsh_cmd->add_option("--t-max", chsh_t_max, "horizon for --te auto (ps)");

    // pulses
    auto *pulses = app.add_subcommand("pulses", "run and verify a pulse sequence");
    PulsesOptions popt;
    std::string sequence_path;
    std::string target_arg;
    pulses->add_option("--sequence", sequence_path, "pulse sequence file");
    pulses->add_option("--builtin", popt.builtin,
                       "decouple-identity | decouple-identity-reversed | cz | "
                       "rx-physical | rz-refocused");
    pulses->add_option("--qubit", popt.qubit, "target qubit j (1 or 2)");
    pulses->add_option("--tau", popt.tau, "delay for decouple-identity (ps)");
    pulses->add_option("--angle", popt.angle, "phase for rz-refocused (rad)");
    pulses->add_option("--zeta", popt.zeta, "override E12 = 2 zeta eps_J^(j)");
    pulses->add_option("--target", target_arg, "identity | cz | rx | rz (sequence files)");
    pulses->add_option("--target-angle", popt.target_angle, "target rotation angle (rad)");
    pulses->add_flag("--approximate", popt.approximate,
                     "judge against the 1e-3 decoupling-approximation tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        RunConfig cfg = config_path.empty() ? RunConfig{} : load_config(config_path);
        if (seed) cfg.seed = *seed;
        if (shots) cfg.shots = *shots;

        std::ofstream file;
        if (!out_path.empty()) {
            file.open(out_path, std::ios::binary);
            if (!file) {
                throw ConfigError("cannot write '" + out_path + "'");
            }
        }
        std::ostream &out = out_path.empty() ? std::cout : file;
        std::ostream &report = out_path.empty() ? std::cerr : std::cout;
        report_regime(cfg, report);

        if (*fig2) {
            if (!zetas.empty()) cfg.zetas = zetas;
            if (tau_max) cfg.tau_max = *tau_max;
            if (tau_steps) cfg.tau_steps = *tau_steps;
            return cmd_fig2(cfg, out, report);
        }
        if (*fig3) {
            if (eps_j) cfg.circuit.eps_J = {*eps_j, *eps_j};
            if (!em_ratios.empty()) cfg.em_ratios = em_ratios;
            if (t_max) cfg.t_max = *t_max;
            if (t_steps) cfg.t_steps = *t_steps;
            std::ofstream pfile;
            if (!plateau_path.empty()) {
                pfile.open(plateau_path, std::ios::binary);
                if (!pfile) {
                    throw ConfigError("cannot write '" + plateau_path + "'");
                }
            }
            return cmd_fig3(cfg, out, report,
                            squared_sine ? ConcurrenceForm::SquaredSine
                                          : ConcurrenceForm::Corrected,
                            plateau_path.empty() ? nullptr : &pfile);
        }
        if (*chsh_cmd) {
            if (!te_arg.empty()) {
                if (te_arg == "auto") {
                    cfg.t_e.reset();
                } else {
                    try {
                        cfg.t_e = std::stod(te_arg);
                    } catch (const std::exception &) {
                        throw ConfigError("--te must be a number or 'auto'");
                    }
                }
            }
            if (!mode_arg.empty()) cfg.mode = cli::detail::parse_mode(mode_arg);
            if (!frame_arg.empty()) cfg.frame = cli::detail::parse_frame(frame_arg);
            if (chsh_t_max) cfg.t_max = *chsh_t_max;
            return cmd_chsh(cfg, out, report);
        }
        if (!sequence_path.empty()) {
            popt.sequence_text = read_file(sequence_path);
        }
        if (!target_arg.empty()) {
            popt.target = target_arg;
        }
        return cmd_pulses(cfg, popt, out, report);
    } catch (const ConfigError &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const ValidationError &e) {
        std::cerr << "validation failure: " << e.what() << '\n';
        return 2;
    } catch (const std::invalid_argument &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
}
