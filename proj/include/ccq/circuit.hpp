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
 * Two capacitively coupled Cooper-pair boxes with SQUID junctions: circuit
 * parameters, charge-regime checks and the two-level Hamiltonian
 *
 *   H = 1/2 sum_j [E_C^(j) sz^(j) - E_J^(j) sx^(j)] + E12 sz^(1) sz^(2).
 */

#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>
#include <variant>

#include "qmath.hpp"
#include "units.hpp"

namespace ccq {

inline std::size_t idx(Qubit q) { return q == Qubit::One ? 0 : 1; }

/**
 * @brief Energy-level description of the circuit (ueV, ps).
 */
struct CircuitParams {
    std::array<double, 2> eps_J{30.0, 30.0}; ///< single-junction energy
    std::array<double, 2> flux{0.0, 0.0};    ///< Phi_j / Phi_0
    double E12 = 0.0;                        ///< interbit coupling
    std::array<double, 2> EC_eff{0.0, 0.0};  ///< effective charge energy E_C^(j)
    std::array<double, 2> EC_box{0.0, 0.0};  ///< bare charging scale E_{C_j}; 0 = unknown
    double hbar = units::hbar_ueV_ps;

    [[nodiscard]] double eps(Qubit q) const { return eps_J[idx(q)]; }

    /// zeta_j = E12 / (2 eps_J^(j)).
    [[nodiscard]] double zeta(Qubit q) const { return E12 / (2.0 * eps(q)); }

    void validate() const {
        for (double e : eps_J) {
            if (!(e > 0.0) || !std::isfinite(e)) {
                throw std::invalid_argument("eps_J must be positive");
            }
        }
        if (!(E12 >= 0.0) || !std::isfinite(E12)) {
            throw std::invalid_argument("E12 must be non-negative");
        }
        if (!(hbar > 0.0)) {
            throw std::invalid_argument("hbar must be positive");
        }
    }

    /// Symmetric co-resonant circuit with E12 = E_m / 4 = em_ratio * eps / 4.
    static CircuitParams symmetric(double eps, double em_ratio,
                                   double hbar = units::hbar_ueV_ps) {
        CircuitParams p;
        p.eps_J = {eps, eps};
        p.E12 = em_ratio * eps / 4.0;
        p.hbar = hbar;
        return p;
    }

    /// Dimensionless single-qubit decoupling setup: eps = hbar = 1, E12 = 2 zeta.
    static CircuitParams dimensionless(double zeta) {
        CircuitParams p;
        p.eps_J = {1.0, 1.0};
        p.E12 = 2.0 * zeta;
        p.hbar = 1.0;
        return p;
    }
};

/**
 * @brief Capacitance-level description (SI units).
 *
 * The charging scale uses the cross index: E_{C_j} = 4 e^2 C_{Sigma_k} / C_Sigma
 * where k is the *other* box. C_sum are the total capacitances C_{Sigma_j}.
 */
struct CapacitanceParams {
    double C_m = 0.0;
    std::array<double, 2> C_sum{0.0, 0.0};
    std::array<double, 2> C_g{0.0, 0.0};
    std::array<double, 2> V_g{0.0, 0.0};
    std::array<double, 2> C_p{0.0, 0.0};
    double V_p = 0.0;
};

struct ChargingEnergies {
    double E_m = 0.0;                    ///< 4 e^2 C_m / C_Sigma
    double E12 = 0.0;                    ///< E_m / 4
    std::array<double, 2> EC_box{};      ///< E_{C_j}
    std::array<double, 2> n_g{};         ///< gate charges
    std::array<double, 2> EC_eff{};      ///< E_C^(j)
};

inline ChargingEnergies energies_from_capacitances(const CapacitanceParams &p) {
    const double c_det = p.C_sum[0] * p.C_sum[1] - p.C_m * p.C_m;
    if (!(c_det > 0.0)) {
        throw std::invalid_argument(
            "degenerate capacitance network: C_Sigma1 C_Sigma2 - C_m^2 <= 0");
    }
    const double e = units::e_charge;
    const double to_ueV = units::joule_to_ueV;

    ChargingEnergies out;
    out.E_m = 4.0 * e * e * p.C_m / c_det * to_ueV;
    out.E12 = out.E_m / 4.0;
    for (std::size_t j = 0; j < 2; ++j) {
        const std::size_t k = 1 - j;
        out.EC_box[j] = 4.0 * e * e * p.C_sum[k] / c_det * to_ueV;
        out.n_g[j] = (p.C_g[j] * p.V_g[j] + p.C_p[j] * p.V_p) / (2.0 * e);
        if (!std::isfinite(out.n_g[j])) {
            throw std::invalid_argument("gate charge is not finite");
        }
    }
    for (std::size_t j = 0; j < 2; ++j) {
        const std::size_t k = 1 - j;
        out.EC_eff[j] = out.EC_box[j] * (-0.5 + out.n_g[j]) +
                        out.E_m * (-0.25 + out.n_g[k] / 2.0);
    }
    return out;
}

/// Copies the charging energies into an energy-level parameter set.
inline CircuitParams apply_charging(CircuitParams p, const ChargingEnergies &c) {
    p.E12 = c.E12;
    p.EC_eff = c.EC_eff;
    p.EC_box = c.EC_box;
    return p;
}

/// SQUID Josephson energy E_J = 2 eps_J cos(pi Phi / Phi_0).
inline double effective_josephson(double eps_J, double flux_ratio) {
    if (!(eps_J > 0.0)) {
        throw std::invalid_argument("eps_J must be positive");
    }
    return 2.0 * eps_J * std::cos(std::numbers::pi * flux_ratio);
}

// Working points. Each selects one effective Hamiltonian.
namespace wp {
/// Free (E_C, E_J) per qubit, full two-level Hamiltonian.
struct General {
    std::array<double, 2> EC{};
    std::array<double, 2> EJ{};
};
/// Co-resonance, SQUID j closed (Phi_j = 0), the other open:
/// H1 = -eps_J^(j) sx^(j) + E12 szsz.
struct Decouple {
    Qubit qubit = Qubit::One;
};
/// Far from co-resonance: H2 = sum_j E_j sz^(j) + E12 szsz.
struct FarDetuned {};
/// Co-resonance, both SQUIDs closed: H3 = -sum_j eps_J^(j) sx^(j) + E12 szsz.
struct CoResonantBoth {};
/// Co-resonance, both SQUIDs open: only E12 szsz remains.
struct Idle {};
} // namespace wp

using WorkingPoint =
    std::variant<wp::General, wp::Decouple, wp::FarDetuned, wp::CoResonantBoth,
                 wp::Idle>;

inline std::string working_point_name(const WorkingPoint &w) {
    struct V {
        std::string operator()(const wp::General &) const { return "general"; }
        std::string operator()(const wp::Decouple &) const { return "decouple"; }
        std::string operator()(const wp::FarDetuned &) const {
            return "far_detuned";
        }
        std::string operator()(const wp::CoResonantBoth &) const {
            return "coresonant";
        }
        std::string operator()(const wp::Idle &) const { return "idle"; }
    };
    return std::visit(V{}, w);
}

/**
 * @brief Far-detuned single-qubit energies
 * E_j = E_C^(j) [1 + s_j^2 / (1 - s12^2)], s_j = E_J^(j) / (2 E_C^(j)),
 * s12 = E12 / E_C^(j), evaluated with each qubit's own E_C^(j).
 */
inline std::array<double, 2> far_detuned_energies(const CircuitParams &p) {
    std::array<double, 2> out{};
    for (std::size_t j = 0; j < 2; ++j) {
        const double ec = p.EC_eff[j];
        if (ec == 0.0) {
            throw std::invalid_argument(
                "far-detuned working point needs nonzero E_C^(" +
                std::to_string(j + 1) + ")");
        }
        const double ej = effective_josephson(p.eps_J[j], p.flux[j]);
        const double s_j = ej / (2.0 * ec);
        const double s_12 = p.E12 / ec;
        if (s_12 * s_12 >= 1.0) {
            throw std::invalid_argument(
                "far-detuned correction factor singular: (E12/E_C)^2 >= 1");
        }
        out[j] = ec * (1.0 + s_j * s_j / (1.0 - s_12 * s_12));
    }
    return out;
}

inline Mat4 hamiltonian(const CircuitParams &p, const WorkingPoint &w) {
    const Mat4 coupling = cplx{p.E12} * sigma_zz();
    const auto sx = [](Qubit q) { return embed(pauli::X(), q); };
    const auto sz = [](Qubit q) { return embed(pauli::Z(), q); };

    if (const auto *g = std::get_if<wp::General>(&w)) {
        Mat4 h = coupling;
        for (Qubit q : {Qubit::One, Qubit::Two}) {
            h = h + cplx{0.5 * g->EC[idx(q)]} * sz(q) -
                cplx{0.5 * g->EJ[idx(q)]} * sx(q);
        }
        return h;
    }
    if (const auto *d = std::get_if<wp::Decouple>(&w)) {
        return coupling - cplx{p.eps(d->qubit)} * sx(d->qubit);
    }
    if (std::holds_alternative<wp::FarDetuned>(w)) {
        const auto e = far_detuned_energies(p);
        return coupling + cplx{e[0]} * sz(Qubit::One) +
               cplx{e[1]} * sz(Qubit::Two);
    }
    if (std::holds_alternative<wp::CoResonantBoth>(w)) {
        return coupling - cplx{p.eps_J[0]} * sx(Qubit::One) -
               cplx{p.eps_J[1]} * sx(Qubit::Two);
    }
    return coupling; // Idle
}

/**
 * @brief Charge-regime validity: k_B T << E_J << E_C << Delta per qubit,
 * each "<<" judged as ratio <= threshold.
 */
struct RegimeReport {
    struct PerQubit {
        double thermal_ratio = 0.0;  ///< k_B T / E_J
        double charge_ratio = 0.0;   ///< E_J / E_C
        double gap_ratio = 0.0;      ///< E_C / Delta
        bool thermal_ok = false;
        bool charge_ok = false;
        bool gap_ok = false;
        [[nodiscard]] bool ok() const { return thermal_ok && charge_ok && gap_ok; }
    };
    double temperature = 0.0;
    double gap = 0.0;
    double threshold = 0.2;
    std::array<PerQubit, 2> qubit{};

    [[nodiscard]] bool ok() const { return qubit[0].ok() && qubit[1].ok(); }
};

inline RegimeReport check_regime(const std::array<double, 2> &josephson,
                                 const std::array<double, 2> &charging,
                                 double temperature, double gap,
                                 double threshold = 0.2) {
    RegimeReport r;
    r.temperature = temperature;
    r.gap = gap;
    r.threshold = threshold;
    const double kT = units::kB_ueV_per_K * temperature;
    for (std::size_t j = 0; j < 2; ++j) {
        auto &q = r.qubit[j];
        q.thermal_ratio = kT / josephson[j];
        q.charge_ratio = josephson[j] / charging[j];
        q.gap_ratio = charging[j] / gap;
        q.thermal_ok = q.thermal_ratio <= threshold;
        q.charge_ok = q.charge_ratio <= threshold;
        q.gap_ok = q.gap_ratio <= threshold;
    }
    return r;
}

/// Uses E_J^(j) from eps_J and flux, and E_{C_j} (or |E_C^(j)| if unknown).
inline RegimeReport check_regime(const CircuitParams &p, double temperature,
                                 double gap, double threshold = 0.2) {
    std::array<double, 2> ej{};
    std::array<double, 2> ec{};
    for (std::size_t j = 0; j < 2; ++j) {
        ej[j] = std::abs(effective_josephson(p.eps_J[j], p.flux[j]));
        ec[j] = p.EC_box[j] > 0.0 ? p.EC_box[j] : std::abs(p.EC_eff[j]);
    }
    return check_regime(ej, ec, temperature, gap, threshold);
}

} // namespace ccq
