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
 * Entanglement generated by free evolution under
 * H3 = -eps_J (sx^(1) + sx^(2)) + E12 szsz from |00>.
 */

#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "circuit.hpp"
#include "dynamics.hpp"
#include "qmath.hpp"

namespace ccq {

/// C = |<psi| sy (x) sy |psi*>| for a normalised two-qubit pure state.
inline double concurrence_pure(const StateVector &s) {
    require_normalized(s, "concurrence_pure");
    static const Mat4 yy = kron(pauli::Y(), pauli::Y());
    StateVector conj_s;
    for (std::size_t i = 0; i < 4; ++i) {
        conj_s[i] = std::conj(s[i]);
    }
    return std::min(1.0, std::abs(inner(s, yy * conj_s)));
}

inline StateVector evolve_state(const StateVector &s, const CircuitParams &p,
                                const WorkingPoint &w, double t) {
    require_normalized(s, "evolve_state");
    return propagator_exact(p, w, t) * s;
}

inline double symmetric_eps(const CircuitParams &p) {
    const double a = p.eps_J[0];
    const double b = p.eps_J[1];
    if (std::abs(a - b) > 1e-12 * std::max(std::abs(a), std::abs(b))) {
        throw std::invalid_argument(
            "closed-form concurrence needs eps_J^(1) = eps_J^(2)");
    }
    return a;
}

/// zeta~ = E12 / (2 eps_J).
inline double zeta_tilde(const CircuitParams &p) {
    return p.E12 / (2.0 * symmetric_eps(p));
}

enum class ConcurrenceForm {
    /// Q(t) = sin(2 theta) / sqrt(1 + zeta~^-2) - sin(rho). Exact.
    Corrected,
    /// Q(t) = sin^2(2 theta) / sqrt(1 + zeta~^-2) - sin(rho). Not exact; for comparison.
    SquaredSine,
};

/**
 * @brief C_E(t) = 1/2 sqrt(P^2 + Q^2) with
 * P = cos^2 th - cos rho + sin^2 th (1/(1+z^2) - 1/(1+z^-2)),
 * th = gamma sqrt(1 + z^2), rho = 2 z gamma, gamma = 2 eps t / hbar.
 */
inline double concurrence_closed_form(const CircuitParams &p, double t,
                                      ConcurrenceForm form = ConcurrenceForm::Corrected) {
    const double eps = symmetric_eps(p);
    const double z = p.E12 / (2.0 * eps);
    if (z == 0.0) {
        return 0.0;
    }
    const double gamma = 2.0 * eps * t / p.hbar;
    const double th = gamma * std::sqrt(1.0 + z * z);
    const double rho = 2.0 * z * gamma;
    const double sin_th = std::sin(th);
    const double cos_th = std::cos(th);
    const double w_small = 1.0 / (1.0 + z * z);
    const double w_large = 1.0 / (1.0 + 1.0 / (z * z));
    const double P = cos_th * cos_th - std::cos(rho) +
                     sin_th * sin_th * (w_small - w_large);
    const double s2 = std::sin(2.0 * th);
    const double q_lead = form == ConcurrenceForm::Corrected ? s2 : s2 * s2;
    const double Q = q_lead / std::sqrt(1.0 + 1.0 / (z * z)) - std::sin(rho);
    return 0.5 * std::sqrt(P * P + Q * Q);
}

/// Brute-force route: concurrence of exp(-i t H3 / hbar) |00>.
inline double concurrence_evolved(const CircuitParams &p, double t) {
    return concurrence_pure(
        evolve_state(StateVector::basis(0, 0), p, wp::CoResonantBoth{}, t));
}

struct ConcurrenceTrace {
    std::vector<double> times;
    std::vector<double> values;
    double eps_J = 0.0;
    double E12 = 0.0;
};

inline ConcurrenceTrace concurrence_trace(const CircuitParams &p, double t_max,
                                          std::size_t steps,
                                          ConcurrenceForm form = ConcurrenceForm::Corrected) {
    if (steps == 0 || !(t_max > 0.0)) {
        throw std::invalid_argument("concurrence_trace: empty time grid");
    }
    ConcurrenceTrace tr;
    tr.eps_J = symmetric_eps(p);
    tr.E12 = p.E12;
    tr.times.reserve(steps + 1);
    tr.values.reserve(steps + 1);
    for (std::size_t i = 0; i <= steps; ++i) {
        const double t = t_max * static_cast<double>(i) / static_cast<double>(steps);
        tr.times.push_back(t);
        tr.values.push_back(concurrence_closed_form(p, t, form));
    }
    return tr;
}

/// Spacing pi hbar / [2 eps sqrt(1 + zeta~^2)] between plateau times.
inline double plateau_spacing(const CircuitParams &p) {
    const double eps = symmetric_eps(p);
    const double z = p.E12 / (2.0 * eps);
    return std::numbers::pi * p.hbar / (2.0 * eps * std::sqrt(1.0 + z * z));
}

/// alpha_+- = [1 +- exp(+- i x)] / 2 at x = E12 t_e / hbar. Right concurrence, wrong state phases.
inline std::pair<cplx, cplx> half_phase_alpha_pm(double x) {
    return {(1.0 + std::exp(cplx{0.0, x})) / 2.0,
            (1.0 - std::exp(cplx{0.0, -x})) / 2.0};
}

/**
 * @brief Evolved state at the k-th plateau time, alpha |00> + beta |11>.
 *
 * At sin(theta) = 0 the {Phi+, Psi+} block returns to (-1)^k Phi+ while
 * Phi- picks up e^{-ix}, so alpha = ((-1)^k + e^{-ix}) / 2 and
 * beta = ((-1)^k - e^{-ix}) / 2 exactly.
 */
struct PlateauState {
    int k = 0;
    double t_e = 0.0;
    cplx alpha;
    cplx beta;
    double concurrence = 0.0; ///< |sin(E12 t_e / hbar)|
    bool maximal = false;     ///< nearest plateau to a zero of cos(E12 t / hbar)

    [[nodiscard]] StateVector state() const {
        StateVector s;
        s[0] = alpha;
        s[3] = beta;
        return s;
    }
};

inline PlateauState plateau_state(const CircuitParams &p, int k) {
    if (k < 1) {
        throw std::invalid_argument("plateau index starts at 1");
    }
    const double spacing = plateau_spacing(p);
    PlateauState s;
    s.k = k;
    s.t_e = k * spacing;
    const double x = p.E12 * s.t_e / p.hbar;
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const cplx ph = std::exp(cplx{0.0, -x});
    s.alpha = (sign + ph) / 2.0;
    s.beta = (sign - ph) / 2.0;
    s.concurrence = std::abs(std::sin(x));
    const double dx = p.E12 * spacing / p.hbar;
    s.maximal = std::abs(std::cos(x)) <= std::sin(std::min(dx, std::numbers::pi) / 2.0);
    return s;
}

/// Plateaus t_e = k * spacing for k = 1, 2, ... with t_e <= t_max.
inline std::vector<PlateauState> find_plateaus(const CircuitParams &p,
                                               double t_max) {
    std::vector<PlateauState> out;
    const double spacing = plateau_spacing(p);
    for (int k = 1; k * spacing <= t_max * (1.0 + 1e-12); ++k) {
        out.push_back(plateau_state(p, k));
    }
    return out;
}

/// || psi(t_e) - psi_e || after removing the global phase.
inline double plateau_residual(const CircuitParams &p, const PlateauState &s) {
    const StateVector evolved =
        evolve_state(StateVector::basis(0, 0), p, wp::CoResonantBoth{}, s.t_e);
    return distance_up_to_global_phase(evolved, s.state());
}

/// True when t lies within frac * spacing of some plateau time (k >= 1).
inline bool near_plateau(const CircuitParams &p, double t, double frac = 0.02) {
    const double spacing = plateau_spacing(p);
    const double k = std::round(t / spacing);
    return k >= 1.0 && std::abs(t - k * spacing) <= frac * spacing;
}

} // namespace ccq
