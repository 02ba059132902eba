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
 * Propagators and effective gates for the fixed-coupling circuit.
 *
 * Rotation conventions: R_x^(j)(phi) = exp(+i phi sx^(j)),
 * R_z^(j)(phi) = exp(-i phi sz^(j)).
 */

#pragma once

#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "circuit.hpp"
#include "qmath.hpp"

namespace ccq {

/// exp(-i t H / hbar) for the given working point.
inline Operator propagator_exact(const CircuitParams &p, const WorkingPoint &w,
                                 double t) {
    if (!(t >= 0.0)) {
        throw std::invalid_argument("evolution time must be non-negative");
    }
    return expm_hermitian(hamiltonian(p, w), cplx{0.0, -t / p.hbar});
}

/// nu_j = sqrt(1 + (E12 / eps_J^(j))^2).
inline double decouple_nu(const CircuitParams &p, Qubit j) {
    const double r = p.E12 / p.eps(j);
    return std::sqrt(1.0 + r * r);
}

/**
 * @brief xi_j on the branch continuous in t, xi(0) = 0.
 *
 * xi = arctan(a tan x) with a = 2 zeta / nu and x = eps nu t / hbar; the
 * branch is shifted by k pi with k = round(x / pi) so that B(t) stays
 * continuous through the poles of tan.
 */
inline double decouple_xi(double a, double x) {
    const double k = std::round(x / std::numbers::pi);
    return std::atan(a * std::tan(x - k * std::numbers::pi)) +
           k * std::numbers::pi;
}

/**
 * @brief Closed-form H1 propagator
 * U = A sx^(j) + B (|00><00| + |11><11|) + B* (|10><10| + |01><01|),
 * A = i rho, B = sqrt(1 - rho^2) e^{-i xi}, rho = sin(eps nu t / hbar) / nu.
 */
inline Operator closed_form_exact(const CircuitParams &p, Qubit j, double t) {
    const double nu = decouple_nu(p, j);
    const double x = p.eps(j) * nu * t / p.hbar;
    const double rho = std::sin(x) / nu;
    const double xi = decouple_xi(2.0 * p.zeta(j) / nu, x);
    const cplx A{0.0, rho};
    const cplx B = std::sqrt(std::max(0.0, 1.0 - rho * rho)) *
                   std::exp(cplx{0.0, -xi});
    return A * embed(pauli::X(), j) +
           Mat4::diagonal({B, std::conj(B), std::conj(B), B});
}

/// A unitary together with the physical time it takes.
struct TimedGate {
    Operator op;
    double duration = 0.0;
    std::optional<std::string> warning;
};

/// exp(i phi sx) placed on qubit j.
inline Operator rx(Qubit j, double phi) {
    return embed(exp_involution(pauli::X(), phi), j);
}

/// exp(-i phi sz) placed on qubit j.
inline Operator rz(Qubit j, double phi) {
    return embed(exp_involution(pauli::Z(), -phi), j);
}

/// exp(-i phi sz sz).
inline Operator zz_phase(double phi) {
    return exp_involution(sigma_zz(), -phi);
}

/// Pulse length t0 = pi hbar / [2 eps (1 + 2 zeta^2)] of an effective flip.
inline double flip_time(const CircuitParams &p, Qubit j) {
    const double z = p.zeta(j);
    return std::numbers::pi * p.hbar / (2.0 * p.eps(j) * (1.0 + 2.0 * z * z));
}

/**
 * @brief Effective decoupled rotation R_x^(j)(phi) and the Decouple(j)
 * duration realising it, t = phi hbar / [eps (1 + 2 zeta^2)].
 */
inline TimedGate gate_rx_effective(const CircuitParams &p, Qubit j, double phi) {
    const double z = p.zeta(j);
    if (!(z < 1.0)) {
        throw std::invalid_argument("decoupling requires zeta_j < 1");
    }
    TimedGate g;
    g.op = rx(j, phi);
    g.duration = phi * p.hbar / (p.eps(j) * (1.0 + 2.0 * z * z));
    if (z > 0.25) {
        g.warning = "zeta_" + std::to_string(to_int(j)) + " = " +
                    std::to_string(z) +
                    " exceeds 1/4; the effective rotation is unreliable";
    }
    return g;
}

/// |<to| u |from>|^2.
inline double transition_probability(const Operator &u, const StateVector &from,
                                     const StateVector &to) {
    require_normalized(from, "transition_probability");
    require_normalized(to, "transition_probability");
    return std::norm(inner(to, u * from));
}

/**
 * @brief Far-detuned two-qubit phase gate
 * exp(-i chi12 szsz) prod_j exp(-i chi_j sz^(j)), chi = E t / hbar.
 * The factors are diagonal and commute.
 */
inline Operator gate_rz12(const CircuitParams &p, double t) {
    const auto e = far_detuned_energies(p);
    return zz_phase(p.E12 * t / p.hbar) * rz(Qubit::One, e[0] * t / p.hbar) *
           rz(Qubit::Two, e[1] * t / p.hbar);
}

/**
 * @brief Refocused single-qubit phase [R_z^(12)(chi) sx^(k)]^2 = exp(-i phi sz^(j)).
 *
 * Each R_z^(12) segment lasts t = |phi| hbar / (2 |E_j|); negative phases
 * flip the sign of E_C^(j), which flips E_j. The sx^(k) pulses are ideal.
 */
inline TimedGate gate_rz_refocused(CircuitParams p, Qubit j, double phi) {
    const auto e = far_detuned_energies(p);
    const double ej = e[idx(j)];
    const double want_sign = phi < 0.0 ? -1.0 : 1.0;
    if ((ej < 0.0 ? -1.0 : 1.0) != want_sign) {
        p.EC_eff[idx(j)] = -p.EC_eff[idx(j)];
    }
    const double t = std::abs(phi) * p.hbar / (2.0 * std::abs(ej));
    const Operator flip = embed(pauli::X(), other(j));
    const Operator half = gate_rz12(p, t) * flip;
    TimedGate g;
    g.op = half * half;
    g.duration = 2.0 * t;
    return g;
}

/// Explicit Hadamard-like matrix (1/sqrt2) [[1, -i e^{i th}], [-i e^{-i th}, 1]].
inline Mat2 hadamard_like_matrix(double theta) {
    const double s = 1.0 / std::numbers::sqrt2;
    Mat2 m;
    m(0, 0) = s;
    m(0, 1) = -kI * std::exp(cplx{0.0, theta}) * s;
    m(1, 0) = -kI * std::exp(cplx{0.0, -theta}) * s;
    m(1, 1) = s;
    return m;
}

inline Mat2 rx2(double phi) { return exp_involution(pauli::X(), phi); }
inline Mat2 rz2(double phi) { return exp_involution(pauli::Z(), -phi); }

/**
 * @brief The gate product R_z(th/2) R_x(pi/4) R_z(-th/2) evaluated
 * with the conventions above. This is the complex conjugate of
 * `hadamard_like_matrix`.
 */
inline Mat2 hadamard_like_composed_conjugate(double theta) {
    return rz2(theta / 2.0) * rx2(std::numbers::pi / 4.0) * rz2(-theta / 2.0);
}

/**
 * @brief Gate sequence realising `hadamard_like_matrix` exactly:
 * R_z(-th/2) R_x(-pi/4) R_z(th/2).
 */
inline Mat2 hadamard_like_composed(double theta) {
    return rz2(-theta / 2.0) * rx2(-std::numbers::pi / 4.0) * rz2(theta / 2.0);
}

struct HadamardLike {
    Operator explicit_form;
    Operator composed_form;
};

inline HadamardLike gate_hadamard_like(Qubit j, double theta) {
    return {embed(hadamard_like_matrix(theta), j),
            embed(hadamard_like_composed(theta), j)};
}

// ---------------------------------------------------------------------------
// Pulse sequences

/// Evolution under a working point for a non-negative duration (ps).
struct Evolve {
    WorkingPoint point;
    double duration = 0.0;
};

/// Instantaneous ideal unitary.
struct IdealGate {
    Operator op;
};

struct PulseSegment {
    std::variant<Evolve, IdealGate> kind;
    std::string label;

    static PulseSegment evolve(WorkingPoint w, double duration,
                               std::string label = {}) {
        if (!(duration >= 0.0)) {
            throw std::invalid_argument("Evolve duration must be >= 0");
        }
        return {Evolve{std::move(w), duration}, std::move(label)};
    }

    static PulseSegment gate(const Operator &op, std::string label) {
        if (!is_unitary(op, 1e-10)) {
            throw std::invalid_argument("IdealGate '" + label +
                                        "' is not unitary");
        }
        return {IdealGate{op}, std::move(label)};
    }
};

/**
 * @brief Segments in chronological order: segments.front() acts first.
 */
struct PulseSequence {
    std::vector<PulseSegment> segments;
    CircuitParams params;

    [[nodiscard]] double total_duration() const {
        double t = 0.0;
        for (const auto &s : segments) {
            if (const auto *e = std::get_if<Evolve>(&s.kind)) {
                t += e->duration;
            }
        }
        return t;
    }
};

inline Operator segment_unitary(const PulseSegment &s, const CircuitParams &p) {
    if (const auto *e = std::get_if<Evolve>(&s.kind)) {
        return propagator_exact(p, e->point, e->duration);
    }
    return std::get<IdealGate>(s.kind).op;
}

/// U = U_n ... U_2 U_1 for chronological segments 1..n.
inline Operator run_sequence(const PulseSequence &seq) {
    Operator u = Operator::identity();
    for (const auto &s : seq.segments) {
        u = segment_unitary(s, seq.params) * u;
    }
    return u;
}

/// Delay U_d(tau) = exp(-i E12 tau szsz) as an Idle evolution.
inline PulseSegment delay(double tau) {
    return PulseSegment::evolve(wp::Idle{}, tau, "U_d");
}

inline PulseSegment ideal_flip(Qubit j) {
    return PulseSegment::gate(embed(pauli::X(), j),
                              "sx" + std::to_string(to_int(j)));
}

/// Physical flip: Decouple(j) evolution of length (2l+1) t0.
inline PulseSegment physical_flip(const CircuitParams &p, Qubit j, int l = 0) {
    return PulseSegment::evolve(wp::Decouple{j}, (2 * l + 1) * flip_time(p, j),
                                "flip" + std::to_string(to_int(j)));
}

/// U_d(tau) sx U_d(tau) sx in reading order, i.e. chronologically sx first.
inline PulseSequence decoupling_identity_sequence(const CircuitParams &p,
                                                  Qubit j, double tau) {
    PulseSequence s;
    s.params = p;
    s.segments = {ideal_flip(j), delay(tau), ideal_flip(j), delay(tau)};
    return s;
}

/// sx U_d(tau) sx U_d(tau) in reading order.
inline PulseSequence decoupling_identity_sequence_reversed(const CircuitParams &p,
                                                           Qubit j, double tau) {
    PulseSequence s;
    s.params = p;
    s.segments = {delay(tau), ideal_flip(j), delay(tau), ideal_flip(j)};
    return s;
}

/**
 * @brief U_d(-pi / 4 E12) R_z^(k)(pi/4) R_z^(j)(pi/4), equal to
 * diag(1, 1, 1, -1) up to a global phase. The negative-time delay is an
 * ideal gate built from its closed form.
 */
inline PulseSequence controlled_z_sequence(const CircuitParams &p) {
    const double quarter = std::numbers::pi / 4.0;
    PulseSequence s;
    s.params = p;
    s.segments = {
        PulseSegment::gate(rz(Qubit::One, quarter), "rz1"),
        PulseSegment::gate(rz(Qubit::Two, quarter), "rz2"),
        PulseSegment::gate(zz_phase(-quarter), "U_d(-pi/4E12)"),
    };
    return s;
}

/**
 * @brief Longest delay between the two flips of a decoupling cycle that
 * fits a total budget: (budget - 2 t_x) / 2 with t_x = (2l + 1) t0.
 */
inline double max_delay_schedule(double budget, int l, double t0) {
    if (l < 0) {
        throw std::invalid_argument("pulse order l must be >= 0");
    }
    const double tx = (2 * l + 1) * t0;
    if (budget < 2.0 * tx) {
        throw std::invalid_argument("budget shorter than the two flip pulses");
    }
    return (budget - 2.0 * tx) / 2.0;
}

inline double max_delay_schedule(double budget, int l, const CircuitParams &p,
                                 Qubit j = Qubit::One) {
    return max_delay_schedule(budget, l, flip_time(p, j));
}

// ---------------------------------------------------------------------------
// Effective versus exact flip probabilities

/// |1_j 0_k> as a state vector.
inline StateVector excited(Qubit j) {
    return j == Qubit::One ? StateVector::basis(1, 0) : StateVector::basis(0, 1);
}

struct FlipProbabilities {
    double approx = 0.0;
    double exact = 0.0;
};

/**
 * @brief Transition |1_j 0_k> -> |0_j 0_k> under the effective rotation and
 * under the closed-form H1 propagator, at tau = eps t / hbar.
 */
inline FlipProbabilities flip_probabilities(const CircuitParams &p, Qubit j,
                                            double tau) {
    const double t = tau * p.hbar / p.eps(j);
    const double z = p.zeta(j);
    const double phi = tau * (1.0 + 2.0 * z * z);
    const StateVector from = excited(j);
    const StateVector to = StateVector::basis(0, 0);
    return {transition_probability(rx(j, phi), from, to),
            transition_probability(closed_form_exact(p, j, t), from, to)};
}

/**
 * @brief Period of a sampled oscillation from crossings of its midline
 * (max + min) / 2, linearly interpolated. sin^2-type signals cross the
 * midline twice per period.
 */
inline double oscillation_period(const std::vector<double> &x,
                                 const std::vector<double> &y) {
    if (x.size() != y.size() || x.size() < 3) {
        throw std::invalid_argument("oscillation_period: bad sample arrays");
    }
    const auto [lo, hi] = std::minmax_element(y.begin(), y.end());
    const double mid = 0.5 * (*lo + *hi);
    std::vector<double> crossings;
    for (std::size_t i = 1; i < y.size(); ++i) {
        const double a = y[i - 1] - mid;
        const double b = y[i] - mid;
        if ((a < 0.0 && b >= 0.0) || (a > 0.0 && b <= 0.0)) {
            crossings.push_back(x[i - 1] + (x[i] - x[i - 1]) * a / (a - b));
        }
    }
    if (crossings.size() < 2) {
        throw std::invalid_argument("oscillation_period: fewer than two crossings");
    }
    const double mean_gap =
        (crossings.back() - crossings.front()) /
        static_cast<double>(crossings.size() - 1);
    return 2.0 * mean_gap;
}

} // namespace ccq
