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
 * CHSH test on the plateau state: encode analyser angles with the
 * Hadamard-like gates, measure sz (x) sz, and combine four correlations.
 */

#pragma once

#include <array>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "dynamics.hpp"
#include "entangle.hpp"
#include "qmath.hpp"

namespace ccq {

/// Analyser angles; defaults {-pi/8, 3pi/8} for both qubits.
struct AnalyzerSettings {
    double theta1 = -std::numbers::pi / 8.0;
    double theta1p = 3.0 * std::numbers::pi / 8.0;
    double theta2 = -std::numbers::pi / 8.0;
    double theta2p = 3.0 * std::numbers::pi / 8.0;
};

/// R_1(theta1) (x) R_2(theta2) applied to `s`.
inline StateVector encode(const StateVector &s, double theta1, double theta2) {
    const Mat4 u = kron(hadamard_like_matrix(theta1), hadamard_like_matrix(theta2));
    return (u * s).normalized();
}

/// Whether `s` has the form alpha |00> + beta |11>.
inline bool is_schmidt_diagonal(const StateVector &s, double tol = 1e-8) {
    return std::abs(s[1]) <= tol && std::abs(s[2]) <= tol;
}

/**
 * @brief Coefficients a_mn of R_1 R_2 (alpha |00> + beta |11>), in basis order.
 * a_11 carries the sign that follows from the explicit gate matrices.
 */
inline std::array<cplx, 4> encoded_coefficients(cplx alpha, cplx beta,
                                                double theta1, double theta2) {
    const auto e = [](double a) { return std::exp(cplx{0.0, a}); };
    return {
        (alpha - beta * e(theta1 + theta2)) / 2.0,
        (-kI * alpha * e(-theta1) - kI * beta * e(theta2)) / 2.0,
        (-kI * alpha * e(-theta2) - kI * beta * e(theta1)) / 2.0,
        (beta - alpha * e(-theta1 - theta2)) / 2.0,
    };
}

/// <psi| sz (x) sz |psi>.
inline double correlation_analytic(const StateVector &s) {
    require_normalized(s, "correlation_analytic");
    return std::norm(s[0]) + std::norm(s[3]) - std::norm(s[1]) - std::norm(s[2]);
}

struct ShotCounts {
    std::uint64_t n00 = 0;
    std::uint64_t n10 = 0;
    std::uint64_t n01 = 0;
    std::uint64_t n11 = 0;
    std::uint64_t seed = 0;
    std::uint64_t shots = 0;

    [[nodiscard]] std::uint64_t same() const { return n00 + n11; }
    [[nodiscard]] std::uint64_t diff() const { return n10 + n01; }

    /// (N_same - N_diff) / (N_same + N_diff).
    [[nodiscard]] double correlation() const {
        const auto total = same() + diff();
        if (total == 0) {
            throw std::invalid_argument("no recorded events");
        }
        return (static_cast<double>(same()) - static_cast<double>(diff())) /
               static_cast<double>(total);
    }
};

/// SplitMix64 step; derives independent sub-seeds.
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/**
 * @brief Joint sz measurements of `shots` copies of `s`.
 *
 * Generator: std::mt19937_64 seeded with `seed`; each draw u = (x >> 11) 2^-53
 * selects the first basis index (order |00>,|10>,|01>,|11>) whose cumulative
 * probability exceeds u.
 */
inline ShotCounts sample_outcomes(const StateVector &s, std::uint64_t shots,
                                  std::uint64_t seed) {
    require_normalized(s, "sample_outcomes");
    if (shots == 0) {
        throw std::invalid_argument("shots must be >= 1");
    }
    std::array<double, 4> cdf{};
    double acc = 0.0;
    for (std::size_t i = 0; i < 4; ++i) {
        acc += std::norm(s[i]);
        cdf[i] = acc;
    }
    std::mt19937_64 rng(seed);
    std::array<std::uint64_t, 4> n{};
    for (std::uint64_t i = 0; i < shots; ++i) {
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        std::size_t k = 0;
        while (k < 3 && u >= cdf[k]) {
            ++k;
        }
        ++n[k];
    }
    ShotCounts c;
    c.n00 = n[0];
    c.n10 = n[1];
    c.n01 = n[2];
    c.n11 = n[3];
    c.seed = seed;
    c.shots = shots;
    return c;
}

struct SampledCorrelation {
    ShotCounts counts;
    double value = 0.0;
};

inline SampledCorrelation correlation_sampled(const StateVector &s,
                                              std::uint64_t shots,
                                              std::uint64_t seed) {
    SampledCorrelation r;
    r.counts = sample_outcomes(s, shots, seed);
    r.value = r.counts.correlation();
    return r;
}

/// Binomial standard error of the ratio estimator, sqrt((1 - E^2) / shots).
inline double correlation_standard_error(double e, std::uint64_t shots) {
    return std::sqrt(std::max(0.0, 1.0 - e * e) / static_cast<double>(shots));
}

enum class ChshMode { Analytic, Sampled };

inline std::string to_string(ChshMode m) {
    return m == ChshMode::Analytic ? "analytic" : "sampled";
}

/**
 * How analyser angles relate to the prepared state. `Aligned` first rotates
 * qubit 1 about z so that conj(a_00) a_11 is real and positive, fixing the
 * phase reference of the angles; `Literal` encodes the raw state.
 */
enum class AnalyzerFrame { Aligned, Literal };

/// Local z rotation on qubit 1 making conj(a_00) a_11 real non-negative.
inline StateVector align_phase_frame(const StateVector &s) {
    const cplx c = std::conj(s[0]) * s[3];
    if (std::abs(c) == 0.0) {
        return s;
    }
    return rz(Qubit::One, -std::arg(c) / 2.0) * s;
}

struct ChshResult {
    /// E(th1, th2), E(th1', th2), E(th1, th2'), E(th1', th2').
    std::array<double, 4> correlations{};
    std::array<ShotCounts, 4> counts{};
    double f = 0.0;
    bool violated = false;
    ChshMode mode = ChshMode::Analytic;
    double t_e = 0.0;
    std::uint64_t shots = 0;
    std::uint64_t seed = 0;
    std::vector<std::string> warnings;
};

inline double chsh_value(const std::array<double, 4> &e) {
    return std::abs(e[0] + e[1] + e[2] - e[3]);
}

/// Angle pairs in CHSH order.
inline std::array<std::pair<double, double>, 4> chsh_angle_pairs(const AnalyzerSettings &a) {
    return {{{a.theta1, a.theta2},
             {a.theta1p, a.theta2},
             {a.theta1, a.theta2p},
             {a.theta1p, a.theta2p}}};
}

/**
 * @brief CHSH function of an already prepared state.
 *
 * Sampled mode draws `shots` outcomes per correlation with sub-seed
 * splitmix64(seed + i) for the i-th angle pair.
 */
inline ChshResult chsh_from_state(const StateVector &prepared,
                                  const AnalyzerSettings &settings, ChshMode mode,
                                  AnalyzerFrame frame = AnalyzerFrame::Aligned,
                                  std::uint64_t shots = 0, std::uint64_t seed = 0) {
    require_normalized(prepared, "chsh");
    if (mode == ChshMode::Sampled && shots == 0) {
        throw std::invalid_argument("sampled CHSH needs shots >= 1");
    }
    ChshResult r;
    r.mode = mode;
    if (mode == ChshMode::Sampled) {
        r.shots = shots;
        r.seed = seed;
    }
    if (!is_schmidt_diagonal(prepared)) {
        r.warnings.emplace_back("prepared state is not of the form a|00> + b|11>");
    }
    const StateVector s =
        frame == AnalyzerFrame::Aligned ? align_phase_frame(prepared) : prepared;
    const auto pairs = chsh_angle_pairs(settings);
    for (std::size_t i = 0; i < 4; ++i) {
        const StateVector enc = encode(s, pairs[i].first, pairs[i].second);
        if (mode == ChshMode::Analytic) {
            r.correlations[i] = correlation_analytic(enc);
        } else {
            const auto c = correlation_sampled(enc, shots, splitmix64(seed + i));
            r.counts[i] = c.counts;
            r.correlations[i] = c.value;
        }
    }
    r.f = chsh_value(r.correlations);
    r.violated = r.f > 2.0;
    return r;
}

/**
 * @brief Full protocol: evolve |00> under H3 for t_e, then run CHSH.
 */
inline ChshResult chsh(const CircuitParams &p, double t_e,
                       const AnalyzerSettings &settings, ChshMode mode,
                       AnalyzerFrame frame = AnalyzerFrame::Aligned,
                       std::uint64_t shots = 0, std::uint64_t seed = 0) {
    const StateVector prepared =
        evolve_state(StateVector::basis(0, 0), p, wp::CoResonantBoth{}, t_e);
    ChshResult r = chsh_from_state(prepared, settings, mode, frame, shots, seed);
    r.t_e = t_e;
    if (!near_plateau(p, t_e, 1e-6)) {
        r.warnings.emplace_back("t_e is not a plateau time");
    }
    return r;
}

} // namespace ccq
