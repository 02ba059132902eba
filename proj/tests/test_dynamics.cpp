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

#include <cmath>
#include <numbers>
#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "ccq/circuit.hpp"
#include "ccq/dynamics.hpp"
#include "oracles.hpp"

using namespace ccq;
using Catch::Approx;
using std::numbers::pi;

namespace {

// H1 assembled by hand, independent of hamiltonian().
Mat4 h1_reference(double eps, double e12, Qubit j)
{
    const Mat2 x = pauli::X();
    const Mat4 sx = j == Qubit::One ? kron(x, pauli::I()) : kron(pauli::I(), x);
    return cplx{-eps} * sx + cplx{e12} * kron(pauli::Z(), pauli::Z());
}

CircuitParams detuned_params()
{
    CircuitParams p = CircuitParams::symmetric(30.0, 0.25);
    p.flux = {0.45, 0.4};
    p.EC_eff = {250.0, -180.0};
    return p;
}

} // namespace

TEST_CASE("Test H1 propagator against a frozen reference", "[dynamics]")
{
    const CircuitParams p = CircuitParams::dimensionless(0.125);
    const Operator u = propagator_exact(p, wp::Decouple{Qubit::One}, 1.0);
    const cplx a{0.5141530774429538, -0.20802242709351995};
    const cplx b{0.0, 0.83208970837407992};
    CHECK(std::abs(u(0, 0) - a) < 1e-12);
    CHECK(std::abs(u(0, 1) - b) < 1e-12);
    CHECK(std::abs(u(1, 1) - std::conj(a)) < 1e-12);
    CHECK(std::abs(u(3, 3) - a) < 1e-12);
    CHECK(std::abs(u(0, 2)) < 1e-14);
}

TEST_CASE("Test closed-form H1 propagator against the series oracle", "[dynamics]")
{
    for (double zeta : {0.25, 0.125, 0.1, 0.05}) {
        for (Qubit j : {Qubit::One, Qubit::Two}) {
            CircuitParams p = CircuitParams::dimensionless(zeta);
            p.eps_J = {1.0, 1.0};
            const Mat4 h = h1_reference(1.0, p.E12, j);
            for (int i = 0; i <= 120; ++i) {
                const double t = 0.1 * i;
                const Mat4 ref = oracle::expm_taylor(cplx{0.0, -t} * h);
                INFO("zeta=" << zeta << " t=" << t);
                CHECK(max_abs_diff(closed_form_exact(p, j, t), ref) < 1e-8);
                CHECK(max_abs_diff(propagator_exact(p, wp::Decouple{j}, t), ref) < 1e-10);
            }
        }
    }
}

TEST_CASE("Test closed form in physical units", "[dynamics]")
{
    CircuitParams p = CircuitParams::symmetric(30.0, 0.25);
    p.eps_J = {30.0, 24.0};
    for (Qubit j : {Qubit::One, Qubit::Two}) {
        for (double t : {0.0, 5.0, 31.0, 77.7, 400.0}) {
            CHECK(max_abs_diff(closed_form_exact(p, j, t),
                               propagator_exact(p, wp::Decouple{j}, t)) < 1e-10);
        }
    }
    REQUIRE_THROWS_AS(propagator_exact(p, wp::Idle{}, -1.0), std::invalid_argument);
}

TEST_CASE("Test rotation conventions", "[dynamics]")
{
    CHECK(max_abs_diff(rx(Qubit::One, pi / 2), kI * embed(pauli::X(), Qubit::One)) < 1e-15);
    CHECK(max_abs_diff(rz(Qubit::Two, pi / 2), -kI * embed(pauli::Z(), Qubit::Two)) < 1e-15);
    const Mat4 zz = zz_phase(0.3);
    CHECK(std::abs(zz(0, 0) - std::exp(cplx{0.0, -0.3})) < 1e-15);
    CHECK(std::abs(zz(1, 1) - std::exp(cplx{0.0, 0.3})) < 1e-15);
}

TEST_CASE("Test effective rotation timing", "[dynamics]")
{
    const CircuitParams p = CircuitParams::symmetric(30.0, 2.0); // zeta = 1/4
    REQUIRE(p.zeta(Qubit::One) == Approx(0.25));
    CHECK(flip_time(p, Qubit::One) == Approx(30.634575530400024).epsilon(1e-12));
    const auto g = gate_rx_effective(p, Qubit::One, pi / 2);
    CHECK(g.duration == Approx(flip_time(p, Qubit::One)));
    CHECK_FALSE(g.warning.has_value());

    CircuitParams strong = CircuitParams::dimensionless(0.3);
    CHECK(gate_rx_effective(strong, Qubit::One, 1.0).warning.has_value());
    strong = CircuitParams::dimensionless(1.0);
    REQUIRE_THROWS_AS(gate_rx_effective(strong, Qubit::One, 1.0), std::invalid_argument);
}

TEST_CASE("Test transition probabilities", "[dynamics]")
{
    const StateVector s00 = StateVector::basis(0, 0);
    const StateVector s10 = StateVector::basis(1, 0);
    CHECK(transition_probability(rx(Qubit::One, pi / 2), s10, s00) == Approx(1.0));
    CHECK(transition_probability(rx(Qubit::One, pi / 4), s10, s00) == Approx(0.5));
    CHECK(transition_probability(rx(Qubit::Two, pi / 2), s10, s00) == Approx(0.0).margin(1e-15));
    REQUIRE_THROWS_AS(transition_probability(Operator::identity(), StateVector{}, s00),
                      std::invalid_argument);
}

TEST_CASE("Test exact flip probability is bounded by 1 / nu^2", "[dynamics]")
{
    for (double zeta : {0.25, 0.125, 0.1}) {
        const CircuitParams p = CircuitParams::dimensionless(zeta);
        const double nu2 = 1.0 + 4.0 * zeta * zeta;
        double peak = 0.0;
        for (int i = 0; i <= 4000; ++i) {
            const auto pr = flip_probabilities(p, Qubit::One, 12.0 * i / 4000.0);
            CHECK(pr.exact <= 1.0 / nu2 + 1e-14);
            peak = std::max(peak, pr.exact);
        }
        CHECK(peak == Approx(1.0 / nu2).epsilon(1e-5));
    }
}

TEST_CASE("Test far-detuned phase gate against the H2 propagator", "[dynamics]")
{
    const CircuitParams p = detuned_params();
    for (double t : {0.0, 0.7, 3.1, 12.0}) {
        CHECK(max_abs_diff(gate_rz12(p, t), propagator_exact(p, wp::FarDetuned{}, t)) < 1e-12);
    }
}

TEST_CASE("Test refocused phase gate is exact", "[dynamics]")
{
    oracle::Rng rng(17);
    const CircuitParams p = detuned_params();
    for (int trial = 0; trial < 50; ++trial) {
        const double phi = rng.uniform(-pi, pi);
        for (Qubit j : {Qubit::One, Qubit::Two}) {
            const auto g = gate_rz_refocused(p, j, phi);
            CHECK(1.0 - fidelity_up_to_global_phase(g.op, rz(j, phi)) < 1e-12);
            CHECK(max_abs_diff(g.op, rz(j, phi)) < 1e-12);
            CHECK(g.duration >= 0.0);
        }
    }
}

TEST_CASE("Test Hadamard-like gate compositions", "[dynamics]")
{
    oracle::Rng rng(19);
    for (int trial = 0; trial < 20; ++trial) {
        const double theta = rng.uniform(-pi, pi);
        const Mat2 h = hadamard_like_matrix(theta);
        CHECK(unitarity_defect(h) < 1e-15);
        CHECK(max_abs_diff(hadamard_like_composed(theta), h) < 1e-14);
        CHECK(max_abs_diff(hadamard_like_composed_conjugate(theta), conjugate(h)) < 1e-14);
        const auto g = gate_hadamard_like(Qubit::Two, theta);
        CHECK(1.0 - fidelity_up_to_global_phase(g.explicit_form, g.composed_form) < 1e-12);
    }
}

TEST_CASE("Test sequences are applied in chronological order", "[dynamics]")
{
    PulseSequence s;
    s.params = CircuitParams::symmetric(30.0, 0.25);
    const Operator a = rx(Qubit::One, 0.3);
    const Operator b = rz(Qubit::One, 0.5);
    s.segments = {PulseSegment::gate(a, "a"), PulseSegment::gate(b, "b")};
    CHECK(max_abs_diff(run_sequence(s), b * a) < 1e-15);
    CHECK(max_abs_diff(b * a, a * b) > 0.1);

    s.segments.push_back(PulseSegment::evolve(wp::Idle{}, 12.5));
    CHECK(s.total_duration() == 12.5);
    REQUIRE_THROWS_AS(PulseSegment::evolve(wp::Idle{}, -1.0), std::invalid_argument);
    REQUIRE_THROWS_AS(PulseSegment::gate(cplx{2.0} * Operator::identity(), "bad"),
                      std::invalid_argument);
}

TEST_CASE("Test decoupling identity for random delays", "[dynamics]")
{
    oracle::Rng rng(23);
    const CircuitParams p = CircuitParams::symmetric(30.0, 0.5);
    for (int trial = 0; trial < 20; ++trial) {
        const double tau = rng.uniform(0.0, 500.0);
        for (Qubit j : {Qubit::One, Qubit::Two}) {
            const Operator u = run_sequence(decoupling_identity_sequence(p, j, tau));
            const Operator v = run_sequence(decoupling_identity_sequence_reversed(p, j, tau));
            CHECK(max_abs_diff(u, Operator::identity()) < 1e-12);
            CHECK(max_abs_diff(v, Operator::identity()) < 1e-12);
        }
    }
}

TEST_CASE("Test controlled-Z sequence", "[dynamics]")
{
    const Operator u = run_sequence(controlled_z_sequence(CircuitParams::symmetric(30.0, 0.25)));
    const Operator cz = Operator::diagonal({1.0, 1.0, 1.0, -1.0});
    CHECK(1.0 - fidelity_up_to_global_phase(u, cz) < 1e-12);
    const cplx phase = u(0, 0);
    CHECK(max_abs_diff(u, phase * cz) < 1e-12);
}

TEST_CASE("Test physical flips built from Decouple segments", "[dynamics]")
{
    const CircuitParams p = CircuitParams::dimensionless(0.125);
    PulseSequence s;
    s.params = p;
    s.segments = {physical_flip(p, Qubit::One, 0)};
    const Operator u = run_sequence(s);
    CHECK(unitarity_defect(u) < 1e-12);
    // The populations follow |rho|^2 <= 1 / nu^2, so the flip is imperfect.
    const double nu = decouple_nu(p, Qubit::One);
    const double fid = fidelity_up_to_global_phase(rx(Qubit::One, pi / 2), u);
    CHECK(fid <= 1.0 / nu + 1e-12);
    CHECK(fid == Approx(0.9701425001453319).epsilon(1e-6));
}

TEST_CASE("Test maximum delay schedule", "[dynamics]")
{
    CHECK(max_delay_schedule(600.0, 2, 31.0) == Approx(145.0).margin(1e-12));
    CHECK(max_delay_schedule(600.0, 0, 31.0) == Approx(269.0).margin(1e-12));
    const CircuitParams p = CircuitParams::symmetric(30.0, 2.0);
    CHECK(std::abs(max_delay_schedule(600.0, 2, p) - 145.0) < 2.0);
    REQUIRE_THROWS_AS(max_delay_schedule(100.0, 2, 31.0), std::invalid_argument);
    REQUIRE_THROWS_AS(max_delay_schedule(600.0, -1, 31.0), std::invalid_argument);
}

TEST_CASE("Test effective-rotation error shrinks with zeta", "[dynamics]")
{
    double last = 1.0;
    for (double zeta : {0.25, 0.125, 0.1, 0.05}) {
        const CircuitParams p = CircuitParams::dimensionless(zeta);
        double worst = 0.0;
        for (int i = 0; i <= 2000; ++i) {
            const auto pr = flip_probabilities(p, Qubit::One, 12.0 * i / 2000.0);
            worst = std::max(worst, std::abs(pr.approx - pr.exact));
        }
        INFO("zeta=" << zeta);
        CHECK(worst < last);
        last = worst;
    }
}

TEST_CASE("Test oscillation frequencies", "[dynamics]")
{
    for (double zeta : {0.125, 0.1, 0.05}) {
        const CircuitParams p = CircuitParams::dimensionless(zeta);
        std::vector<double> tau, ex, ap;
        for (int i = 0; i <= 6000; ++i) {
            tau.push_back(24.0 * i / 6000.0);
            const auto pr = flip_probabilities(p, Qubit::One, tau.back());
            ex.push_back(pr.exact);
            ap.push_back(pr.approx);
        }
        const double nu = std::sqrt(1.0 + 4.0 * zeta * zeta);
        CHECK(oscillation_period(tau, ex) == Approx(pi / nu).epsilon(1e-3));
        CHECK(oscillation_period(tau, ap) == Approx(pi / (1.0 + 2.0 * zeta * zeta)).epsilon(1e-3));
    }
    REQUIRE_THROWS_AS(oscillation_period({0.0, 1.0}, {0.0, 1.0}), std::invalid_argument);
}
