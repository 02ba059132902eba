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

#include <numbers>

#include <catch2/catch_amalgamated.hpp>

#include "ccq/sequence_io.hpp"
#include "oracles.hpp"

using namespace ccq;

TEST_CASE("Test parsing a pulse program", "[sequence_io]")
{
    const std::string text = R"(# decoupling cycle
gate x 1 0
evolve idle both 120.5   # wait
gate x 1 0

evolve idle both 120.5
gate zz both -0.785398
evolve decouple 2 30.6
)";
    const auto recs = parse_sequence(text);
    REQUIRE(recs.size() == 6);
    CHECK(recs[0] == SegmentRecord{SegmentRecord::Kind::Gate, "x", 1, 0.0});
    CHECK(recs[1] == SegmentRecord{SegmentRecord::Kind::Evolve, "idle", 0, 120.5});
    CHECK(recs[4].value == -0.785398);
    CHECK(recs[5].qubit == 2);

    const PulseSequence seq = to_sequence(recs, CircuitParams::symmetric(30.0, 0.25));
    CHECK(seq.total_duration() == 120.5 * 2 + 30.6);
    CHECK(unitarity_defect(run_sequence(seq)) < 1e-12);
}

TEST_CASE("Test parse errors carry line numbers", "[sequence_io]")
{
    const auto line_of = [](const std::string &text) -> std::size_t {
        try {
            parse_sequence(text);
        } catch (const SequenceParseError &e) {
            return e.line();
        }
        return 0;
    };
    CHECK(line_of("gate x 1 0\nwait 3\n") == 2);
    CHECK(line_of("\n\nevolve idle both\n") == 3);
    CHECK(line_of("evolve idle both -1\n") == 1);
    CHECK(line_of("evolve decouple both 1\n") == 1);
    CHECK(line_of("gate zz 1 0.3\n") == 1);
    CHECK(line_of("gate y 1 0.3\n") == 1);
    CHECK(line_of("gate rx 3 0.3\n") == 1);
    CHECK(line_of("gate rx 1 0.3x\n") == 1);
    CHECK(line_of("gate rx 1 0.3 extra\n") == 1);
    CHECK(line_of("evolve warp both 1\n") == 1);
    CHECK(line_of("gate rx 1 nan\n") == 1);
    CHECK(line_of("# only a comment\n") == 0);
}

TEST_CASE("Test format and parse round trip", "[sequence_io]")
{
    oracle::Rng rng(59);
    const char *evolve_names[] = {"decouple", "far_detuned", "coresonant", "idle"};
    const char *gate_names[] = {"x", "rx", "rz", "h", "zz"};
    for (int trial = 0; trial < 100; ++trial) {
        std::vector<SegmentRecord> recs;
        const int n = 1 + static_cast<int>(rng.uniform(0.0, 8.0));
        for (int i = 0; i < n; ++i) {
            SegmentRecord r;
            if (rng.uniform() < 0.5) {
                r.kind = SegmentRecord::Kind::Evolve;
                r.name = evolve_names[static_cast<int>(rng.uniform(0.0, 4.0))];
                r.value = rng.uniform(0.0, 500.0);
            } else {
                r.kind = SegmentRecord::Kind::Gate;
                r.name = gate_names[static_cast<int>(rng.uniform(0.0, 5.0))];
                r.value = rng.uniform(-10.0, 10.0);
            }
            const bool single = r.kind == SegmentRecord::Kind::Evolve ? r.name == "decouple"
                                                                      : r.name != "zz";
            r.qubit = single ? (rng.uniform() < 0.5 ? 1 : 2) : 0;
            recs.push_back(r);
        }
        CHECK(parse_sequence(format_sequence(recs)) == recs);
    }
}

TEST_CASE("Test gate records map to operators", "[sequence_io]")
{
    const double a = 0.37;
    const auto op = [](const SegmentRecord &r) {
        return std::get<IdealGate>(to_segment(r).kind).op;
    };
    using K = SegmentRecord::Kind;
    CHECK(max_abs_diff(op({K::Gate, "rx", 2, a}), rx(Qubit::Two, a)) == 0.0);
    CHECK(max_abs_diff(op({K::Gate, "rz", 1, a}), rz(Qubit::One, a)) == 0.0);
    CHECK(max_abs_diff(op({K::Gate, "zz", 0, a}), zz_phase(a)) == 0.0);
    CHECK(max_abs_diff(op({K::Gate, "x", 1, 0.0}), embed(pauli::X(), Qubit::One)) == 0.0);
    CHECK(max_abs_diff(op({K::Gate, "h", 1, a}), embed(hadamard_like_matrix(a), Qubit::One)) ==
          0.0);
}
