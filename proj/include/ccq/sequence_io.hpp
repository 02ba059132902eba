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
 * Plain-text pulse programs, one segment per line:
 *
 *   evolve <working_point> <qubit|both> <duration_ps>
 *   gate   <name>          <qubit|both> <angle_rad>
 *
 * working_point: decouple (qubit 1|2), far_detuned, coresonant, idle (both).
 * gate names: x (ideal sx, angle ignored), rx = exp(i a sx), rz = exp(-i a sz),
 * h = Hadamard-like R(a), zz = exp(-i a szsz) (both).
 * '#' starts a comment; blank lines are skipped.
 */

#pragma once

#include <cmath>
#include <iomanip>
#include <istream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "dynamics.hpp"

namespace ccq {

class SequenceParseError : public std::runtime_error {
  public:
    SequenceParseError(std::size_t line, const std::string &msg)
        : std::runtime_error("line " + std::to_string(line) + ": " + msg),
          line_(line) {}
    [[nodiscard]] std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

struct SegmentRecord {
    enum class Kind { Evolve, Gate };
    Kind kind = Kind::Evolve;
    std::string name; ///< working point or gate name
    int qubit = 0;    ///< 1, 2, or 0 for both
    double value = 0.0; ///< duration (ps) or angle (rad)

    bool operator==(const SegmentRecord &) const = default;
};

namespace detail {

inline bool is_evolve_name(const std::string &n) {
    return n == "decouple" || n == "far_detuned" || n == "coresonant" ||
           n == "idle";
}

inline bool is_gate_name(const std::string &n) {
    return n == "x" || n == "rx" || n == "rz" || n == "h" || n == "zz";
}

inline bool wants_single_qubit(const SegmentRecord &r) {
    if (r.kind == SegmentRecord::Kind::Evolve) {
        return r.name == "decouple";
    }
    return r.name != "zz";
}

inline void check_record(const SegmentRecord &r, std::size_t line) {
    if (r.kind == SegmentRecord::Kind::Evolve && !is_evolve_name(r.name)) {
        throw SequenceParseError(line, "unknown working point '" + r.name + "'");
    }
    if (r.kind == SegmentRecord::Kind::Gate && !is_gate_name(r.name)) {
        throw SequenceParseError(line, "unknown gate '" + r.name + "'");
    }
    if (wants_single_qubit(r) && r.qubit == 0) {
        throw SequenceParseError(line, "'" + r.name + "' needs qubit 1 or 2");
    }
    if (!wants_single_qubit(r) && r.qubit != 0) {
        throw SequenceParseError(line, "'" + r.name + "' acts on both qubits");
    }
    if (!std::isfinite(r.value)) {
        throw SequenceParseError(line, "value is not finite");
    }
    if (r.kind == SegmentRecord::Kind::Evolve && r.value < 0.0) {
        throw SequenceParseError(line, "negative duration");
    }
}

} // namespace detail

inline std::vector<SegmentRecord> parse_sequence(std::istream &in) {
    std::vector<SegmentRecord> out;
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (const auto hash = raw.find('#'); hash != std::string::npos) {
            raw.erase(hash);
        }
        std::istringstream ls(raw);
        std::string kind;
        if (!(ls >> kind)) {
            continue;
        }
        SegmentRecord r;
        if (kind == "evolve") {
            r.kind = SegmentRecord::Kind::Evolve;
        } else if (kind == "gate") {
            r.kind = SegmentRecord::Kind::Gate;
        } else {
            throw SequenceParseError(line_no, "expected 'evolve' or 'gate', got '" +
                                                  kind + "'");
        }
        std::string qubit;
        std::string value;
        if (!(ls >> r.name >> qubit >> value)) {
            throw SequenceParseError(line_no, "expected 4 fields");
        }
        std::string extra;
        if (ls >> extra) {
            throw SequenceParseError(line_no, "trailing field '" + extra + "'");
        }
        if (qubit == "both") {
            r.qubit = 0;
        } else if (qubit == "1" || qubit == "2") {
            r.qubit = qubit[0] - '0';
        } else {
            throw SequenceParseError(line_no, "qubit must be 1, 2 or both");
        }
        try {
            std::size_t used = 0;
            r.value = std::stod(value, &used);
            if (used != value.size()) {
                throw std::invalid_argument(value);
            }
        } catch (const std::exception &) {
            throw SequenceParseError(line_no, "bad number '" + value + "'");
        }
        detail::check_record(r, line_no);
        out.push_back(std::move(r));
    }
    return out;
}

inline std::vector<SegmentRecord> parse_sequence(const std::string &text) {
    std::istringstream in(text);
    return parse_sequence(in);
}

inline std::string format_sequence(const std::vector<SegmentRecord> &records) {
    std::ostringstream os;
    os << std::setprecision(std::numeric_limits<double>::max_digits10);
    for (const auto &r : records) {
        os << (r.kind == SegmentRecord::Kind::Evolve ? "evolve " : "gate ")
           << r.name << ' ' << (r.qubit == 0 ? std::string("both") : std::to_string(r.qubit))
           << ' ' << r.value << '\n';
    }
    return os.str();
}

inline PulseSegment to_segment(const SegmentRecord &r) {
    if (r.kind == SegmentRecord::Kind::Evolve) {
        WorkingPoint w = wp::Idle{};
        if (r.name == "decouple") {
            w = wp::Decouple{qubit_from_int(r.qubit)};
        } else if (r.name == "far_detuned") {
            w = wp::FarDetuned{};
        } else if (r.name == "coresonant") {
            w = wp::CoResonantBoth{};
        }
        return PulseSegment::evolve(w, r.value, r.name);
    }
    if (r.name == "zz") {
        return PulseSegment::gate(zz_phase(r.value), "zz");
    }
    const Qubit q = qubit_from_int(r.qubit);
    const std::string label = r.name + std::to_string(r.qubit);
    if (r.name == "x") {
        return PulseSegment::gate(embed(pauli::X(), q), label);
    }
    if (r.name == "rx") {
        return PulseSegment::gate(rx(q, r.value), label);
    }
    if (r.name == "rz") {
        return PulseSegment::gate(rz(q, r.value), label);
    }
    return PulseSegment::gate(embed(hadamard_like_matrix(r.value), q), label);
}

inline PulseSequence to_sequence(const std::vector<SegmentRecord> &records,
                                 const CircuitParams &p) {
    PulseSequence s;
    s.params = p;
    for (const auto &r : records) {
        s.segments.push_back(to_segment(r));
    }
    return s;
}

} // namespace ccq
