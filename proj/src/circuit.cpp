// Copyright 2026 The qwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwalk/circuit.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <optional>
#include <sstream>

namespace qwalk {

bool Instruction::is_cnot() const {
    return gate.kind == GateKind::PauliX && controls.size() == 1 &&
           controls[0].polarity == Polarity::Positive;
}

bool Instruction::has_negative_control() const {
    return std::any_of(controls.begin(), controls.end(),
                       [](const Control &c) { return c.polarity == Polarity::Negative; });
}

void validate_instruction(const Instruction &instr, size_t width) {
    if (instr.target >= width) {
        throw std::invalid_argument("target qubit " + std::to_string(instr.target) +
                                    " out of range for width " + std::to_string(width));
    }
    if (!instr.controls.empty() && instr.gate.kind != GateKind::PauliX) {
        throw std::invalid_argument("only X may carry controls");
    }
    for (size_t i = 0; i < instr.controls.size(); i++) {
        size_t q = instr.controls[i].qubit;
        if (q >= width) {
            throw std::invalid_argument("control qubit " + std::to_string(q) +
                                        " out of range for width " + std::to_string(width));
        }
        if (q == instr.target) {
            throw std::invalid_argument("qubit " + std::to_string(q) +
                                        " is both control and target");
        }
        for (size_t j = 0; j < i; j++) {
            if (instr.controls[j].qubit == q) {
                throw std::invalid_argument("duplicate control qubit " + std::to_string(q));
            }
        }
    }
}

Circuit::Circuit(size_t width) : width_(width) {
    if (width == 0) {
        throw std::invalid_argument("circuit width must be positive");
    }
}

Circuit::Circuit(size_t width, std::vector<Instruction> instructions) : Circuit(width) {
    for (const auto &instr : instructions) {
        validate_instruction(instr, width_);
    }
    instructions_ = std::move(instructions);
}

void Circuit::append(Instruction instr) {
    validate_instruction(instr, width_);
    instructions_.push_back(std::move(instr));
}

void Circuit::append(const Circuit &other) {
    if (other.width_ != width_) {
        throw std::invalid_argument("cannot append circuits of different widths");
    }
    instructions_.insert(instructions_.end(), other.instructions_.begin(),
                         other.instructions_.end());
}

Circuit Circuit::inverse() const {
    Circuit out(width_);
    out.instructions_.reserve(instructions_.size());
    for (auto it = instructions_.rbegin(); it != instructions_.rend(); ++it) {
        Instruction inv = *it;
        inv.gate = qwalk::inverse(it->gate);
        out.instructions_.push_back(std::move(inv));
    }
    return out;
}

ParseError::ParseError(size_t line, const std::string &what)
    : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            i++;
        }
        size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            i++;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

size_t parse_index(std::string_view tok, size_t line) {
    size_t value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size()) {
        throw ParseError(line, "expected a qubit index, got '" + std::string(tok) + "'");
    }
    return value;
}

double parse_angle(std::string_view tok, size_t line) {
    double value = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    if (ec != std::errc{} || ptr != tok.data() + tok.size() || !std::isfinite(value)) {
        throw ParseError(line, "expected an angle in radians, got '" + std::string(tok) + "'");
    }
    return value;
}

Instruction parse_instruction(const std::vector<std::string_view> &toks, size_t line) {
    std::string_view name = toks[0];
    size_t nargs = toks.size() - 1;
    if (name == "cnot") {
        if (nargs != 2) {
            throw ParseError(line, "cnot takes 2 arguments: cnot <control> <target>");
        }
        return Instruction::cnot(parse_index(toks[1], line), parse_index(toks[2], line));
    }
    if (name == "mcx") {
        if (nargs < 2) {
            throw ParseError(line, "mcx needs at least one control and a target");
        }
        std::vector<Control> controls;
        for (size_t i = 1; i < toks.size() - 1; i++) {
            std::string_view tok = toks[i];
            auto colon = tok.find(':');
            if (colon == std::string_view::npos || colon + 2 != tok.size() ||
                (tok.back() != '+' && tok.back() != '-')) {
                throw ParseError(line, "mcx control must look like <index>:+ or <index>:-, got '" +
                                           std::string(tok) + "'");
            }
            controls.push_back({parse_index(tok.substr(0, colon), line),
                                tok.back() == '+' ? Polarity::Positive : Polarity::Negative});
        }
        return Instruction::mcx(std::move(controls), parse_index(toks.back(), line));
    }
    auto kind = kind_from_mnemonic(name);
    if (!kind) {
        throw ParseError(line, "unknown gate '" + std::string(name) + "'");
    }
    size_t want = param_count(*kind) + 1;
    if (nargs != want) {
        throw ParseError(line, std::string(name) + " takes " + std::to_string(want) +
                                   " argument(s), got " + std::to_string(nargs));
    }
    std::vector<double> angles;
    for (size_t i = 2; i < toks.size(); i++) {
        angles.push_back(parse_angle(toks[i], line));
    }
    return Instruction::single(Gate::make(*kind, angles), parse_index(toks[1], line));
}

std::string format_angle(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace

Circuit parse_qwc(std::string_view text) {
    std::optional<Circuit> circuit;
    size_t line_no = 0;
    size_t pos = 0;
    while (pos <= text.size()) {
        size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) {
            nl = text.size();
        }
        std::string_view line = text.substr(pos, nl - pos);
        pos = nl + 1;
        line_no++;

        auto toks = split_ws(line);
        if (toks.empty() || toks[0].front() == '#') {
            continue;
        }
        if (!circuit) {
            if (toks[0] != "qubits" || toks.size() != 2) {
                throw ParseError(line_no, "expected header 'qubits <count>'");
            }
            size_t width = parse_index(toks[1], line_no);
            if (width == 0) {
                throw ParseError(line_no, "qubit count must be positive");
            }
            circuit.emplace(width);
            continue;
        }
        Instruction instr = parse_instruction(toks, line_no);
        try {
            circuit->append(std::move(instr));
        } catch (const std::invalid_argument &e) {
            throw ParseError(line_no, e.what());
        }
    }
    if (!circuit) {
        throw ParseError(line_no, "missing header 'qubits <count>'");
    }
    return *std::move(circuit);
}

std::string emit_qwc(const Circuit &c) {
    std::ostringstream out;
    out << "qubits " << c.width() << "\n";
    for (const auto &instr : c.instructions()) {
        if (instr.is_cnot()) {
            out << "cnot " << instr.controls[0].qubit << " " << instr.target << "\n";
            continue;
        }
        if (!instr.controls.empty()) {
            out << "mcx";
            for (const auto &ctl : instr.controls) {
                out << " " << ctl.qubit << (ctl.polarity == Polarity::Positive ? ":+" : ":-");
            }
            out << " " << instr.target << "\n";
            continue;
        }
        out << mnemonic(instr.gate.kind) << " " << instr.target;
        for (double a : instr.gate.angles()) {
            out << " " << format_angle(a);
        }
        out << "\n";
    }
    return out.str();
}

Matrix embed_instruction(const Instruction &instr, size_t width) {
    validate_instruction(instr, width);
    if (width > kMaxUnitaryQubits) {
        throw CapacityError("full unitary limited to " + std::to_string(kMaxUnitaryQubits) +
                            " qubits, circuit has " + std::to_string(width));
    }
    if (instr.controls.empty()) {
        size_t q = instr.target;
        Matrix high = Matrix::identity(size_t{1} << (width - 1 - q));
        Matrix low = Matrix::identity(size_t{1} << q);
        return kron(high, kron(gate_matrix(instr.gate), low));
    }
    size_t dim = size_t{1} << width;
    size_t mask = 0;
    size_t fire = 0;
    for (const auto &ctl : instr.controls) {
        mask |= size_t{1} << ctl.qubit;
        if (ctl.polarity == Polarity::Positive) {
            fire |= size_t{1} << ctl.qubit;
        }
    }
    Matrix m(dim);
    for (size_t col = 0; col < dim; col++) {
        size_t row = (col & mask) == fire ? col ^ (size_t{1} << instr.target) : col;
        m(row, col) = 1;
    }
    return m;
}

Matrix circuit_unitary(const Circuit &c) {
    if (c.width() > kMaxUnitaryQubits) {
        throw CapacityError("full unitary limited to " + std::to_string(kMaxUnitaryQubits) +
                            " qubits, circuit has " + std::to_string(c.width()));
    }
    Matrix u = Matrix::identity(size_t{1} << c.width());
    for (const auto &instr : c.instructions()) {
        u = embed_instruction(instr, c.width()) * u;
    }
    return u;
}

void apply_single_qubit(std::span<Complex> amps, size_t qubit, const Matrix &g) {
    size_t bit = size_t{1} << qubit;
    Complex g00 = g(0, 0), g01 = g(0, 1), g10 = g(1, 0), g11 = g(1, 1);
    for (size_t base = 0; base < amps.size(); base += 2 * bit) {
        for (size_t i = base; i < base + bit; i++) {
            Complex a0 = amps[i];
            Complex a1 = amps[i | bit];
            amps[i] = g00 * a0 + g01 * a1;
            amps[i | bit] = g10 * a0 + g11 * a1;
        }
    }
}

void apply_instruction(StateVector &state, const Instruction &instr) {
    validate_instruction(instr, state.num_qubits());
    auto amps = state.amps();
    if (instr.controls.empty()) {
        apply_single_qubit(amps, instr.target, gate_matrix(instr.gate));
        return;
    }
    size_t mask = 0;
    size_t fire = 0;
    for (const auto &ctl : instr.controls) {
        mask |= size_t{1} << ctl.qubit;
        if (ctl.polarity == Polarity::Positive) {
            fire |= size_t{1} << ctl.qubit;
        }
    }
    size_t tbit = size_t{1} << instr.target;
    for (size_t i = 0; i < amps.size(); i++) {
        if ((i & tbit) == 0 && (i & mask) == fire) {
            std::swap(amps[i], amps[i | tbit]);
        }
    }
}

StateVector simulate(const Circuit &c, const StateVector &input) {
    if (input.num_qubits() != c.width()) {
        throw std::invalid_argument("simulate: state has " + std::to_string(input.num_qubits()) +
                                    " qubits, circuit has " + std::to_string(c.width()));
    }
    StateVector state = input;
    for (const auto &instr : c.instructions()) {
        apply_instruction(state, instr);
    }
    return state;
}

GateCounts count_gates(const Circuit &c) {
    GateCounts counts;
    for (const auto &instr : c.instructions()) {
        switch (instr.controls.size()) {
            case 0:
                counts.single_qubit++;
                break;
            case 1:
                counts.cnot++;
                break;
            default:
                counts.mcx_by_arity[instr.controls.size()]++;
        }
    }
    return counts;
}

}  // namespace qwalk
