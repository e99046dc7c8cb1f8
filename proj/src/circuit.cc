// Copyright 2026 The Blindgate Authors
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

#include "blindgate/circuit.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "blindgate/errors.h"
#include "blindgate/gates.h"

namespace blindgate {

namespace {

size_t parse_wire(const std::string &token, size_t line) {
    if (token.empty() || !std::all_of(token.begin(), token.end(), [](unsigned char c) {
            return std::isdigit(c);
        })) {
        throw ParseError(line, "expected a nonnegative qubit index, got '" + token + "'");
    }
    if (token.size() > 3 || std::stoul(token) >= kMaxQubits) {
        throw ParseError(line, "qubit index " + token + " exceeds the " + std::to_string(kMaxQubits) + "-qubit limit");
    }
    return std::stoul(token);
}

}  // namespace

const char *gate_kind_name(GateKind kind) {
    switch (kind) {
        case GateKind::kH:
            return "H";
        case GateKind::kT:
            return "T";
        case GateKind::kCnot:
            return "CNOT";
        case GateKind::kMeasure:
            return "M";
    }
    return "?";
}

Circuit Circuit::parse(std::string_view text) {
    Circuit c;
    std::istringstream in{std::string(text)};
    std::string raw;
    size_t line = 0;
    while (std::getline(in, raw)) {
        line++;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream words(raw);
        std::vector<std::string> tokens;
        for (std::string w; words >> w;) {
            tokens.push_back(w);
        }
        if (tokens.empty()) {
            continue;
        }
        std::string name = tokens[0];
        std::transform(name.begin(), name.end(), name.begin(), [](unsigned char ch) {
            return (char)std::toupper(ch);
        });
        CircuitOp op;
        size_t arity;
        if (name == "H") {
            op.kind = GateKind::kH, arity = 1;
        } else if (name == "T") {
            op.kind = GateKind::kT, arity = 1;
        } else if (name == "CNOT" || name == "CX") {
            op.kind = GateKind::kCnot, arity = 2;
        } else if (name == "M") {
            op.kind = GateKind::kMeasure, arity = 1;
        } else {
            throw ParseError(line, "unknown gate '" + tokens[0] + "'");
        }
        if (tokens.size() != arity + 1) {
            throw ParseError(
                line, name + " takes " + std::to_string(arity) + " qubit" + (arity == 1 ? "" : "s") + ", got " +
                          std::to_string(tokens.size() - 1));
        }
        for (size_t k = 1; k <= arity; k++) {
            op.qubits.push_back(parse_wire(tokens[k], line));
        }
        try {
            c.append(op);
        } catch (const std::invalid_argument &e) {
            throw ParseError(line, e.what());
        }
    }
    return c;
}

Circuit Circuit::from_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw ParseError(0, "cannot open circuit file '" + path + "'");
    }
    std::stringstream buf;
    buf << in.rdbuf();
    return parse(buf.str());
}

Circuit &Circuit::append(const CircuitOp &op) {
    size_t arity = op.kind == GateKind::kCnot ? 2 : 1;
    if (op.qubits.size() != arity) {
        throw std::invalid_argument(std::string(gate_kind_name(op.kind)) + " has the wrong number of qubits");
    }
    if (arity == 2 && op.qubits[0] == op.qubits[1]) {
        throw std::invalid_argument("CNOT control and target must differ");
    }
    for (size_t q : op.qubits) {
        if (q >= kMaxQubits) {
            throw CapacityError("qubit " + std::to_string(q) + " is beyond the qubit limit");
        }
        if (is_measured(q)) {
            throw std::invalid_argument("qubit " + std::to_string(q) + " is used after being measured");
        }
        num_qubits_ = std::max(num_qubits_, q + 1);
    }
    ops_.push_back(op);
    return *this;
}

Circuit &Circuit::h(size_t q) {
    return append({GateKind::kH, {q}});
}
Circuit &Circuit::t(size_t q) {
    return append({GateKind::kT, {q}});
}
Circuit &Circuit::cnot(size_t control, size_t target) {
    return append({GateKind::kCnot, {control, target}});
}
Circuit &Circuit::measure(size_t q) {
    return append({GateKind::kMeasure, {q}});
}

size_t Circuit::gate_count() const {
    return unitary_ops().size();
}

std::vector<CircuitOp> Circuit::unitary_ops() const {
    std::vector<CircuitOp> out;
    for (const auto &op : ops_) {
        if (op.kind != GateKind::kMeasure) {
            out.push_back(op);
        }
    }
    return out;
}

std::vector<size_t> Circuit::measured_wires() const {
    std::vector<size_t> out;
    for (const auto &op : ops_) {
        if (op.kind == GateKind::kMeasure) {
            out.push_back(op.qubits[0]);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Circuit::is_measured(size_t q) const {
    return std::any_of(ops_.begin(), ops_.end(), [&](const CircuitOp &op) {
        return op.kind == GateKind::kMeasure && op.qubits[0] == q;
    });
}

std::string Circuit::str() const {
    std::string out;
    for (const auto &op : ops_) {
        out += gate_kind_name(op.kind);
        for (size_t q : op.qubits) {
            out += " " + std::to_string(q);
        }
        out += "\n";
    }
    return out;
}

StateVector simulate_gates(const Circuit &circuit, StateVector initial) {
    if (initial.num_qubits() < circuit.num_qubits()) {
        throw DimensionError("initial state has fewer qubits than the circuit");
    }
    static const UnitaryMatrix h = gates::h();
    static const UnitaryMatrix t = gates::t();
    static const UnitaryMatrix c = gates::cnot();
    for (const auto &op : circuit.ops()) {
        switch (op.kind) {
            case GateKind::kH:
                initial.apply(h, op.qubits);
                break;
            case GateKind::kT:
                initial.apply(t, op.qubits);
                break;
            case GateKind::kCnot:
                initial.apply(c, op.qubits);
                break;
            case GateKind::kMeasure:
                break;
        }
    }
    return initial;
}

std::vector<double> ideal_distribution(const Circuit &circuit, const StateVector &initial) {
    auto wires = circuit.measured_wires();
    return marginal_distribution(simulate_gates(circuit, initial), wires);
}

Circuit random_circuit(size_t num_qubits, size_t num_gates, Rng &rng) {
    Circuit c(num_qubits);
    for (size_t i = 0; i < num_gates; i++) {
        uint64_t kind = num_qubits >= 2 ? rng.below(3) : rng.below(2);
        size_t a = rng.below(num_qubits);
        if (kind == 0) {
            c.h(a);
        } else if (kind == 1) {
            c.t(a);
        } else {
            size_t b = rng.below(num_qubits - 1);
            c.cnot(a, b >= a ? b + 1 : b);
        }
    }
    return c;
}

}  // namespace blindgate
