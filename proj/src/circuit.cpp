// Copyright 2026 The shor-lab Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
#include "shorlab/circuit.hpp"

#include "shorlab/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace shorlab {

namespace {

constexpr std::array<std::string_view, kGateKindCount> kGateNames{"H", "X", "SWAP", "CSWAP", "PHASE", "CPHASE"};

bool has_angle(GateKind kind) { return kind == GateKind::PHASE || kind == GateKind::CPHASE; }

} // namespace

std::string_view to_string(GateKind kind) { return kGateNames[static_cast<std::size_t>(kind)]; }

GateKind gate_kind_from_string(std::string_view name) {
    const auto it = std::find(kGateNames.begin(), kGateNames.end(), name);
    if (it == kGateNames.end()) {
        throw ValidationError("unknown gate kind '" + std::string(name) + "'");
    }
    return static_cast<GateKind>(it - kGateNames.begin());
}

std::size_t GateCounts::total() const { return std::accumulate(by_kind.begin(), by_kind.end(), std::size_t{0}); }

void validate_gate(const Gate &gate, std::size_t width) {
    const auto ops = gate.operands();
    for (std::size_t i = 0; i < ops.size(); ++i) {
        if (ops[i] >= width) {
            throw ValidationError("gate " + std::string(to_string(gate.kind)) + ": qubit " + std::to_string(ops[i]) +
                                  " out of range for width " + std::to_string(width));
        }
        for (std::size_t j = 0; j < i; ++j) {
            if (ops[i] == ops[j]) {
                throw ValidationError("gate " + std::string(to_string(gate.kind)) + ": duplicate qubit " +
                                      std::to_string(ops[i]));
            }
        }
    }
    if (!std::isfinite(gate.angle)) {
        throw ValidationError("gate " + std::string(to_string(gate.kind)) + ": angle is not finite");
    }
}

Circuit::Circuit(std::size_t width) : width_(width) {
    if (width == 0) {
        throw DomainError("circuit width must be at least 1");
    }
}

Circuit &Circuit::append(const Gate &gate) {
    validate_gate(gate, width_);
    gates_.push_back(gate);
    return *this;
}

Circuit &Circuit::append(const Circuit &other) {
    if (other.width_ != width_) {
        throw ValidationError("cannot compose circuits of width " + std::to_string(width_) + " and " +
                              std::to_string(other.width_));
    }
    gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
    return *this;
}

Circuit control(const Circuit &c, Qubit control_index) {
    Circuit out(std::max<std::size_t>(c.width(), std::size_t{control_index} + 1));
    out.reserve(c.size());
    for (const Gate &g : c.gates()) {
        if (g.kind != GateKind::SWAP) {
            throw UnsupportedGateError("control: only SWAP gates can be controlled, found " +
                                       std::string(to_string(g.kind)));
        }
        out.append(Gate::cswap(control_index, g.qubits[0], g.qubits[1]));
    }
    return out;
}

Circuit embed(const Circuit &c, std::size_t width, Qubit offset) {
    Circuit out(width);
    out.reserve(c.size());
    for (Gate g : c.gates()) {
        for (std::size_t i = 0; i < arity(g.kind); ++i) {
            g.qubits[i] += offset;
        }
        out.append(g);
    }
    return out;
}

GateCounts gate_count(const Circuit &c) {
    GateCounts counts;
    for (const Gate &g : c.gates()) {
        ++counts.by_kind[static_cast<std::size_t>(g.kind)];
    }
    return counts;
}

nlohmann::json to_json(const Circuit &c) {
    nlohmann::json gates = nlohmann::json::array();
    for (const Gate &g : c.gates()) {
        nlohmann::json entry{{"kind", to_string(g.kind)}};
        const auto ops = g.operands();
        entry["qubits"] = std::vector<Qubit>(ops.begin(), ops.end());
        if (has_angle(g.kind)) {
            entry["angle"] = g.angle;
        }
        gates.push_back(std::move(entry));
    }
    return {{"width", c.width()}, {"gates", std::move(gates)}};
}

Circuit circuit_from_json(const nlohmann::json &doc) {
    Circuit c(doc.at("width").get<std::size_t>());
    for (const auto &entry : doc.at("gates")) {
        Gate g;
        g.kind = gate_kind_from_string(entry.at("kind").get<std::string>());
        const auto qubits = entry.at("qubits").get<std::vector<Qubit>>();
        if (qubits.size() != arity(g.kind)) {
            throw ValidationError("gate " + std::string(to_string(g.kind)) + " expects " +
                                  std::to_string(arity(g.kind)) + " qubits");
        }
        std::copy(qubits.begin(), qubits.end(), g.qubits.begin());
        if (has_angle(g.kind)) {
            g.angle = entry.at("angle").get<double>();
        }
        c.append(g);
    }
    return c;
}

} // namespace shorlab
