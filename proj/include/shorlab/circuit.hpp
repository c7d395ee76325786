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
/**
 * @file
 * Gate-level circuit representation shared by the modexp builders and the
 * simulator backends.
 *
 * Qubit q_i corresponds to bit i of a basis-state index. The counting
 * register is q_0 .. q_{k-1}, the work register q_k .. q_{2k-1}.
 */
#pragma once

#include <json.hpp>

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

namespace shorlab {

using Qubit = std::uint32_t;

enum class GateKind : std::uint8_t { H, X, SWAP, CSWAP, PHASE, CPHASE };

inline constexpr std::size_t kGateKindCount = 6;

std::string_view to_string(GateKind kind);
GateKind gate_kind_from_string(std::string_view name);

/// Number of qubit operands a gate kind takes.
constexpr std::size_t arity(GateKind kind) {
    switch (kind) {
    case GateKind::H:
    case GateKind::X:
    case GateKind::PHASE:
        return 1;
    case GateKind::SWAP:
    case GateKind::CPHASE:
        return 2;
    case GateKind::CSWAP:
        return 3;
    }
    return 0;
}

/**
 * A single gate. Operand order: control(s) first, then targets, i.e.
 * CSWAP(control, a, b) and CPHASE(control, target).
 */
struct Gate {
    GateKind kind{};
    std::array<Qubit, 3> qubits{};
    double angle = 0.0;

    [[nodiscard]] std::span<const Qubit> operands() const { return {qubits.data(), arity(kind)}; }

    static Gate h(Qubit t) { return {GateKind::H, {t, 0, 0}, 0.0}; }
    static Gate x(Qubit t) { return {GateKind::X, {t, 0, 0}, 0.0}; }
    static Gate swap(Qubit a, Qubit b) { return {GateKind::SWAP, {a, b, 0}, 0.0}; }
    static Gate cswap(Qubit c, Qubit a, Qubit b) { return {GateKind::CSWAP, {c, a, b}, 0.0}; }
    static Gate phase(Qubit t, double angle) { return {GateKind::PHASE, {t, 0, 0}, angle}; }
    static Gate cphase(Qubit c, Qubit t, double angle) { return {GateKind::CPHASE, {c, t, 0}, angle}; }

    friend bool operator==(const Gate &, const Gate &) = default;
};

/// Gate tally per kind.
struct GateCounts {
    std::array<std::size_t, kGateKindCount> by_kind{};

    [[nodiscard]] std::size_t operator[](GateKind kind) const { return by_kind[static_cast<std::size_t>(kind)]; }
    [[nodiscard]] std::size_t total() const;

    friend bool operator==(const GateCounts &, const GateCounts &) = default;
};

/// Ordered gate list over a fixed number of qubits.
class Circuit {
  public:
    /// Throws DomainError when width is zero.
    explicit Circuit(std::size_t width);

    [[nodiscard]] std::size_t width() const noexcept { return width_; }
    [[nodiscard]] std::span<const Gate> gates() const noexcept { return gates_; }
    [[nodiscard]] std::size_t size() const noexcept { return gates_.size(); }
    [[nodiscard]] bool empty() const noexcept { return gates_.empty(); }

    /// Validates then appends. Throws ValidationError on a bad index or angle.
    Circuit &append(const Gate &gate);

    /// Appends every gate of other; widths must match.
    Circuit &append(const Circuit &other);

    void reserve(std::size_t n) { gates_.reserve(n); }

    friend bool operator==(const Circuit &, const Circuit &) = default;

  private:
    std::size_t width_;
    std::vector<Gate> gates_;
};

/// Throws ValidationError unless every operand is < width, operands are distinct and the angle is finite.
void validate_gate(const Gate &gate, std::size_t width);

/**
 * Controlled version of a SWAP-only circuit: each SWAP(a, b) becomes
 * CSWAP(control_index, a, b). The result has width max(c.width(), control_index + 1).
 */
Circuit control(const Circuit &c, Qubit control_index);

/// Copies c into a circuit of the given width with every qubit index shifted by offset.
Circuit embed(const Circuit &c, std::size_t width, Qubit offset);

GateCounts gate_count(const Circuit &c);

/// {width, gates: [{kind, qubits: [...], angle?}]}
nlohmann::json to_json(const Circuit &c);
Circuit circuit_from_json(const nlohmann::json &doc);

} // namespace shorlab
