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
 * Dense statevector backend, inverse QFT construction, measurement
 * sampling and the grouped-FFT exact distribution used for large
 * counting registers.
 */
#pragma once

#include "shorlab/circuit.hpp"

#include <json.hpp>

#include <complex>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace shorlab {

using Amplitude = std::complex<double>;

inline constexpr std::uint64_t kDefaultMemoryBudget = std::uint64_t{4} << 30;

/// Contiguous qubits [first, first + count).
struct QubitRange {
    Qubit first = 0;
    std::size_t count = 0;
};

/// 2^n amplitudes; bit i of an index is qubit q_i.
class StateVector {
  public:
    [[nodiscard]] std::size_t num_qubits() const noexcept { return num_qubits_; }
    [[nodiscard]] std::span<const Amplitude> amplitudes() const noexcept { return amplitudes_; }
    [[nodiscard]] std::span<Amplitude> amplitudes() noexcept { return amplitudes_; }
    [[nodiscard]] double norm() const;

  private:
    friend StateVector init_state(std::size_t n, std::uint64_t memory_budget);
    StateVector(std::size_t n, std::vector<Amplitude> amplitudes)
        : num_qubits_(n), amplitudes_(std::move(amplitudes)) {}

    std::size_t num_qubits_;
    std::vector<Amplitude> amplitudes_;
};

/// Bytes needed for an n-qubit dense state.
std::uint64_t dense_state_bytes(std::size_t n);

/// |0...0> on n qubits. Throws CapacityError when 2^n amplitudes exceed memory_budget.
StateVector init_state(std::size_t n, std::uint64_t memory_budget = kDefaultMemoryBudget);

/// Applies c to state in gate order. Throws ValidationError on width mismatch.
void apply(StateVector &state, const Circuit &c);

/// Single-gate kernel; the gate must already be valid for the state width.
void apply_gate(StateVector &state, const Gate &gate);

/**
 * Inverse QFT on qubits offset .. offset+k-1 inside a circuit of the given width.
 * Reversal swaps first, then for each qubit j: CPHASE(m, j, -pi/2^(j-m)) for m < j, then H(j).
 */
Circuit iqft_circuit(std::size_t k, Qubit offset = 0, std::size_t width = 0);

/// Exact marginal distribution of register, tracing out every other qubit.
std::vector<double> marginal_distribution(const StateVector &state, QubitRange reg);

/// Measurement counts for one sampling run over a register.
struct Histogram {
    std::size_t register_width = 0;
    std::uint64_t shots = 0;
    /// Outcome value -> count. Only observed outcomes are present.
    std::map<std::uint64_t, std::uint64_t> counts;

    /// Outcome rendered MSB-leftmost with register_width characters.
    [[nodiscard]] std::string bitstring(std::uint64_t outcome) const;

    friend bool operator==(const Histogram &, const Histogram &) = default;
};

/// Draws shots samples from probabilities; deterministic for a fixed seed.
Histogram sample(std::span<const double> probabilities, std::size_t register_width, std::uint64_t shots,
                 std::uint64_t seed);

/// Samples the register's marginal. Throws ValidationError on an empty or out-of-range register.
Histogram sample(const StateVector &state, QubitRange reg, std::uint64_t shots, std::uint64_t seed);

/// CSV with header bitstring,count,probability; rows in ascending outcome order.
std::string histogram_to_csv(const Histogram &h);
Histogram histogram_from_csv(const std::string &text);
nlohmann::json histogram_to_json(const Histogram &h);

/**
 * Exact counting-register distribution after the inverse QFT for the state
 * 2^{-k/2} sum_i |i>|f(i)>, without building the 2^{2k} joint state.
 *
 * Indices are grouped by label f(i); each group contributes the squared
 * magnitude of the DFT of its indicator vector. Throws CapacityError when
 * the working set for 2^k outcomes exceeds memory_budget.
 */
std::vector<double> exact_distribution_fast(std::size_t k, const std::function<std::uint64_t(std::uint64_t)> &work_map,
                                            std::uint64_t memory_budget = kDefaultMemoryBudget);

/// Bytes used by exact_distribution_fast for a k-qubit counting register.
std::uint64_t fast_backend_bytes(std::size_t k);

} // namespace shorlab
