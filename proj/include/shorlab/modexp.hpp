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
 * Builders for the controlled modular-multiplication layer of the Shor
 * circuit, plus a symbolic evaluator for permutation circuits.
 *
 * Both builders emit SWAP-only circuits over the k-qubit work register;
 * the pipeline embeds them at offset k and applies control().
 */
#pragma once

#include "shorlab/circuit.hpp"
#include "shorlab/numtheory.hpp"

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace shorlab {

/// How the classical multiplier for control qubit b is derived.
enum class ExponentConvention {
    /// m = 2^(2^b) mod N, matching the 2^b-fold repetition of the swap cascade.
    IteratedSquaring,
    /// m = 2^b mod N.
    Literal,
};

std::string_view to_string(ExponentConvention conv);
ExponentConvention exponent_convention_from_string(std::string_view name);

inline constexpr std::size_t kDefaultGateBudget = std::size_t{1} << 24;

/// Result of the hybrid builder.
struct ModexpCircuit {
    Circuit circuit;
    /// Classically computed multiplier, already reduced mod N.
    BigInt multiplier;
    /// True when the multiplier was not a usable power of two and the cascade was emitted instead.
    bool fallback = false;
};

/**
 * Swap cascade: 2^b repetitions of SWAP(k-i-2, k-i-1) for i = 0 .. k-2.
 *
 * Each repetition is a one-position cyclic left rotation of the k work bits.
 * Throws CapacityError when 2^b * (k - 1) exceeds gate_budget.
 */
Circuit build_sota(std::uint32_t b, std::size_t k, std::size_t gate_budget = kDefaultGateBudget);

BigInt proposed_multiplier(std::uint32_t b, const BigInt &n, ExponentConvention conv);

/**
 * Hybrid builder. With m the classical multiplier:
 *   m == 1              -> empty circuit
 *   m == 2^i, 1<=i<=k-2 -> SWAP(0, i)
 *   otherwise           -> build_sota(b, k), flagged as fallback
 */
ModexpCircuit build_proposed(std::uint32_t b, std::size_t k, const BigInt &n,
                             ExponentConvention conv = ExponentConvention::IteratedSquaring,
                             std::size_t gate_budget = kDefaultGateBudget);

/// Total swaps in a full cascade layer over b = 0 .. k-1, i.e. (2^k - 1)(k - 1).
BigInt sota_layer_swap_count(std::size_t k);

/**
 * Basis-state action of a SWAP/CSWAP/X circuit, evaluated without amplitudes.
 *
 * SWAP-only circuits are compressed into a single wire permutation so that
 * evaluation costs O(width) regardless of gate count.
 */
class BasisPermutation {
  public:
    /// Throws UnsupportedGateError on H/PHASE/CPHASE; width must be <= 64.
    explicit BasisPermutation(const Circuit &c);

    [[nodiscard]] std::uint64_t operator()(std::uint64_t x) const;
    [[nodiscard]] std::size_t width() const noexcept { return width_; }

  private:
    std::size_t width_;
    // Set when every gate is a SWAP: destination bit of each source bit.
    std::optional<std::vector<std::uint32_t>> wire_map_;
    std::vector<Gate> gates_;
};

/// Image of every basis index 0 .. 2^width - 1 under c. Requires width <= 20.
std::vector<std::uint64_t> effective_permutation(const Circuit &c);

} // namespace shorlab
