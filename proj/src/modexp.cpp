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
#include "shorlab/modexp.hpp"

#include "shorlab/errors.hpp"

#include <numeric>
#include <string>

namespace shorlab {

namespace {

constexpr std::size_t kMaxEffectivePermutationWidth = 20;

std::uint64_t swap_bits(std::uint64_t x, Qubit a, Qubit b) {
    const std::uint64_t diff = ((x >> a) ^ (x >> b)) & 1U;
    return x ^ ((diff << a) | (diff << b));
}

} // namespace

std::string_view to_string(ExponentConvention conv) {
    return conv == ExponentConvention::IteratedSquaring ? "squaring" : "literal";
}

ExponentConvention exponent_convention_from_string(std::string_view name) {
    if (name == "squaring") {
        return ExponentConvention::IteratedSquaring;
    }
    if (name == "literal") {
        return ExponentConvention::Literal;
    }
    throw ValidationError("unknown exponent convention '" + std::string(name) + "'");
}

Circuit build_sota(std::uint32_t b, std::size_t k, std::size_t gate_budget) {
    if (k < 2) {
        throw DomainError("build_sota: work register needs at least 2 qubits");
    }
    if (b >= 63 || (std::uint64_t{1} << b) > gate_budget / (k - 1)) {
        throw CapacityError("build_sota: 2^" + std::to_string(b) + " * " + std::to_string(k - 1) +
                            " swaps exceed the gate budget of " + std::to_string(gate_budget));
    }
    const std::uint64_t repetitions = std::uint64_t{1} << b;
    Circuit q(k);
    q.reserve(repetitions * (k - 1));
    for (std::uint64_t iteration = 0; iteration < repetitions; ++iteration) {
        for (std::size_t i = 0; i + 1 < k; ++i) {
            q.append(Gate::swap(static_cast<Qubit>(k - i - 2), static_cast<Qubit>(k - i - 1)));
        }
    }
    return q;
}

BigInt proposed_multiplier(std::uint32_t b, const BigInt &n, ExponentConvention conv) {
    BigInt exponent;
    if (conv == ExponentConvention::IteratedSquaring) {
        mpz_ui_pow_ui(exponent.get_mpz_t(), 2, b);
    } else {
        exponent = b;
    }
    return mod_pow(2, exponent, n);
}

ModexpCircuit build_proposed(std::uint32_t b, std::size_t k, const BigInt &n, ExponentConvention conv,
                             std::size_t gate_budget) {
    if (k < 2) {
        throw DomainError("build_proposed: work register needs at least 2 qubits");
    }
    if (n < 3) {
        throw DomainError("build_proposed: N must be at least 3");
    }
    BigInt m = proposed_multiplier(b, n, conv);
    if (m == 1) {
        return {Circuit(k), std::move(m), false};
    }
    // Only exponents 1 .. k-2 take the shortcut; 2^(k-1) falls back like any other value.
    if (const auto i = pow2_exponent(m); i && *i >= 1 && *i + 1 < k) {
        Circuit q(k);
        q.append(Gate::swap(0, static_cast<Qubit>(*i)));
        return {std::move(q), std::move(m), false};
    }
    return {build_sota(b, k, gate_budget), std::move(m), true};
}

BigInt sota_layer_swap_count(std::size_t k) {
    BigInt layer;
    mpz_ui_pow_ui(layer.get_mpz_t(), 2, k);
    layer -= 1;
    return layer * BigInt(static_cast<unsigned long>(k == 0 ? 0 : k - 1));
}

BasisPermutation::BasisPermutation(const Circuit &c) : width_(c.width()) {
    if (width_ > 64) {
        throw ValidationError("basis permutation: width " + std::to_string(width_) + " exceeds 64");
    }
    bool swap_only = true;
    for (const Gate &g : c.gates()) {
        switch (g.kind) {
        case GateKind::SWAP:
            break;
        case GateKind::CSWAP:
        case GateKind::X:
            swap_only = false;
            break;
        default:
            throw UnsupportedGateError("basis permutation: " + std::string(to_string(g.kind)) +
                                       " is not a permutation gate");
        }
    }
    if (!swap_only) {
        gates_.assign(c.gates().begin(), c.gates().end());
        return;
    }
    // Track which source wire currently sits at each position.
    std::vector<std::uint32_t> source_at(width_);
    std::iota(source_at.begin(), source_at.end(), 0U);
    for (const Gate &g : c.gates()) {
        std::swap(source_at[g.qubits[0]], source_at[g.qubits[1]]);
    }
    std::vector<std::uint32_t> destination(width_);
    for (std::uint32_t pos = 0; pos < width_; ++pos) {
        destination[source_at[pos]] = pos;
    }
    wire_map_ = std::move(destination);
}

std::uint64_t BasisPermutation::operator()(std::uint64_t x) const {
    if (wire_map_) {
        std::uint64_t out = 0;
        for (std::uint32_t j = 0; j < width_; ++j) {
            out |= ((x >> j) & 1U) << (*wire_map_)[j];
        }
        return out;
    }
    for (const Gate &g : gates_) {
        switch (g.kind) {
        case GateKind::X:
            x ^= std::uint64_t{1} << g.qubits[0];
            break;
        case GateKind::SWAP:
            x = swap_bits(x, g.qubits[0], g.qubits[1]);
            break;
        case GateKind::CSWAP:
            if ((x >> g.qubits[0]) & 1U) {
                x = swap_bits(x, g.qubits[1], g.qubits[2]);
            }
            break;
        default:
            break;
        }
    }
    return x;
}

std::vector<std::uint64_t> effective_permutation(const Circuit &c) {
    if (c.width() > kMaxEffectivePermutationWidth) {
        throw ValidationError("effective_permutation: width " + std::to_string(c.width()) + " exceeds " +
                              std::to_string(kMaxEffectivePermutationWidth));
    }
    const BasisPermutation perm(c);
    std::vector<std::uint64_t> image(std::size_t{1} << c.width());
    for (std::uint64_t x = 0; x < image.size(); ++x) {
        image[x] = perm(x);
    }
    return image;
}

} // namespace shorlab
