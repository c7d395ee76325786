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
 * End-to-end Shor run: full circuit assembly, backend execution, period
 * candidate extraction and verified factors.
 */
#pragma once

#include "shorlab/circuit.hpp"
#include "shorlab/modexp.hpp"
#include "shorlab/numtheory.hpp"
#include "shorlab/simulator.hpp"

#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shorlab {

enum class Method { Proposed, Sota };
enum class Backend { Dense, Fast, Auto };
enum class RunStatus { Success, NoFactor, NotApplicable, Capacity };

std::string_view to_string(Method m);
std::string_view to_string(Backend b);
std::string_view to_string(RunStatus s);
Method method_from_string(std::string_view name);
Backend backend_from_string(std::string_view name);

/// AUTO runs the dense backend up to this many total qubits, the fast backend above.
inline constexpr std::size_t kAutoDenseMaxQubits = 20;

struct ShorConfig {
    Method method = Method::Proposed;
    BigInt a = 2;
    /// Counting-register width; the work register has the same width.
    std::size_t k = 0;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    ExponentConvention convention = ExponentConvention::IteratedSquaring;
    Backend backend = Backend::Auto;
    std::optional<std::size_t> qubit_limit;
    std::uint64_t memory_budget = kDefaultMemoryBudget;
    std::size_t gate_budget = kDefaultGateBudget;
};

/// An observed outcome y read as y / 2^k in lowest terms; the candidate period is the denominator.
struct PeriodCandidate {
    std::uint64_t outcome = 0;
    std::uint64_t count = 0;
    std::uint64_t numerator = 0;
    std::uint64_t denominator = 0;

    friend bool operator==(const PeriodCandidate &, const PeriodCandidate &) = default;
};

struct ShorCircuit {
    /// Width 2k: H layer, work |1>, controlled modexp layers, inverse QFT.
    Circuit circuit;
    /// Uncontrolled modexp circuit for each control qubit b, over the k work qubits.
    std::vector<Circuit> layers;
    std::size_t fallback_layers = 0;
};

struct FactoringResult {
    BigInt n;
    Method method = Method::Proposed;
    std::size_t k = 0;
    Backend backend = Backend::Auto;
    Histogram histogram;
    std::vector<PeriodCandidate> candidates;
    std::optional<std::uint64_t> r_selected;
    std::optional<FactorPair> factors;
    double gen_time_s = 0.0;
    double exec_time_s = 0.0;
    RunStatus status = RunStatus::NoFactor;
    std::string message;
    /// Statevector norm after the full circuit, dense runs only.
    std::optional<double> final_norm;
    std::size_t fallback_layers = 0;
};

/**
 * Assembles the full 2k-qubit circuit.
 * Throws NotApplicableError when 2k exceeds cfg.qubit_limit, DomainError when gcd(a, N) != 1,
 * ValidationError for an unusable config, CapacityError when a cascade exceeds the gate budget.
 */
ShorCircuit build_shor_circuit(const BigInt &n, const ShorConfig &cfg);

/// f(i) for every counting value i, i.e. the work-register content the layers produce from |1>.
std::vector<std::uint64_t> work_register_table(std::span<const Circuit> layers);

std::vector<PeriodCandidate> period_candidates(const Histogram &h, std::size_t k);

struct Extraction {
    std::optional<std::uint64_t> r;
    std::optional<FactorPair> factors;
};

/// Tries r then 2r for each candidate in order; first success wins.
Extraction select_and_extract(std::span<const PeriodCandidate> candidates, const BigInt &a, const BigInt &n);

/// Never throws for capacity or applicability problems; those become the status.
FactoringResult run_shor(const BigInt &n, const ShorConfig &cfg);

/// Versioned result document ("schema": "shor-lab/v1"); integers as decimal strings.
nlohmann::json result_to_json(const FactoringResult &r, const ShorConfig &cfg);

} // namespace shorlab
