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
#include "shorlab/pipeline.hpp"

#include "shorlab/errors.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>

namespace shorlab {

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
    return std::chrono::duration<double>(Clock::now() - start).count();
}

Backend resolve_backend(Backend requested, std::size_t k, std::uint64_t memory_budget) {
    if (requested != Backend::Auto) {
        return requested;
    }
    const std::size_t total = 2 * k;
    if (total <= kAutoDenseMaxQubits && dense_state_bytes(total) <= memory_budget) {
        return Backend::Dense;
    }
    return Backend::Fast;
}

} // namespace

std::string_view to_string(Method m) { return m == Method::Proposed ? "proposed" : "sota"; }

std::string_view to_string(Backend b) {
    switch (b) {
    case Backend::Dense:
        return "dense";
    case Backend::Fast:
        return "fast";
    case Backend::Auto:
        return "auto";
    }
    return "auto";
}

std::string_view to_string(RunStatus s) {
    switch (s) {
    case RunStatus::Success:
        return "SUCCESS";
    case RunStatus::NoFactor:
        return "NO_FACTOR";
    case RunStatus::NotApplicable:
        return "NOT_APPLICABLE";
    case RunStatus::Capacity:
        return "CAPACITY";
    }
    return "NO_FACTOR";
}

Method method_from_string(std::string_view name) {
    if (name == "proposed") {
        return Method::Proposed;
    }
    if (name == "sota") {
        return Method::Sota;
    }
    throw ValidationError("unknown method '" + std::string(name) + "'");
}

Backend backend_from_string(std::string_view name) {
    if (name == "dense") {
        return Backend::Dense;
    }
    if (name == "fast") {
        return Backend::Fast;
    }
    if (name == "auto") {
        return Backend::Auto;
    }
    throw ValidationError("unknown backend '" + std::string(name) + "'");
}

ShorCircuit build_shor_circuit(const BigInt &n, const ShorConfig &cfg) {
    const std::size_t k = cfg.k;
    if (k < 2) {
        throw ValidationError("register width k must be at least 2");
    }
    if (cfg.a != 2) {
        throw ValidationError("only base a = 2 is supported by the modexp builders");
    }
    if (n < 3) {
        throw DomainError("N must be at least 3");
    }
    if (gcd(cfg.a, n) != 1) {
        throw DomainError("gcd(a, N) != 1");
    }
    const std::size_t width = 2 * k;
    if (cfg.qubit_limit && width > *cfg.qubit_limit) {
        throw NotApplicableError("not applicable: " + std::to_string(width) + " qubits > limit " +
                                 std::to_string(*cfg.qubit_limit));
    }

    ShorCircuit out{Circuit(width), {}, 0};
    out.layers.reserve(k);
    for (std::uint32_t b = 0; b < k; ++b) {
        if (cfg.method == Method::Sota) {
            out.layers.push_back(build_sota(b, k, cfg.gate_budget));
        } else {
            auto built = build_proposed(b, k, n, cfg.convention, cfg.gate_budget);
            out.fallback_layers += built.fallback ? 1 : 0;
            out.layers.push_back(std::move(built.circuit));
        }
    }

    Circuit &c = out.circuit;
    for (std::size_t i = 0; i < k; ++i) {
        c.append(Gate::h(static_cast<Qubit>(i)));
    }
    c.append(Gate::x(static_cast<Qubit>(k)));
    for (std::uint32_t b = 0; b < k; ++b) {
        c.append(control(embed(out.layers[b], width, static_cast<Qubit>(k)), b));
    }
    c.append(iqft_circuit(k, 0, width));
    return out;
}

std::vector<std::uint64_t> work_register_table(std::span<const Circuit> layers) {
    const std::size_t k = layers.size();
    std::vector<BasisPermutation> perms;
    perms.reserve(k);
    for (const Circuit &layer : layers) {
        perms.emplace_back(layer);
    }
    std::vector<std::uint64_t> table(std::size_t{1} << k);
    table[0] = 1;
    // Layer b acts after layers 0..b-1, so f(i) applies the top set bit's layer last.
    for (std::uint64_t i = 1; i < table.size(); ++i) {
        const auto top = static_cast<std::size_t>(std::bit_width(i) - 1);
        table[i] = perms[top](table[i ^ (std::uint64_t{1} << top)]);
    }
    return table;
}

std::vector<PeriodCandidate> period_candidates(const Histogram &h, std::size_t k) {
    if (h.register_width != k) {
        throw ValidationError("histogram width does not match k");
    }
    const std::uint64_t dim = std::uint64_t{1} << k;
    std::vector<PeriodCandidate> out;
    for (const auto &[y, count] : h.counts) {
        if (y == 0) {
            continue;
        }
        const std::uint64_t g = std::gcd(y, dim);
        out.push_back({y, count, y / g, dim / g});
    }
    std::stable_sort(out.begin(), out.end(), [](const PeriodCandidate &lhs, const PeriodCandidate &rhs) {
        if (lhs.count != rhs.count) {
            return lhs.count > rhs.count;
        }
        return lhs.denominator < rhs.denominator;
    });
    return out;
}

Extraction select_and_extract(std::span<const PeriodCandidate> candidates, const BigInt &a, const BigInt &n) {
    for (const PeriodCandidate &c : candidates) {
        for (const std::uint64_t r : {c.denominator, 2 * c.denominator}) {
            if (auto f = extract_factors(a, r, n)) {
                return {r, std::move(f)};
            }
        }
    }
    return {};
}

FactoringResult run_shor(const BigInt &n, const ShorConfig &cfg) {
    FactoringResult result;
    result.n = n;
    result.method = cfg.method;
    result.k = cfg.k;
    result.backend = resolve_backend(cfg.backend, cfg.k, cfg.memory_budget);
    result.histogram.register_width = cfg.k;

    const auto gen_start = Clock::now();
    std::optional<ShorCircuit> built;
    try {
        built = build_shor_circuit(n, cfg);
    } catch (const NotApplicableError &e) {
        result.status = RunStatus::NotApplicable;
        result.message = e.what();
        return result;
    } catch (const CapacityError &e) {
        result.gen_time_s = seconds_since(gen_start);
        result.status = RunStatus::Capacity;
        result.message = e.what();
        return result;
    }
    result.gen_time_s = seconds_since(gen_start);
    result.fallback_layers = built->fallback_layers;

    const auto exec_start = Clock::now();
    try {
        if (result.backend == Backend::Dense) {
            StateVector state = init_state(built->circuit.width(), cfg.memory_budget);
            apply(state, built->circuit);
            result.final_norm = state.norm();
            result.histogram = sample(state, {0, cfg.k}, cfg.shots, cfg.seed);
        } else {
            if (fast_backend_bytes(cfg.k) > cfg.memory_budget) {
                throw CapacityError("fast backend for a " + std::to_string(cfg.k) +
                                    "-qubit register exceeds the memory budget");
            }
            const auto table = work_register_table(built->layers);
            const auto probs =
                exact_distribution_fast(cfg.k, [&](std::uint64_t i) { return table[i]; }, cfg.memory_budget);
            result.histogram = sample(probs, cfg.k, cfg.shots, cfg.seed);
        }
    } catch (const CapacityError &e) {
        result.exec_time_s = seconds_since(exec_start);
        result.status = RunStatus::Capacity;
        result.message = e.what();
        return result;
    }
    result.exec_time_s = seconds_since(exec_start);

    result.candidates = period_candidates(result.histogram, cfg.k);
    auto extraction = select_and_extract(result.candidates, cfg.a, n);
    if (extraction.factors && extraction.factors->p * extraction.factors->q == n && extraction.factors->p > 1 &&
        extraction.factors->p <= extraction.factors->q && extraction.factors->q < n) {
        result.r_selected = extraction.r;
        result.factors = std::move(extraction.factors);
        result.status = RunStatus::Success;
    } else {
        result.status = RunStatus::NoFactor;
        result.message = "no candidate period yielded a nontrivial factor";
    }
    return result;
}

nlohmann::json result_to_json(const FactoringResult &r, const ShorConfig &cfg) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto &[outcome, count] : r.histogram.counts) {
        counts.push_back({{"bitstring", r.histogram.bitstring(outcome)}, {"count", std::to_string(count)}});
    }
    nlohmann::json candidates = nlohmann::json::array();
    for (const auto &c : r.candidates) {
        candidates.push_back({{"outcome", std::to_string(c.outcome)},
                              {"count", std::to_string(c.count)},
                              {"fraction", std::to_string(c.numerator) + "/" + std::to_string(c.denominator)},
                              {"r", std::to_string(c.denominator)}});
    }
    nlohmann::json doc{
        {"schema", "shor-lab/v1"},
        {"N", r.n.get_str()},
        {"method", to_string(r.method)},
        {"a", cfg.a.get_str()},
        {"k", std::to_string(r.k)},
        {"qubits", std::to_string(2 * r.k)},
        {"shots", std::to_string(cfg.shots)},
        {"seed", std::to_string(cfg.seed)},
        {"convention", to_string(cfg.convention)},
        {"backend", to_string(r.backend)},
        {"status", to_string(r.status)},
        {"message", r.message},
        {"gen_time_s", r.gen_time_s},
        {"exec_time_s", r.exec_time_s},
        {"histogram", {{"register_width", std::to_string(r.histogram.register_width)},
                       {"shots", std::to_string(r.histogram.shots)},
                       {"counts", std::move(counts)}}},
        {"candidates", std::move(candidates)},
        {"r_selected", r.r_selected ? nlohmann::json(std::to_string(*r.r_selected)) : nlohmann::json(nullptr)},
    };
    if (r.factors) {
        doc["factors"] = {{"p", r.factors->p.get_str()}, {"q", r.factors->q.get_str()}};
    } else {
        doc["factors"] = nullptr;
    }
    return doc;
}

} // namespace shorlab
