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
#include "shorlab/selftest.hpp"

#include "shorlab/modexp.hpp"
#include "shorlab/numtheory.hpp"
#include "shorlab/pipeline.hpp"
#include "shorlab/simulator.hpp"

#include <fmt/format.h>

#include <cmath>
#include <functional>
#include <numbers>
#include <set>

namespace shorlab {

namespace {

constexpr double kTolerance = 1e-9;

struct Check {
    const char *module;
    const char *name;
    std::function<std::string()> run; // empty string on success
};

std::string iqft_matches_dft(std::size_t k) {
    const Circuit c = iqft_circuit(k);
    const std::uint64_t dim = std::uint64_t{1} << k;
    double worst = 0.0;
    for (std::uint64_t x = 0; x < dim; ++x) {
        StateVector s = init_state(k);
        s.amplitudes()[0] = 0.0;
        s.amplitudes()[x] = 1.0;
        apply(s, c);
        for (std::uint64_t y = 0; y < dim; ++y) {
            const double phase = -2.0 * std::numbers::pi * static_cast<double>(x * y % dim) / static_cast<double>(dim);
            const Amplitude expected = std::polar(1.0 / std::sqrt(static_cast<double>(dim)), phase);
            worst = std::max(worst, std::abs(s.amplitudes()[y] - expected));
        }
    }
    return worst < kTolerance ? "" : fmt::format("max abs deviation {:.3e}", worst);
}

std::string backend_agreement(const BigInt &n, std::size_t k, Method method) {
    ShorConfig cfg;
    cfg.method = method;
    cfg.k = k;
    const ShorCircuit built = build_shor_circuit(n, cfg);
    StateVector state = init_state(built.circuit.width());
    apply(state, built.circuit);
    if (std::abs(state.norm() - 1.0) > kTolerance) {
        return fmt::format("norm drifted to {:.12f}", state.norm());
    }
    const auto dense = marginal_distribution(state, {0, k});
    const auto table = work_register_table(built.layers);
    const auto fast = exact_distribution_fast(k, [&](std::uint64_t i) { return table[i]; });
    double tv = 0.0;
    for (std::size_t y = 0; y < dense.size(); ++y) {
        tv += std::abs(dense[y] - fast[y]);
    }
    tv /= 2.0;
    return tv < kTolerance ? "" : fmt::format("total variation {:.3e}", tv);
}

std::set<std::uint64_t> support_of(const std::vector<double> &probs, double threshold) {
    std::set<std::uint64_t> s;
    for (std::size_t y = 0; y < probs.size(); ++y) {
        if (probs[y] > threshold) {
            s.insert(y);
        }
    }
    return s;
}

std::string golden_run(const BigInt &n, std::size_t k, const BigInt &p, const BigInt &q) {
    ShorConfig cfg;
    cfg.k = k;
    cfg.seed = 7;
    const auto result = run_shor(n, cfg);
    if (result.status != RunStatus::Success || !result.factors || result.factors->p != p ||
        result.factors->q != q) {
        return fmt::format("status {}", to_string(result.status));
    }
    return "";
}

std::vector<Check> checks() {
    return {
        {"numtheory", "catalog_order_of_two",
         [] {
             for (const auto &c : case_catalog()) {
                 if (multiplicative_order(2, c.n) != c.expected_r) {
                     return fmt::format("case {} order mismatch", c.index);
                 }
             }
             return std::string();
         }},
        {"numtheory", "extract_factors_n15",
         [] {
             const auto f = extract_factors(2, 4, 15);
             return f && f->p == 3 && f->q == 5 ? std::string() : std::string("expected (3, 5)");
         }},
        {"modexp", "sota_rotation_k4",
         [] {
             const auto image = effective_permutation(build_sota(0, 4));
             for (std::uint64_t x = 0; x < 16; ++x) {
                 if (image[x] != (((x << 1) | (x >> 3)) & 15U)) {
                     return fmt::format("x={} maps to {}", x, image[x]);
                 }
             }
             return std::string();
         }},
        {"modexp", "proposed_n771_shortcut",
         [] {
             const auto built = build_proposed(3, 12, 771);
             return !built.fallback && built.circuit.size() == 1 && built.circuit.gates()[0] == Gate::swap(0, 8)
                        ? std::string()
                        : std::string("expected SWAP(0, 8)");
         }},
        {"simulator", "iqft_matches_dft_k1", [] { return iqft_matches_dft(1); }},
        {"simulator", "iqft_matches_dft_k3", [] { return iqft_matches_dft(3); }},
        {"simulator", "iqft_matches_dft_k6", [] { return iqft_matches_dft(6); }},
        {"simulator", "backend_agreement_n15_proposed_k4", [] { return backend_agreement(15, 4, Method::Proposed); }},
        {"simulator", "backend_agreement_n15_sota_k4", [] { return backend_agreement(15, 4, Method::Sota); }},
        {"simulator", "backend_agreement_n51_proposed_k8", [] { return backend_agreement(51, 8, Method::Proposed); }},
        {"simulator", "backend_agreement_n51_sota_k8", [] { return backend_agreement(51, 8, Method::Sota); }},
        {"pipeline", "golden_n15_support",
         [] {
             ShorConfig cfg;
             cfg.k = 4;
             const auto built = build_shor_circuit(15, cfg);
             const auto table = work_register_table(built.layers);
             const auto probs = exact_distribution_fast(4, [&](std::uint64_t i) { return table[i]; });
             const std::set<std::uint64_t> expected{0, 4, 8, 12};
             return support_of(probs, 1e-12) == expected ? std::string() : std::string("support is not {0,4,8,12}");
         }},
        {"pipeline", "golden_n15_factors", [] { return golden_run(15, 4, 3, 5); }},
        {"pipeline", "golden_n771_support",
         [] {
             ShorConfig cfg;
             cfg.k = 12;
             const auto built = build_shor_circuit(771, cfg);
             const auto table = work_register_table(built.layers);
             const auto probs = exact_distribution_fast(12, [&](std::uint64_t i) { return table[i]; });
             std::set<std::uint64_t> expected;
             for (std::uint64_t y = 0; y < 4096; y += 256) {
                 expected.insert(y);
             }
             return support_of(probs, 1e-12) == expected ? std::string()
                                                         : std::string("support is not the multiples of 256");
         }},
        {"pipeline", "golden_n771_factors", [] { return golden_run(771, 12, 3, 257); }},
    };
}

} // namespace

std::vector<SelfTestResult> run_selftest() {
    std::vector<SelfTestResult> results;
    for (const auto &check : checks()) {
        SelfTestResult r{check.module, check.name, false, {}};
        try {
            r.detail = check.run();
            r.passed = r.detail.empty();
        } catch (const std::exception &e) {
            r.detail = std::string("threw: ") + e.what();
        }
        results.push_back(std::move(r));
    }
    return results;
}

} // namespace shorlab
