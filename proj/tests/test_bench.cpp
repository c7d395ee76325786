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
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "shorlab/bench.hpp"
#include "shorlab/errors.hpp"

#include <algorithm>
#include <random>

using namespace shorlab;

namespace {

std::vector<FactoringCase> first_cases(std::size_t count) {
    const auto &all = case_catalog();
    return {all.begin(), all.begin() + static_cast<std::ptrdiff_t>(count)};
}

BenchOptions quick() {
    BenchOptions opts;
    opts.shots = 1000;
    opts.timing_repeats = 1;
    return opts;
}

} // namespace

TEST_CASE("qubit counts for every case") {
    const std::size_t proposed[] = {8, 16, 24, 24, 24, 24, 24, 24, 24, 24, 24, 26};
    const std::size_t sota[] = {8, 16, 32, 64, 128, 256, 512, 1024, 2048, 4096, 8192, 16384};
    const auto &cases = case_catalog();
    for (std::size_t i = 0; i < cases.size(); ++i) {
        CHECK(2 * register_width(cases[i], Method::Proposed) == proposed[i]);
        CHECK(2 * register_width(cases[i], Method::Sota) == sota[i]);
    }
}

TEST_CASE("run_bench") {
    SUBCASE("case 1, both methods") {
        const auto records = run_bench(first_cases(1), quick());
        REQUIRE(records.size() == 2);
        CHECK(records[0].method == Method::Proposed);
        CHECK(records[0].qubits == 8);
        CHECK(records[1].qubits == 8);
        CHECK(records[0].status == BenchStatus::Ok);
        CHECK(records[1].status == BenchStatus::Ok);
        CHECK(records[0].gen_time_s.has_value());
        CHECK(records[0].shots == 1000);
    }
    SUBCASE("case 3 SOTA is not applicable") {
        BenchOptions opts = quick();
        opts.methods = {Method::Sota};
        const auto records = run_bench(std::span(case_catalog()).subspan(2, 1), opts);
        REQUIRE(records.size() == 1);
        CHECK(records[0].qubits == 32);
        CHECK(records[0].status == BenchStatus::NotApplicable);
        CHECK_FALSE(records[0].gen_time_s.has_value());
        CHECK_FALSE(records[0].exec_time_s.has_value());
    }
    SUBCASE("case 12 proposed uses 26 qubits") {
        BenchOptions opts = quick();
        opts.methods = {Method::Proposed};
        const auto records = run_bench(std::span(case_catalog()).subspan(11, 1), opts);
        REQUIRE(records.size() == 1);
        CHECK(records[0].qubits == 26);
        CHECK(records[0].status == BenchStatus::Ok);
    }
    SUBCASE("dense capacity without the fast path") {
        BenchOptions opts = quick();
        opts.methods = {Method::Proposed};
        opts.backend = Backend::Dense;
        opts.memory_budget = 1 << 19;
        const auto records = run_bench(first_cases(2), opts);
        CHECK(records[0].status == BenchStatus::Ok);
        CHECK(records[1].status == BenchStatus::Capacity);
        CHECK_FALSE(bench_passed(records));
    }
    SUBCASE("records are sorted by case then method") {
        BenchOptions opts = quick();
        opts.methods = {Method::Sota, Method::Proposed};
        const auto records = run_bench(first_cases(2), opts);
        REQUIRE(records.size() == 4);
        CHECK(records[0].case_index == 1);
        CHECK(records[0].method == Method::Proposed);
        CHECK(records[1].method == Method::Sota);
        CHECK(records[2].case_index == 2);
    }
    CHECK_THROWS_AS(run_bench({}, quick()), ValidationError);
}

TEST_CASE("emit_report") {
    CHECK(emit_report({}, ReportFormat::Csv) == "case,method,qubits,gen_time_s,exec_time_s,shots,status\n");

    std::vector<BenchRecord> records;
    for (int c = 1; c <= 12; ++c) {
        for (const Method m : {Method::Proposed, Method::Sota}) {
            BenchRecord r{c, m, static_cast<std::size_t>(2 * c), 0.5, 1.25, 10000, BenchStatus::Ok};
            if (m == Method::Sota && c > 2) {
                r.status = BenchStatus::NotApplicable;
                r.gen_time_s.reset();
                r.exec_time_s.reset();
            }
            records.push_back(r);
        }
    }
    const std::string csv = emit_report(records, ReportFormat::Csv);
    CHECK(std::count(csv.begin(), csv.end(), '\n') == 25);
    CHECK(csv.find("3,sota,6,,,10000,NOT_APPLICABLE\n") != std::string::npos);

    const std::string md = emit_report(records, ReportFormat::Markdown);
    CHECK(md.find("| Case 3 | 6 | 6 | 0.500000 | Not applicable | 1.250000 | Not applicable |") != std::string::npos);

    const auto json = nlohmann::json::parse(emit_report(records, ReportFormat::Json));
    CHECK(json["records"].size() == 24);
    CHECK(json["records"][5]["gen_time_s"].is_null());

    CHECK_THROWS_AS(report_format_from_string("xml"), ValidationError);
    CHECK_THROWS_AS(parse_report(md, ReportFormat::Markdown), ValidationError);
}

TEST_CASE("reports round-trip through CSV and JSON") {
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> seconds(0.0, 100.0);
    const BenchStatus statuses[] = {BenchStatus::Ok, BenchStatus::NotApplicable, BenchStatus::Capacity,
                                    BenchStatus::Skipped, BenchStatus::Failed};
    for (int t = 0; t < 20; ++t) {
        std::vector<BenchRecord> records;
        const int n = static_cast<int>(rng() % 10);
        for (int i = 0; i < n; ++i) {
            BenchRecord r;
            r.case_index = 1 + static_cast<int>(rng() % 12);
            r.method = rng() % 2 ? Method::Proposed : Method::Sota;
            r.qubits = rng() % 20000;
            r.shots = rng() % 100000;
            r.status = statuses[rng() % 5];
            if (rng() % 3) {
                r.gen_time_s = seconds(rng);
                r.exec_time_s = seconds(rng) * 1e-7;
            }
            records.push_back(r);
        }
        CHECK(parse_report(emit_report(records, ReportFormat::Csv), ReportFormat::Csv) == records);
        CHECK(parse_report(emit_report(records, ReportFormat::Json), ReportFormat::Json) == records);
    }
}

TEST_CASE("sota gate count is analytic") {
    const auto &cases = case_catalog();
    for (const auto &c : cases) {
        const std::size_t k = register_width(c, Method::Sota);
        BigInt expected;
        mpz_ui_pow_ui(expected.get_mpz_t(), 2, k);
        expected = (expected - 1) * static_cast<unsigned long>(k - 1);
        CHECK(sota_layer_swap_count(k) == expected);
        if (k <= 8) {
            std::size_t built = 0;
            for (std::uint32_t b = 0; b < k; ++b) {
                built += build_sota(b, k).size();
            }
            CHECK(BigInt(static_cast<unsigned long>(built)) == expected);
        }
    }
}
