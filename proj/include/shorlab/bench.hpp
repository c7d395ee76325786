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
 * Benchmark harness over the case catalog: qubit counts, generation and
 * execution times, applicability status, and report emission.
 */
#pragma once

#include "shorlab/numtheory.hpp"
#include "shorlab/pipeline.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace shorlab {

enum class BenchStatus { Ok, NotApplicable, Capacity, Skipped, Failed };

std::string_view to_string(BenchStatus s);
BenchStatus bench_status_from_string(std::string_view name);

struct BenchRecord {
    int case_index = 0;
    Method method = Method::Proposed;
    std::size_t qubits = 0;
    /// Absent for records that never ran (NOT_APPLICABLE, SKIPPED).
    std::optional<double> gen_time_s;
    std::optional<double> exec_time_s;
    std::uint64_t shots = 0;
    BenchStatus status = BenchStatus::Ok;

    friend bool operator==(const BenchRecord &, const BenchRecord &) = default;
};

inline constexpr std::size_t kDefaultQubitLimit = 31;

struct BenchOptions {
    std::vector<Method> methods{Method::Proposed, Method::Sota};
    std::uint64_t shots = 10000;
    std::size_t qubit_limit = kDefaultQubitLimit;
    std::uint64_t memory_budget = kDefaultMemoryBudget;
    std::uint64_t seed = 0;
    Backend backend = Backend::Auto;
    ExponentConvention convention = ExponentConvention::IteratedSquaring;
    /// Generation time is the minimum over this many circuit builds.
    int timing_repeats = 20;
};

/// Register width a method uses for a catalog case.
std::size_t register_width(const FactoringCase &c, Method m);

/// One record per (case, method), sorted by case then method. Throws ValidationError on an empty case list.
std::vector<BenchRecord> run_bench(std::span<const FactoringCase> cases, const BenchOptions &opts);

enum class ReportFormat { Csv, Json, Markdown };
ReportFormat report_format_from_string(std::string_view name);

std::string emit_report(std::span<const BenchRecord> records, ReportFormat format);

/// Inverse of emit_report for CSV and JSON.
std::vector<BenchRecord> parse_report(const std::string &text, ReportFormat format);

/// True when every non-skipped record is OK or NOT_APPLICABLE.
bool bench_passed(std::span<const BenchRecord> records);

} // namespace shorlab
