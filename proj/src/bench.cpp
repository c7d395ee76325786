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
#include "shorlab/bench.hpp"

#include "shorlab/errors.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <chrono>
#include <map>
#include <sstream>

namespace shorlab {

namespace {

constexpr std::string_view kCsvHeader = "case,method,qubits,gen_time_s,exec_time_s,shots,status";

std::string format_seconds(const std::optional<double> &v) {
    if (!v) {
        return {};
    }
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), *v);
    return {buf.data(), res.ptr};
}

std::optional<double> parse_seconds(const std::string &field) {
    if (field.empty()) {
        return std::nullopt;
    }
    double v = 0.0;
    const auto res = std::from_chars(field.data(), field.data() + field.size(), v);
    if (res.ec != std::errc{} || res.ptr != field.data() + field.size()) {
        throw ValidationError("report: bad time value '" + field + "'");
    }
    return v;
}

std::vector<std::string> split(const std::string &line, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(line);
    while (std::getline(in, cur, sep)) {
        parts.push_back(cur);
    }
    if (!line.empty() && line.back() == sep) {
        parts.emplace_back();
    }
    return parts;
}

std::string markdown_time(const BenchRecord *r) {
    if (r == nullptr) {
        return "-";
    }
    if (r->status == BenchStatus::NotApplicable) {
        return "Not applicable";
    }
    if (r->status != BenchStatus::Ok) {
        return std::string(to_string(r->status));
    }
    return r->gen_time_s ? fmt::format("{:.6f}", *r->gen_time_s) : "-";
}

std::string markdown_exec(const BenchRecord *r) {
    if (r == nullptr) {
        return "-";
    }
    if (r->status == BenchStatus::NotApplicable) {
        return "Not applicable";
    }
    if (r->status != BenchStatus::Ok) {
        return std::string(to_string(r->status));
    }
    return r->exec_time_s ? fmt::format("{:.6f}", *r->exec_time_s) : "-";
}

double time_build(const BigInt &n, const ShorConfig &cfg) {
    const auto start = std::chrono::steady_clock::now();
    const auto built = build_shor_circuit(n, cfg);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    (void)built;
    return elapsed;
}

} // namespace

std::string_view to_string(BenchStatus s) {
    switch (s) {
    case BenchStatus::Ok:
        return "OK";
    case BenchStatus::NotApplicable:
        return "NOT_APPLICABLE";
    case BenchStatus::Capacity:
        return "CAPACITY";
    case BenchStatus::Skipped:
        return "SKIPPED";
    case BenchStatus::Failed:
        return "FAILED";
    }
    return "FAILED";
}

BenchStatus bench_status_from_string(std::string_view name) {
    for (const auto s : {BenchStatus::Ok, BenchStatus::NotApplicable, BenchStatus::Capacity, BenchStatus::Skipped,
                         BenchStatus::Failed}) {
        if (to_string(s) == name) {
            return s;
        }
    }
    throw ValidationError("unknown bench status '" + std::string(name) + "'");
}

std::size_t register_width(const FactoringCase &c, Method m) {
    return static_cast<std::size_t>(m == Method::Proposed ? c.k_proposed : c.k_sota);
}

std::vector<BenchRecord> run_bench(std::span<const FactoringCase> cases, const BenchOptions &opts) {
    if (cases.empty()) {
        throw ValidationError("run_bench: no cases selected");
    }
    std::vector<BenchRecord> records;
    for (const FactoringCase &c : cases) {
        for (const Method method : opts.methods) {
            BenchRecord rec;
            rec.case_index = c.index;
            rec.method = method;
            const std::size_t k = register_width(c, method);
            rec.qubits = 2 * k;
            rec.shots = opts.shots;
            if (rec.qubits > opts.qubit_limit) {
                rec.status = BenchStatus::NotApplicable;
                records.push_back(rec);
                continue;
            }
            ShorConfig cfg;
            cfg.method = method;
            cfg.k = k;
            cfg.shots = opts.shots;
            cfg.seed = opts.seed;
            cfg.backend = opts.backend;
            cfg.convention = opts.convention;
            cfg.qubit_limit = opts.qubit_limit;
            cfg.memory_budget = opts.memory_budget;
            FactoringResult result;
            try {
                result = run_shor(c.n, cfg);
            } catch (const std::exception &) {
                rec.status = BenchStatus::Skipped;
                records.push_back(rec);
                continue;
            }
            switch (result.status) {
            case RunStatus::Success:
                rec.status = BenchStatus::Ok;
                break;
            case RunStatus::NotApplicable:
                rec.status = BenchStatus::NotApplicable;
                break;
            case RunStatus::Capacity:
                rec.status = BenchStatus::Capacity;
                break;
            case RunStatus::NoFactor:
                rec.status = BenchStatus::Failed;
                break;
            }
            if (rec.status != BenchStatus::NotApplicable) {
                double gen = result.gen_time_s;
                if (rec.status == BenchStatus::Ok) {
                    for (int i = 1; i < opts.timing_repeats; ++i) {
                        gen = std::min(gen, time_build(c.n, cfg));
                    }
                }
                rec.gen_time_s = gen;
                rec.exec_time_s = result.exec_time_s;
            }
            records.push_back(rec);
        }
    }
    std::stable_sort(records.begin(), records.end(), [](const BenchRecord &a, const BenchRecord &b) {
        if (a.case_index != b.case_index) {
            return a.case_index < b.case_index;
        }
        return static_cast<int>(a.method) < static_cast<int>(b.method);
    });
    return records;
}

ReportFormat report_format_from_string(std::string_view name) {
    if (name == "csv") {
        return ReportFormat::Csv;
    }
    if (name == "json") {
        return ReportFormat::Json;
    }
    if (name == "markdown" || name == "md") {
        return ReportFormat::Markdown;
    }
    throw ValidationError("unknown report format '" + std::string(name) + "'");
}

std::string emit_report(std::span<const BenchRecord> records, ReportFormat format) {
    switch (format) {
    case ReportFormat::Csv: {
        std::string out(kCsvHeader);
        out += '\n';
        for (const auto &r : records) {
            out += fmt::format("{},{},{},{},{},{},{}\n", r.case_index, to_string(r.method), r.qubits,
                               format_seconds(r.gen_time_s), format_seconds(r.exec_time_s), r.shots,
                               to_string(r.status));
        }
        return out;
    }
    case ReportFormat::Json: {
        nlohmann::json arr = nlohmann::json::array();
        for (const auto &r : records) {
            arr.push_back({
                {"case_index", r.case_index},
                {"method", to_string(r.method)},
                {"qubits", r.qubits},
                {"gen_time_s", r.gen_time_s ? nlohmann::json(*r.gen_time_s) : nlohmann::json(nullptr)},
                {"exec_time_s", r.exec_time_s ? nlohmann::json(*r.exec_time_s) : nlohmann::json(nullptr)},
                {"shots", r.shots},
                {"status", to_string(r.status)},
            });
        }
        return nlohmann::json{{"records", std::move(arr)}}.dump(2) + "\n";
    }
    case ReportFormat::Markdown: {
        std::map<int, std::pair<const BenchRecord *, const BenchRecord *>> by_case;
        for (const auto &r : records) {
            auto &slot = by_case[r.case_index];
            (r.method == Method::Proposed ? slot.first : slot.second) = &r;
        }
        std::string out = "| Case | Qubits (proposed) | Qubits (SOTA) | Generation time proposed (s) | "
                          "Generation time SOTA (s) | Execution time proposed (s) | Execution time SOTA (s) |\n"
                          "|---|---|---|---|---|---|---|\n";
        for (const auto &[index, pair] : by_case) {
            const auto qubits = [](const BenchRecord *r) { return r ? std::to_string(r->qubits) : std::string("-"); };
            out += fmt::format("| Case {} | {} | {} | {} | {} | {} | {} |\n", index, qubits(pair.first),
                               qubits(pair.second), markdown_time(pair.first), markdown_time(pair.second),
                               markdown_exec(pair.first), markdown_exec(pair.second));
        }
        return out;
    }
    }
    throw ValidationError("unknown report format");
}

std::vector<BenchRecord> parse_report(const std::string &text, ReportFormat format) {
    std::vector<BenchRecord> records;
    if (format == ReportFormat::Csv) {
        std::istringstream in(text);
        std::string line;
        if (!std::getline(in, line) || line != kCsvHeader) {
            throw ValidationError("report CSV: missing header");
        }
        while (std::getline(in, line)) {
            if (line.empty()) {
                continue;
            }
            const auto f = split(line, ',');
            if (f.size() != 7) {
                throw ValidationError("report CSV: expected 7 fields in '" + line + "'");
            }
            BenchRecord r;
            r.case_index = std::stoi(f[0]);
            r.method = method_from_string(f[1]);
            r.qubits = std::stoull(f[2]);
            r.gen_time_s = parse_seconds(f[3]);
            r.exec_time_s = parse_seconds(f[4]);
            r.shots = std::stoull(f[5]);
            r.status = bench_status_from_string(f[6]);
            records.push_back(r);
        }
        return records;
    }
    if (format == ReportFormat::Json) {
        const auto doc = nlohmann::json::parse(text);
        for (const auto &j : doc.at("records")) {
            BenchRecord r;
            r.case_index = j.at("case_index").get<int>();
            r.method = method_from_string(j.at("method").get<std::string>());
            r.qubits = j.at("qubits").get<std::size_t>();
            if (!j.at("gen_time_s").is_null()) {
                r.gen_time_s = j.at("gen_time_s").get<double>();
            }
            if (!j.at("exec_time_s").is_null()) {
                r.exec_time_s = j.at("exec_time_s").get<double>();
            }
            r.shots = j.at("shots").get<std::uint64_t>();
            r.status = bench_status_from_string(j.at("status").get<std::string>());
            records.push_back(r);
        }
        return records;
    }
    throw ValidationError("markdown reports cannot be parsed");
}

bool bench_passed(std::span<const BenchRecord> records) {
    return std::all_of(records.begin(), records.end(), [](const BenchRecord &r) {
        return r.status == BenchStatus::Ok || r.status == BenchStatus::NotApplicable ||
               r.status == BenchStatus::Skipped;
    });
}

} // namespace shorlab
