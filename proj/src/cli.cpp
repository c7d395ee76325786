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
#include "shorlab/cli.hpp"

#include "shorlab/bench.hpp"
#include "shorlab/errors.hpp"
#include "shorlab/numtheory.hpp"
#include "shorlab/pipeline.hpp"
#include "shorlab/selftest.hpp"

#include <CLI11.hpp>
#include <fmt/format.h>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <set>
#include <sstream>

namespace shorlab::cli {

namespace {

constexpr std::size_t kTruncateDigits = 24;
constexpr std::size_t kTopOutcomes = 8;

struct FactorFlags {
    std::string n;
    std::string method = "proposed";
    std::optional<std::size_t> k;
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    std::string backend = "auto";
    std::string convention = "squaring";
    std::optional<std::size_t> qubit_limit;
    std::string memory_budget;
    std::string out_path;
    std::string format = "json";
};

struct BenchFlags {
    std::string cases = "1-12";
    std::string methods = "proposed,sota";
    std::uint64_t shots = 10000;
    std::uint64_t seed = 0;
    std::size_t qubit_limit = kDefaultQubitLimit;
    std::string memory_budget;
    std::string backend = "auto";
    std::string convention = "squaring";
    std::string format = "markdown";
    std::string out_path;
};

struct CasesFlags {
    bool full = false;
    std::string format = "table";
};

std::uint64_t resolve_memory_budget(const std::string &flag) {
    if (!flag.empty()) {
        return parse_byte_size(flag);
    }
    if (const char *env = std::getenv("SHOR_LAB_MEMORY_BUDGET"); env != nullptr && *env != '\0') {
        return parse_byte_size(env);
    }
    return kDefaultMemoryBudget;
}

std::string truncate_digits(const std::string &digits, bool full) {
    if (full || digits.size() <= kTruncateDigits) {
        return digits;
    }
    return digits.substr(0, 12) + "..." + digits.substr(digits.size() - 8) + " (" + std::to_string(digits.size()) +
           " digits)";
}

void write_file(const std::string &path, const std::string &contents) {
    std::ofstream f(path, std::ios::binary);
    if (!f) {
        throw ValidationError("cannot open '" + path + "' for writing");
    }
    f << contents;
}

int exit_code_for(RunStatus s) {
    switch (s) {
    case RunStatus::Success:
        return kExitSuccess;
    case RunStatus::NoFactor:
        return kExitNoFactor;
    case RunStatus::NotApplicable:
    case RunStatus::Capacity:
        return kExitNotApplicable;
    }
    return kExitNoFactor;
}

int cmd_factor(const FactorFlags &flags, std::ostream &out, std::ostream &err) {
    const BigInt n = parse_decimal(flags.n);
    if (n < 15) {
        throw ValidationError("N must be at least 15");
    }
    ShorConfig cfg;
    cfg.method = method_from_string(flags.method);
    cfg.shots = flags.shots;
    cfg.seed = flags.seed;
    cfg.backend = backend_from_string(flags.backend);
    cfg.convention = exponent_convention_from_string(flags.convention);
    cfg.qubit_limit = flags.qubit_limit;
    cfg.memory_budget = resolve_memory_budget(flags.memory_budget);
    if (flags.shots == 0) {
        throw ValidationError("--shots must be positive");
    }
    if (flags.k) {
        cfg.k = *flags.k;
    } else if (const FactoringCase *c = find_case(n)) {
        cfg.k = register_width(*c, cfg.method);
    } else {
        throw ValidationError("--k is required when N is not a catalog case");
    }
    if (n % 2 == 0) {
        throw ValidationError("N must be odd (gcd(2, N) must be 1)");
    }
    if (flags.format != "json" && flags.format != "csv") {
        throw ValidationError("--format must be json or csv");
    }

    const FactoringResult r = run_shor(n, cfg);

    out << "N: " << n.get_str() << '\n';
    out << fmt::format("method: {}  k: {}  qubits: {}  backend: {}\n", to_string(r.method), r.k, 2 * r.k,
                       to_string(r.backend));
    out << "status: " << to_string(r.status) << '\n';
    if (!r.message.empty()) {
        out << r.message << '\n';
    }
    if (r.status == RunStatus::Success || r.status == RunStatus::NoFactor) {
        std::vector<std::pair<std::uint64_t, std::uint64_t>> top(r.histogram.counts.begin(), r.histogram.counts.end());
        std::stable_sort(top.begin(), top.end(), [](const auto &a, const auto &b) { return a.second > b.second; });
        top.resize(std::min(top.size(), kTopOutcomes));
        out << "top outcomes:\n";
        for (const auto &[y, count] : top) {
            out << fmt::format("  {} ({}) {}\n", r.histogram.bitstring(y), y, count);
        }
    }
    if (r.r_selected) {
        out << "r: " << *r.r_selected << '\n';
    }
    if (r.factors) {
        out << "p: " << r.factors->p.get_str() << '\n';
        out << "q: " << r.factors->q.get_str() << '\n';
    }
    out << fmt::format("gen_time_s: {:.6f}\nexec_time_s: {:.6f}\n", r.gen_time_s, r.exec_time_s);
    if (r.status == RunStatus::NotApplicable || r.status == RunStatus::Capacity) {
        err << r.message << '\n';
    }

    if (!flags.out_path.empty()) {
        if (flags.format == "csv") {
            write_file(flags.out_path, histogram_to_csv(r.histogram));
        } else {
            write_file(flags.out_path, result_to_json(r, cfg).dump(2) + "\n");
        }
    }
    return exit_code_for(r.status);
}

int cmd_bench(const BenchFlags &flags, std::ostream &out) {
    const auto &catalog = case_catalog();
    std::vector<FactoringCase> cases;
    for (const int index : parse_case_range(flags.cases, static_cast<int>(catalog.size()))) {
        cases.push_back(catalog[static_cast<std::size_t>(index - 1)]);
    }
    BenchOptions opts;
    opts.methods.clear();
    std::istringstream list(flags.methods);
    for (std::string item; std::getline(list, item, ',');) {
        const Method m = method_from_string(item);
        if (std::find(opts.methods.begin(), opts.methods.end(), m) == opts.methods.end()) {
            opts.methods.push_back(m);
        }
    }
    if (opts.methods.empty()) {
        throw ValidationError("--methods is empty");
    }
    if (flags.shots == 0) {
        throw ValidationError("--shots must be positive");
    }
    opts.shots = flags.shots;
    opts.seed = flags.seed;
    opts.qubit_limit = flags.qubit_limit;
    opts.memory_budget = resolve_memory_budget(flags.memory_budget);
    opts.backend = backend_from_string(flags.backend);
    opts.convention = exponent_convention_from_string(flags.convention);
    const ReportFormat format = report_format_from_string(flags.format);

    const auto records = run_bench(cases, opts);
    const std::string report = emit_report(records, format);
    if (flags.out_path.empty()) {
        out << report;
    } else {
        write_file(flags.out_path, report);
        out << emit_report(records, ReportFormat::Markdown);
    }
    if (bench_passed(records)) {
        return kExitSuccess;
    }
    const bool any_capacity = std::any_of(records.begin(), records.end(),
                                          [](const BenchRecord &r) { return r.status == BenchStatus::Capacity; });
    return any_capacity ? kExitNotApplicable : kExitNoFactor;
}

int cmd_cases(const CasesFlags &flags, std::ostream &out) {
    const auto &catalog = case_catalog();
    if (flags.format == "json") {
        out << catalog_to_json(catalog).dump(2) << '\n';
        return kExitSuccess;
    }
    if (flags.format != "table") {
        throw ValidationError("--format must be table or json");
    }
    out << "| Case | Label bits | Bits of N | e | k proposed | k SOTA | q | N |\n";
    out << "|---|---|---|---|---|---|---|---|\n";
    for (const auto &c : catalog) {
        out << fmt::format("| {} | {} | {} | {} | {} | {} | {} | {} |\n", c.index, c.label_bits, c.bits_of_n, c.e,
                           c.k_proposed, c.k_sota, truncate_digits(c.q.get_str(), flags.full),
                           truncate_digits(c.n.get_str(), flags.full));
    }
    return kExitSuccess;
}

int cmd_selftest(std::ostream &out) {
    const auto results = run_selftest();
    std::size_t failures = 0;
    for (const auto &r : results) {
        out << (r.passed ? "PASS " : "FAIL ") << r.module << '/' << r.name;
        if (!r.passed) {
            out << ": " << r.detail;
            ++failures;
        }
        out << '\n';
    }
    out << fmt::format("{} checks, {} failed\n", results.size(), failures);
    return failures == 0 ? kExitSuccess : 1;
}

} // namespace

std::vector<int> parse_case_range(const std::string &text, int max_index) {
    std::set<int> indices;
    std::istringstream in(text);
    const auto to_int = [&](const std::string &s) {
        if (s.empty() || !std::all_of(s.begin(), s.end(), [](char ch) { return ch >= '0' && ch <= '9'; }) ||
            s.size() > 6) {
            throw ValidationError("invalid case range '" + text + "'");
        }
        return std::stoi(s);
    };
    for (std::string part; std::getline(in, part, ',');) {
        const auto dash = part.find('-');
        const int lo = to_int(dash == std::string::npos ? part : part.substr(0, dash));
        const int hi = dash == std::string::npos ? lo : to_int(part.substr(dash + 1));
        if (lo < 1 || hi > max_index || lo > hi) {
            throw ValidationError("invalid case range '" + text + "'");
        }
        for (int i = lo; i <= hi; ++i) {
            indices.insert(i);
        }
    }
    if (indices.empty()) {
        throw ValidationError("invalid case range '" + text + "'");
    }
    return {indices.begin(), indices.end()};
}

std::uint64_t parse_byte_size(const std::string &text) {
    if (text.empty()) {
        throw ValidationError("empty byte size");
    }
    std::string digits = text;
    std::uint64_t multiplier = 1;
    switch (digits.back()) {
    case 'K':
    case 'k':
        multiplier = std::uint64_t{1} << 10;
        break;
    case 'M':
    case 'm':
        multiplier = std::uint64_t{1} << 20;
        break;
    case 'G':
    case 'g':
        multiplier = std::uint64_t{1} << 30;
        break;
    default:
        break;
    }
    if (multiplier != 1) {
        digits.pop_back();
    }
    if (digits.empty() || digits.size() > 18 ||
        !std::all_of(digits.begin(), digits.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw ValidationError("invalid byte size '" + text + "'");
    }
    return std::stoull(digits) * multiplier;
}

int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Shor's algorithm simulation lab", "shor_lab"};
    app.require_subcommand(1, 1);

    FactorFlags ff;
    auto *factor = app.add_subcommand("factor", "Factor N with a simulated Shor run");
    factor->add_option("N", ff.n, "Integer to factor (decimal)")->required();
    factor->add_option("--method", ff.method, "proposed|sota")->capture_default_str();
    factor->add_option("--k", ff.k, "Counting register width (default: catalog value)");
    factor->add_option("--shots", ff.shots, "Measurement shots")->capture_default_str();
    factor->add_option("--seed", ff.seed, "Sampling seed")->capture_default_str();
    factor->add_option("--backend", ff.backend, "dense|fast|auto")->capture_default_str();
    factor->add_option("--convention", ff.convention, "squaring|literal")->capture_default_str();
    factor->add_option("--qubit-limit", ff.qubit_limit, "Reject circuits wider than this");
    factor->add_option("--memory-budget", ff.memory_budget, "Dense backend cap in bytes (K/M/G suffix allowed)");
    factor->add_option("--out", ff.out_path, "Write the result document here");
    factor->add_option("--format", ff.format, "json|csv")->capture_default_str();

    BenchFlags bf;
    auto *bench = app.add_subcommand("bench", "Run the case catalog benchmark");
    bench->add_option("--cases", bf.cases, "Case range, e.g. 1-12 or 1,3,5-7")->capture_default_str();
    bench->add_option("--methods", bf.methods, "Comma-separated methods")->capture_default_str();
    bench->add_option("--shots", bf.shots, "Measurement shots")->capture_default_str();
    bench->add_option("--seed", bf.seed, "Sampling seed")->capture_default_str();
    bench->add_option("--qubit-limit", bf.qubit_limit, "Applicability limit")->capture_default_str();
    bench->add_option("--memory-budget", bf.memory_budget, "Dense backend cap in bytes (K/M/G suffix allowed)");
    bench->add_option("--backend", bf.backend, "dense|fast|auto")->capture_default_str();
    bench->add_option("--convention", bf.convention, "squaring|literal")->capture_default_str();
    bench->add_option("--format", bf.format, "markdown|csv|json")->capture_default_str();
    bench->add_option("--out", bf.out_path, "Write the report here");

    CasesFlags cf;
    auto *cases = app.add_subcommand("cases", "List the case catalog");
    cases->add_flag("--full", cf.full, "Print N and q in full");
    cases->add_option("--format", cf.format, "table|json")->capture_default_str();

    auto *selftest = app.add_subcommand("selftest", "Run the embedded invariant checks");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kExitSuccess;
    } catch (const CLI::CallForAllHelp &) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitSuccess;
    } catch (const CLI::ParseError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (factor->parsed()) {
            return cmd_factor(ff, out, err);
        }
        if (bench->parsed()) {
            return cmd_bench(bf, out);
        }
        if (cases->parsed()) {
            return cmd_cases(cf, out);
        }
        if (selftest->parsed()) {
            return cmd_selftest(out);
        }
    } catch (const ValidationError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const DomainError &e) {
        err << "usage error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace shorlab::cli
