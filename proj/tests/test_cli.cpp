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

#include "shorlab/cli.hpp"
#include "shorlab/errors.hpp"

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace shorlab;

namespace {

struct Outcome {
    int code;
    std::string out;
    std::string err;
};

Outcome run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string slurp(const std::filesystem::path &p) {
    std::ifstream f(p, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::filesystem::path temp_path(const std::string &name) {
    return std::filesystem::temp_directory_path() / ("shor_lab_test_" + name);
}

} // namespace

TEST_CASE("factor") {
    SUBCASE("15") {
        const auto r = run({"factor", "15", "--k", "4", "--shots", "10000", "--seed", "7"});
        CHECK(r.code == 0);
        CHECK(r.out.find("p: 3\n") != std::string::npos);
        CHECK(r.out.find("q: 5\n") != std::string::npos);
    }
    SUBCASE("771 with catalog default k") {
        const auto r = run({"factor", "771"});
        CHECK(r.code == 0);
        CHECK(r.out.find("k: 12") != std::string::npos);
        CHECK(r.out.find("q: 257\n") != std::string::npos);
    }
    SUBCASE("not applicable") {
        const auto r = run({"factor", "771", "--method", "sota", "--k", "16", "--qubit-limit", "31"});
        CHECK(r.code == 3);
        CHECK(r.out.find("not applicable: 32 qubits > limit 31") != std::string::npos);
    }
    SUBCASE("capacity") {
        const auto r = run({"factor", "51", "--k", "8", "--backend", "dense", "--memory-budget", "1K"});
        CHECK(r.code == 3);
        CHECK(r.out.find("CAPACITY") != std::string::npos);
    }
    SUBCASE("usage errors") {
        CHECK(run({"factor", "abc", "--k", "4"}).code == 64);
        CHECK(run({"factor", "9", "--k", "4"}).code == 64);
        CHECK(run({"factor", "1001", "--shots", "5"}).code == 64); // no catalog k
        CHECK(run({"factor", "30", "--k", "4"}).code == 64);
        CHECK(run({"factor", "15", "--k", "4", "--bogus"}).code == 64);
        CHECK(run({"factor", "15", "--k", "4", "--method", "magic"}).code == 64);
        CHECK(run({"factor", "15", "--k", "4", "--format", "xml"}).code == 64);
        CHECK(run({}).code == 64);
        CHECK(run({"launch"}).code == 64);
    }
    SUBCASE("json and csv outputs") {
        const auto json_path = temp_path("factor.json");
        const auto csv_path = temp_path("factor.csv");
        REQUIRE(run({"factor", "15", "--k", "4", "--out", json_path.string()}).code == 0);
        const auto doc = nlohmann::json::parse(slurp(json_path));
        CHECK(doc["schema"] == "shor-lab/v1");
        CHECK(doc["factors"]["q"] == "5");
        REQUIRE(run({"factor", "15", "--k", "4", "--format", "csv", "--out", csv_path.string()}).code == 0);
        CHECK(slurp(csv_path).rfind("bitstring,count,probability\n", 0) == 0);
        std::filesystem::remove(json_path);
        std::filesystem::remove(csv_path);
    }
    SUBCASE("help") { CHECK(run({"--help"}).code == 0); }
}

TEST_CASE("memory budget from the environment") {
    ::setenv("SHOR_LAB_MEMORY_BUDGET", "2K", 1);
    CHECK(run({"factor", "51", "--k", "8", "--backend", "dense"}).code == 3);
    CHECK(run({"factor", "51", "--k", "8", "--backend", "dense", "--memory-budget", "64M"}).code == 0);
    ::unsetenv("SHOR_LAB_MEMORY_BUDGET");
    CHECK(run({"factor", "51", "--k", "8", "--backend", "dense"}).code == 0);
}

TEST_CASE("bench") {
    SUBCASE("cases 1-2") {
        const auto path = temp_path("bench.csv");
        const auto r = run({"bench", "--cases", "1-2", "--shots", "1000", "--format", "csv", "--out", path.string()});
        CHECK(r.code == 0);
        const std::string csv = slurp(path);
        CHECK(std::count(csv.begin(), csv.end(), '\n') == 5);
        CHECK(csv.find(",NOT_APPLICABLE") == std::string::npos);
        std::filesystem::remove(path);
    }
    SUBCASE("case 3 sota") {
        const auto r = run({"bench", "--cases", "3", "--methods", "sota", "--format", "csv"});
        CHECK(r.code == 0);
        CHECK(r.out == "case,method,qubits,gen_time_s,exec_time_s,shots,status\n3,sota,32,,,10000,NOT_APPLICABLE\n");
    }
    SUBCASE("markdown by default") {
        const auto r = run({"bench", "--cases", "1", "--shots", "100"});
        CHECK(r.code == 0);
        CHECK(r.out.rfind("| Case |", 0) == 0);
    }
    SUBCASE("bad ranges") {
        CHECK(run({"bench", "--cases", "0-3"}).code == 64);
        CHECK(run({"bench", "--cases", "5-2"}).code == 64);
        CHECK(run({"bench", "--cases", "13"}).code == 64);
        CHECK(run({"bench", "--cases", "x"}).code == 64);
        CHECK(run({"bench", "--methods", "magic"}).code == 64);
    }
}

TEST_CASE("parse helpers") {
    CHECK(cli::parse_case_range("1-12", 12).size() == 12);
    CHECK(cli::parse_case_range("1,3,5-7", 12) == std::vector<int>{1, 3, 5, 6, 7});
    CHECK(cli::parse_case_range("3", 12) == std::vector<int>{3});
    CHECK_THROWS_AS(cli::parse_case_range("", 12), ValidationError);
    CHECK(cli::parse_byte_size("4G") == (std::uint64_t{4} << 30));
    CHECK(cli::parse_byte_size("123") == 123);
    CHECK_THROWS_AS(cli::parse_byte_size("12X"), ValidationError);
}

TEST_CASE("cases") {
    const auto r = run({"cases"});
    CHECK(r.code == 0);
    // header, separator, 12 rows
    CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 14);
    CHECK(r.out.find("| 1 | 4 | 4 | 2 | 4 | 4 | 5 | 15 |") != std::string::npos);
    CHECK(r.out.find("| 65537 |") != std::string::npos);
    CHECK(r.out.find("...") != std::string::npos);

    const auto full = run({"cases", "--full"});
    CHECK(full.out.find("...") == std::string::npos);

    const auto json = nlohmann::json::parse(run({"cases", "--format", "json"}).out);
    CHECK(json.size() == 12);
    CHECK(json[0]["N"] == "15");
}

TEST_CASE("selftest") {
    const auto r = run({"selftest"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS simulator/iqft_matches_dft_k3") != std::string::npos);
    CHECK(r.out.find("PASS pipeline/golden_n15_support") != std::string::npos);
    CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("identical flags give identical output apart from timings") {
    const auto strip = [](const std::string &s) {
        std::istringstream in(s);
        std::string line;
        std::string kept;
        while (std::getline(in, line)) {
            if (line.find("time_s") == std::string::npos) {
                kept += line + "\n";
            }
        }
        return kept;
    };
    const auto a = run({"factor", "51", "--k", "8", "--seed", "9"});
    const auto b = run({"factor", "51", "--k", "8", "--seed", "9"});
    CHECK(strip(a.out) == strip(b.out));
}
