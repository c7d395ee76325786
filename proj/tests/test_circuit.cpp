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

#include "shorlab/circuit.hpp"
#include "shorlab/errors.hpp"
#include "shorlab/modexp.hpp"
#include "shorlab/simulator.hpp"

#include <cmath>
#include <limits>
#include <random>

using namespace shorlab;

TEST_CASE("new circuit") {
    CHECK(Circuit(4).size() == 0);
    CHECK(Circuit(12).width() == 12);
    Circuit one(1);
    one.append(Gate::h(0));
    CHECK(one.size() == 1);
    CHECK_THROWS_AS(Circuit(0), DomainError);
}

TEST_CASE("append validates operands") {
    Circuit c(4);
    c.append(Gate::swap(2, 3));
    CHECK(c.size() == 1);
    CHECK_THROWS_AS(c.append(Gate::swap(3, 3)), ValidationError);
    CHECK_THROWS_AS(c.append(Gate::h(5)), ValidationError);
    CHECK_THROWS_AS(c.append(Gate::cswap(1, 2, 1)), ValidationError);
    CHECK_THROWS_AS(c.append(Gate::phase(0, std::numeric_limits<double>::infinity())), ValidationError);
    CHECK(c.size() == 1);
}

TEST_CASE("append leaves copies untouched") {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::swap(0, 1));
    const Circuit snapshot = c;
    c.append(Gate::cphase(0, 2, 0.5));
    CHECK(snapshot.size() == 2);
    CHECK(snapshot.width() == 3);
    CHECK(snapshot.gates()[1] == Gate::swap(0, 1));
    CHECK(c.size() == 3);

    Circuit other(2);
    CHECK_THROWS_AS(c.append(other), ValidationError);
}

TEST_CASE("control") {
    Circuit one(2);
    one.append(Gate::swap(0, 1));
    const Circuit ctl = control(one, 2);
    REQUIRE(ctl.size() == 1);
    CHECK(ctl.width() == 3);
    CHECK(ctl.gates()[0] == Gate::cswap(2, 0, 1));

    CHECK(control(Circuit(4), 4).empty());

    const Circuit cascade = control(build_sota(1, 4), 4);
    CHECK(cascade.size() == 6);
    CHECK(gate_count(cascade)[GateKind::CSWAP] == 6);

    Circuit with_h(2);
    with_h.append(Gate::h(0));
    CHECK_THROWS_AS(control(with_h, 2), UnsupportedGateError);
    CHECK_THROWS_AS(control(one, 1), ValidationError);
}

TEST_CASE("control preserves gate count and controls every gate") {
    std::mt19937 rng(17);
    for (int t = 0; t < 50; ++t) {
        const std::size_t width = 2 + rng() % 8;
        Circuit c(width);
        const std::size_t gates = rng() % 40;
        for (std::size_t g = 0; g < gates; ++g) {
            const Qubit a = rng() % width;
            Qubit b = rng() % width;
            if (a == b) {
                b = (b + 1) % width;
            }
            c.append(Gate::swap(a, b));
        }
        const Circuit ctl = control(c, static_cast<Qubit>(width));
        REQUIRE(ctl.size() == c.size());
        for (const Gate &g : ctl.gates()) {
            CHECK(g.kind == GateKind::CSWAP);
            CHECK(g.qubits[0] == width);
        }
    }
}

TEST_CASE("embed shifts indices") {
    Circuit c(2);
    c.append(Gate::swap(0, 1));
    const Circuit e = embed(c, 5, 3);
    CHECK(e.width() == 5);
    CHECK(e.gates()[0] == Gate::swap(3, 4));
    CHECK_THROWS_AS(embed(c, 4, 3), ValidationError);
}

TEST_CASE("gate_count") {
    CHECK(gate_count(Circuit(3)).total() == 0);
    CHECK(gate_count(build_sota(3, 4))[GateKind::SWAP] == 24);
    const auto iqft = gate_count(iqft_circuit(3));
    CHECK(iqft[GateKind::H] == 3);
    CHECK(iqft[GateKind::CPHASE] == 3);
    CHECK(iqft[GateKind::SWAP] == 1);
    CHECK(iqft.total() == 7);
}

TEST_CASE("json dump round trips") {
    Circuit c(3);
    c.append(Gate::h(0)).append(Gate::x(1)).append(Gate::cswap(0, 1, 2)).append(Gate::cphase(2, 0, -0.25));
    const auto doc = to_json(c);
    CHECK(doc["width"] == 3);
    CHECK(doc["gates"][2]["kind"] == "CSWAP");
    CHECK(doc["gates"][2]["qubits"] == nlohmann::json::array({0, 1, 2}));
    CHECK_FALSE(doc["gates"][0].contains("angle"));
    CHECK(doc["gates"][3]["angle"] == -0.25);
    CHECK(circuit_from_json(doc) == c);

    auto bad = doc;
    bad["gates"][0]["qubits"] = nlohmann::json::array({7});
    CHECK_THROWS_AS(circuit_from_json(bad), ValidationError);
}

TEST_CASE("permutation circuits denote permutation matrices") {
    std::mt19937 rng(23);
    for (int t = 0; t < 20; ++t) {
        const std::size_t width = 1 + rng() % 6;
        Circuit c(width);
        for (int g = 0; g < 12; ++g) {
            const auto pick = rng() % 3;
            if (pick == 0 || width < 2) {
                c.append(Gate::x(rng() % width));
            } else if (pick == 1 || width < 3) {
                const Qubit a = rng() % width;
                c.append(Gate::swap(a, (a + 1 + rng() % (width - 1)) % width));
            } else {
                const Qubit a = rng() % width;
                const Qubit b = (a + 1) % width;
                const Qubit ctl = (a + 2) % width;
                c.append(Gate::cswap(ctl, a, b));
            }
        }
        const std::uint64_t dim = std::uint64_t{1} << width;
        std::vector<int> column_hits(dim, 0);
        for (std::uint64_t x = 0; x < dim; ++x) {
            StateVector s = init_state(width);
            s.amplitudes()[0] = 0.0;
            s.amplitudes()[x] = 1.0;
            apply(s, c);
            int ones = 0;
            for (std::uint64_t y = 0; y < dim; ++y) {
                const auto a = s.amplitudes()[y];
                const bool one = std::abs(a - Amplitude(1.0)) < 1e-12;
                REQUIRE((one || std::abs(a) < 1e-12));
                if (one) {
                    ++ones;
                    ++column_hits[y];
                }
            }
            REQUIRE(ones == 1);
        }
        for (const int hits : column_hits) {
            CHECK(hits == 1);
        }
    }
}
