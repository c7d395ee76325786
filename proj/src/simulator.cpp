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
#include "shorlab/simulator.hpp"

#include "shorlab/errors.hpp"

#include <fftw3.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <memory>
#include <numbers>
#include <random>
#include <sstream>

namespace shorlab {

namespace {

constexpr std::size_t kMaxQubits = 40;
// labels + sort keys + two complex FFT buffers + output
constexpr std::uint64_t kFastBytesPerOutcome = 8 + 8 + 16 + 16 + 8;

std::string format_double(double v) {
    std::array<char, 32> buf{};
    const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), v);
    return {buf.data(), res.ptr};
}

// Index with a zero bit inserted at position `bit`.
inline std::uint64_t insert_zero(std::uint64_t idx, Qubit bit) {
    const std::uint64_t low = idx & ((std::uint64_t{1} << bit) - 1);
    return ((idx >> bit) << (bit + 1)) | low;
}

struct FftwFree {
    void operator()(void *p) const { fftw_free(p); }
};
struct FftwPlanDestroy {
    void operator()(fftw_plan_s *p) const { fftw_destroy_plan(p); }
};
using FftwBuffer = std::unique_ptr<fftw_complex[], FftwFree>;
using FftwPlan = std::unique_ptr<fftw_plan_s, FftwPlanDestroy>;

} // namespace

double StateVector::norm() const {
    double sum = 0.0;
    for (const Amplitude &a : amplitudes_) {
        sum += std::norm(a);
    }
    return std::sqrt(sum);
}

std::uint64_t dense_state_bytes(std::size_t n) {
    if (n >= 60) {
        return UINT64_MAX;
    }
    return (std::uint64_t{1} << n) * sizeof(Amplitude);
}

StateVector init_state(std::size_t n, std::uint64_t memory_budget) {
    if (n == 0) {
        throw DomainError("init_state: need at least one qubit");
    }
    if (n > kMaxQubits || dense_state_bytes(n) > memory_budget) {
        throw CapacityError("dense state of " + std::to_string(n) + " qubits exceeds memory budget of " +
                            std::to_string(memory_budget) + " bytes");
    }
    std::vector<Amplitude> amps(std::size_t{1} << n);
    amps[0] = 1.0;
    return StateVector(n, std::move(amps));
}

void apply_gate(StateVector &state, const Gate &gate) {
    auto amps = state.amplitudes();
    const std::uint64_t dim = amps.size();
    const std::uint64_t half = dim >> 1;
    const auto &q = gate.qubits;
    switch (gate.kind) {
    case GateKind::H: {
        const std::uint64_t mask = std::uint64_t{1} << q[0];
        const double s = std::numbers::sqrt2 / 2.0;
        for (std::uint64_t idx = 0; idx < half; ++idx) {
            const std::uint64_t i0 = insert_zero(idx, q[0]);
            const Amplitude a = amps[i0];
            const Amplitude b = amps[i0 | mask];
            amps[i0] = (a + b) * s;
            amps[i0 | mask] = (a - b) * s;
        }
        break;
    }
    case GateKind::X: {
        const std::uint64_t mask = std::uint64_t{1} << q[0];
        for (std::uint64_t idx = 0; idx < half; ++idx) {
            const std::uint64_t i0 = insert_zero(idx, q[0]);
            std::swap(amps[i0], amps[i0 | mask]);
        }
        break;
    }
    case GateKind::SWAP:
    case GateKind::CSWAP: {
        const bool controlled = gate.kind == GateKind::CSWAP;
        const Qubit a = controlled ? q[1] : q[0];
        const Qubit b = controlled ? q[2] : q[1];
        const std::uint64_t ma = std::uint64_t{1} << a;
        const std::uint64_t mb = std::uint64_t{1} << b;
        const std::uint64_t mc = controlled ? std::uint64_t{1} << q[0] : 0;
        for (std::uint64_t i = 0; i < dim; ++i) {
            // Visit each pair once, from the member with bit a set and bit b clear.
            if ((i & ma) && !(i & mb) && (i & mc) == mc) {
                std::swap(amps[i], amps[i ^ (ma | mb)]);
            }
        }
        break;
    }
    case GateKind::PHASE:
    case GateKind::CPHASE: {
        const Amplitude factor = std::polar(1.0, gate.angle);
        std::uint64_t mask = std::uint64_t{1} << q[0];
        if (gate.kind == GateKind::CPHASE) {
            mask |= std::uint64_t{1} << q[1];
        }
        for (std::uint64_t i = 0; i < dim; ++i) {
            if ((i & mask) == mask) {
                amps[i] *= factor;
            }
        }
        break;
    }
    }
}

void apply(StateVector &state, const Circuit &c) {
    if (c.width() != state.num_qubits()) {
        throw ValidationError("apply: circuit width " + std::to_string(c.width()) + " != state width " +
                              std::to_string(state.num_qubits()));
    }
    for (const Gate &g : c.gates()) {
        apply_gate(state, g);
    }
}

Circuit iqft_circuit(std::size_t k, Qubit offset, std::size_t width) {
    if (k == 0) {
        throw DomainError("iqft_circuit: register must have at least one qubit");
    }
    Circuit c(width == 0 ? offset + k : width);
    for (std::size_t i = 0; i < k / 2; ++i) {
        c.append(Gate::swap(offset + static_cast<Qubit>(i), offset + static_cast<Qubit>(k - 1 - i)));
    }
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t m = 0; m < j; ++m) {
            const double angle = -std::numbers::pi / std::ldexp(1.0, static_cast<int>(j - m));
            c.append(Gate::cphase(offset + static_cast<Qubit>(m), offset + static_cast<Qubit>(j), angle));
        }
        c.append(Gate::h(offset + static_cast<Qubit>(j)));
    }
    return c;
}

std::vector<double> marginal_distribution(const StateVector &state, QubitRange reg) {
    if (reg.count == 0) {
        throw ValidationError("register is empty");
    }
    if (reg.first + reg.count > state.num_qubits()) {
        throw ValidationError("register exceeds state width");
    }
    const std::uint64_t mask = (std::uint64_t{1} << reg.count) - 1;
    std::vector<double> probs(std::size_t{1} << reg.count, 0.0);
    const auto amps = state.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        probs[(i >> reg.first) & mask] += std::norm(amps[i]);
    }
    return probs;
}

std::string Histogram::bitstring(std::uint64_t outcome) const {
    std::string s(register_width, '0');
    for (std::size_t bit = 0; bit < register_width; ++bit) {
        if ((outcome >> bit) & 1U) {
            s[register_width - 1 - bit] = '1';
        }
    }
    return s;
}

Histogram sample(std::span<const double> probabilities, std::size_t register_width, std::uint64_t shots,
                 std::uint64_t seed) {
    if (register_width == 0) {
        throw ValidationError("register is empty");
    }
    if (probabilities.size() != (std::size_t{1} << register_width)) {
        throw ValidationError("probability vector length does not match register width");
    }
    if (shots == 0) {
        throw ValidationError("shots must be positive");
    }
    std::mt19937_64 rng(seed);
    std::discrete_distribution<std::uint64_t> dist(probabilities.begin(), probabilities.end());
    Histogram h{register_width, shots, {}};
    for (std::uint64_t s = 0; s < shots; ++s) {
        ++h.counts[dist(rng)];
    }
    return h;
}

Histogram sample(const StateVector &state, QubitRange reg, std::uint64_t shots, std::uint64_t seed) {
    const auto probs = marginal_distribution(state, reg);
    return sample(probs, reg.count, shots, seed);
}

std::string histogram_to_csv(const Histogram &h) {
    std::string out = "bitstring,count,probability\n";
    for (const auto &[outcome, count] : h.counts) {
        out += h.bitstring(outcome);
        out += ',';
        out += std::to_string(count);
        out += ',';
        out += format_double(static_cast<double>(count) / static_cast<double>(h.shots));
        out += '\n';
    }
    return out;
}

Histogram histogram_from_csv(const std::string &text) {
    std::istringstream in(text);
    std::string line;
    if (!std::getline(in, line) || line != "bitstring,count,probability") {
        throw ValidationError("histogram CSV: missing header");
    }
    Histogram h;
    bool first = true;
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos) {
            throw ValidationError("histogram CSV: malformed row '" + line + "'");
        }
        const std::string bits = line.substr(0, c1);
        if (first) {
            h.register_width = bits.size();
            first = false;
        } else if (bits.size() != h.register_width) {
            throw ValidationError("histogram CSV: inconsistent bitstring width");
        }
        std::uint64_t outcome = 0;
        for (const char ch : bits) {
            if (ch != '0' && ch != '1') {
                throw ValidationError("histogram CSV: bad bitstring '" + bits + "'");
            }
            outcome = (outcome << 1) | static_cast<std::uint64_t>(ch - '0');
        }
        const std::uint64_t count = std::stoull(line.substr(c1 + 1, c2 - c1 - 1));
        h.counts[outcome] = count;
        h.shots += count;
    }
    return h;
}

nlohmann::json histogram_to_json(const Histogram &h) {
    nlohmann::json counts = nlohmann::json::array();
    for (const auto &[outcome, count] : h.counts) {
        counts.push_back({{"bitstring", h.bitstring(outcome)},
                          {"count", count},
                          {"probability", static_cast<double>(count) / static_cast<double>(h.shots)}});
    }
    return {{"register_width", h.register_width}, {"shots", h.shots}, {"counts", std::move(counts)}};
}

std::uint64_t fast_backend_bytes(std::size_t k) {
    if (k >= 58) {
        return UINT64_MAX;
    }
    return (std::uint64_t{1} << k) * kFastBytesPerOutcome;
}

std::vector<double> exact_distribution_fast(std::size_t k, const std::function<std::uint64_t(std::uint64_t)> &work_map,
                                            std::uint64_t memory_budget) {
    if (k == 0) {
        throw DomainError("exact_distribution_fast: register must have at least one qubit");
    }
    if (k > kMaxQubits || fast_backend_bytes(k) > memory_budget) {
        throw CapacityError("fast backend for a " + std::to_string(k) + "-qubit register exceeds memory budget of " +
                            std::to_string(memory_budget) + " bytes");
    }
    const std::uint64_t dim = std::uint64_t{1} << k;

    std::vector<std::pair<std::uint64_t, std::uint64_t>> keyed(dim);
    for (std::uint64_t i = 0; i < dim; ++i) {
        keyed[i] = {work_map(i), i};
    }
    std::sort(keyed.begin(), keyed.end());

    std::vector<double> unnormalized(dim, 0.0);
    double uniform = 0.0;

    FftwBuffer in(fftw_alloc_complex(dim));
    FftwBuffer out(fftw_alloc_complex(dim));
    if (!in || !out) {
        throw CapacityError("exact_distribution_fast: FFT buffer allocation failed");
    }
    // FFTW planning is not thread-safe; plans are created per call on the calling thread.
    FftwPlan plan(fftw_plan_dft_1d(static_cast<int>(dim), in.get(), out.get(), FFTW_FORWARD, FFTW_ESTIMATE));
    std::vector<double> cos_table;

    for (std::size_t begin = 0; begin < keyed.size();) {
        std::size_t end = begin + 1;
        while (end < keyed.size() && keyed[end].first == keyed[begin].first) {
            ++end;
        }
        const std::size_t size = end - begin;
        if (size == 1) {
            uniform += 1.0;
        } else if (size == 2) {
            // |1 + w^{dy}|^2 = 2 + 2 cos(2 pi d y / dim)
            if (cos_table.empty()) {
                cos_table.resize(dim);
                for (std::uint64_t j = 0; j < dim; ++j) {
                    cos_table[j] = std::cos(2.0 * std::numbers::pi * static_cast<double>(j) / static_cast<double>(dim));
                }
            }
            const std::uint64_t d = keyed[begin + 1].second - keyed[begin].second;
            uniform += 2.0;
            for (std::uint64_t y = 0; y < dim; ++y) {
                unnormalized[y] += 2.0 * cos_table[(d * y) & (dim - 1)];
            }
        } else {
            std::fill_n(&in[0][0], 2 * dim, 0.0);
            for (std::size_t j = begin; j < end; ++j) {
                in[keyed[j].second][0] = 1.0;
            }
            fftw_execute(plan.get());
            for (std::uint64_t y = 0; y < dim; ++y) {
                unnormalized[y] += out[y][0] * out[y][0] + out[y][1] * out[y][1];
            }
        }
        begin = end;
    }

    const double scale = 1.0 / (static_cast<double>(dim) * static_cast<double>(dim));
    std::vector<double> probs(dim);
    for (std::uint64_t y = 0; y < dim; ++y) {
        probs[y] = std::max(0.0, (unnormalized[y] + uniform) * scale);
    }
    return probs;
}

} // namespace shorlab
