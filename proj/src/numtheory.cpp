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
#include "shorlab/numtheory.hpp"

#include "shorlab/errors.hpp"

#include <algorithm>
#include <array>

namespace shorlab {

namespace {

constexpr std::uint64_t kBruteForceOrderLimit = std::uint64_t{1} << 20;

// Register widths for the catalog, indexed by case number - 1.
constexpr std::array<int, 12> kProposedWidths{4, 8, 12, 12, 12, 12, 12, 12, 12, 12, 12, 13};

// e such that n == 3 * (2^e + 1), if n has that form.
std::optional<std::uint64_t> fermat_form_exponent(const BigInt &n) {
    if (n % 3 != 0) {
        return std::nullopt;
    }
    const BigInt q = n / 3;
    if (q < 3) {
        return std::nullopt;
    }
    const auto e = pow2_exponent(BigInt(q - 1));
    if (!e || *e == 0) {
        return std::nullopt;
    }
    return e;
}

std::vector<std::uint64_t> divisors_ascending(std::uint64_t v) {
    std::vector<std::uint64_t> small;
    std::vector<std::uint64_t> large;
    for (std::uint64_t d = 1; d * d <= v; ++d) {
        if (v % d == 0) {
            small.push_back(d);
            if (d != v / d) {
                large.push_back(v / d);
            }
        }
    }
    small.insert(small.end(), large.rbegin(), large.rend());
    return small;
}

} // namespace

BigInt gcd(const BigInt &a, const BigInt &b) {
    if (a < 0 || b < 0) {
        throw DomainError("gcd: arguments must be non-negative");
    }
    if (a == 0 && b == 0) {
        throw DomainError("gcd: both arguments are zero");
    }
    BigInt g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

BigInt mod_pow(const BigInt &base, const BigInt &exp, const BigInt &modulus) {
    if (modulus < 2) {
        throw DomainError("mod_pow: modulus must be at least 2");
    }
    if (exp < 0) {
        throw DomainError("mod_pow: exponent must be non-negative");
    }
    BigInt result;
    mpz_powm(result.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), modulus.get_mpz_t());
    return result;
}

std::optional<std::uint64_t> pow2_exponent(const BigInt &m) {
    if (m < 1) {
        throw DomainError("pow2_exponent: argument must be positive");
    }
    if (mpz_popcount(m.get_mpz_t()) != 1) {
        return std::nullopt;
    }
    return mpz_scan1(m.get_mpz_t(), 0);
}

std::uint64_t multiplicative_order(const BigInt &a, const BigInt &n) {
    if (n < 2) {
        throw DomainError("multiplicative_order: modulus must be at least 2");
    }
    const BigInt base = ((a % n) + n) % n;
    if (base == 0 || gcd(base, n) != 1) {
        throw DomainError("multiplicative_order: gcd(a, N) != 1");
    }
    if (n < kBruteForceOrderLimit) {
        const std::uint64_t modulus = n.get_ui();
        const std::uint64_t b = base.get_ui();
        std::uint64_t x = b;
        std::uint64_t r = 1;
        while (x != 1) {
            x = x * b % modulus;
            ++r;
        }
        return r;
    }
    const auto e = fermat_form_exponent(n);
    if (!e || base != 2) {
        throw DomainError("multiplicative_order: only a = 2 with N = 3(2^e + 1) is supported above 2^20");
    }
    for (const std::uint64_t d : divisors_ascending(2 * *e)) {
        if (mod_pow(base, BigInt(static_cast<unsigned long>(d)), n) == 1) {
            return d;
        }
    }
    throw DomainError("multiplicative_order: order does not divide 2e");
}

std::optional<FactorPair> extract_factors(const BigInt &a, std::uint64_t r, const BigInt &n) {
    if (r < 1) {
        throw DomainError("extract_factors: period must be positive");
    }
    if (n < 2 || gcd(((a % n) + n) % n, n) != 1) {
        throw DomainError("extract_factors: gcd(a, N) != 1");
    }
    if (r % 2 != 0) {
        return std::nullopt;
    }
    const BigInt h = mod_pow(a, BigInt(static_cast<unsigned long>(r / 2)), n);
    for (const BigInt &candidate : {BigInt(h - 1), BigInt(h + 1)}) {
        if (candidate <= 0) {
            continue;
        }
        const BigInt d = gcd(candidate, n);
        if (d > 1 && d < n) {
            BigInt other = n / d;
            if (d <= other) {
                return FactorPair{d, std::move(other)};
            }
            return FactorPair{std::move(other), d};
        }
    }
    return std::nullopt;
}

FactoringCase make_case(int index, std::uint64_t e, int k_proposed) {
    FactoringCase c;
    c.index = index;
    c.e = e;
    c.p = 3;
    mpz_ui_pow_ui(c.q.get_mpz_t(), 2, e);
    c.q += 1;
    c.n = c.p * c.q;
    c.bits_of_n = mpz_sizeinbase(c.n.get_mpz_t(), 2);
    c.label_bits = 2 * e;
    c.k_proposed = k_proposed;
    c.k_sota = static_cast<int>(2 * e);
    c.expected_r = 2 * e;
    return c;
}

const std::vector<FactoringCase> &case_catalog() {
    static const std::vector<FactoringCase> catalog = [] {
        std::vector<FactoringCase> cases;
        cases.reserve(kProposedWidths.size());
        std::uint64_t e = 2;
        for (std::size_t i = 0; i < kProposedWidths.size(); ++i, e *= 2) {
            cases.push_back(make_case(static_cast<int>(i + 1), e, kProposedWidths[i]));
        }
        return cases;
    }();
    return catalog;
}

const FactoringCase *find_case(const BigInt &n) {
    const auto &cases = case_catalog();
    const auto it = std::find_if(cases.begin(), cases.end(), [&](const FactoringCase &c) { return c.n == n; });
    return it == cases.end() ? nullptr : &*it;
}

nlohmann::json case_to_json(const FactoringCase &c) {
    return {
        {"index", std::to_string(c.index)},
        {"e", std::to_string(c.e)},
        {"p", c.p.get_str()},
        {"q", c.q.get_str()},
        {"N", c.n.get_str()},
        {"bits_of_n", std::to_string(c.bits_of_n)},
        {"label_bits", std::to_string(c.label_bits)},
        {"k_proposed", std::to_string(c.k_proposed)},
        {"k_sota", std::to_string(c.k_sota)},
        {"expected_r", std::to_string(c.expected_r)},
    };
}

nlohmann::json catalog_to_json(std::span<const FactoringCase> cases) {
    nlohmann::json out = nlohmann::json::array();
    for (const auto &c : cases) {
        out.push_back(case_to_json(c));
    }
    return out;
}

BigInt parse_decimal(const std::string &text) {
    if (text.empty() || !std::all_of(text.begin(), text.end(), [](char ch) { return ch >= '0' && ch <= '9'; })) {
        throw ValidationError("not a non-negative decimal integer: '" + text + "'");
    }
    return BigInt(text, 10);
}

} // namespace shorlab
