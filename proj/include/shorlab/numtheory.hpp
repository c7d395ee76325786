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
 * Classical number theory: gcd, modular exponentiation, order oracle,
 * factor extraction from a period, and the Fermat-form case catalog.
 *
 * All integers that may hold N or its intermediates are arbitrary precision.
 */
#pragma once

#include <gmpxx.h>
#include <json.hpp>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace shorlab {

using BigInt = mpz_class;

/// Nontrivial factorization with 1 < p <= q and p * q == N.
struct FactorPair {
    BigInt p;
    BigInt q;

    friend bool operator==(const FactorPair &, const FactorPair &) = default;
};

/// One benchmark instance N = 3 * (2^e + 1).
struct FactoringCase {
    int index = 0;
    std::uint64_t e = 0;
    BigInt p;
    BigInt q;
    BigInt n;
    std::size_t bits_of_n = 0;
    /// The advertised "x-bit" label, which is 2e rather than bit_length(N).
    std::uint64_t label_bits = 0;
    int k_proposed = 0;
    int k_sota = 0;
    std::uint64_t expected_r = 0;
};

BigInt gcd(const BigInt &a, const BigInt &b);

/// base^exp mod modulus, result in [0, modulus).
BigInt mod_pow(const BigInt &base, const BigInt &exp, const BigInt &modulus);

/// i such that m == 2^i, or empty when m is not a power of two.
std::optional<std::uint64_t> pow2_exponent(const BigInt &m);

/**
 * Smallest r >= 1 with a^r == 1 (mod n).
 *
 * Brute force below 2^20. Above that only a = 2 with n = 3 * (2^e + 1) is
 * supported: the order of 2 divides 2e there, so the divisors of 2e are
 * tested in ascending order.
 */
std::uint64_t multiplicative_order(const BigInt &a, const BigInt &n);

/**
 * Factors of n from an even period r of a.
 *
 * Uses h = a^(r/2) mod n and tests gcd(h - 1, n), gcd(h + 1, n). A single
 * nontrivial divisor d is completed to (d, n / d).
 */
std::optional<FactorPair> extract_factors(const BigInt &a, std::uint64_t r, const BigInt &n);

/// Builds the case for N = 3 * (2^e + 1) with explicit register widths.
FactoringCase make_case(int index, std::uint64_t e, int k_proposed);

/// The twelve catalog cases, e = 2, 4, ..., 4096.
const std::vector<FactoringCase> &case_catalog();

/// Case whose N equals n, if any.
const FactoringCase *find_case(const BigInt &n);

nlohmann::json case_to_json(const FactoringCase &c);
nlohmann::json catalog_to_json(std::span<const FactoringCase> cases);

/// Parses a non-negative decimal string; throws ValidationError on anything else.
BigInt parse_decimal(const std::string &text);

} // namespace shorlab
