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
 * Command-line front end: factor, bench, cases, selftest.
 */
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace shorlab::cli {

inline constexpr int kExitSuccess = 0;
inline constexpr int kExitNoFactor = 2;
inline constexpr int kExitNotApplicable = 3;
inline constexpr int kExitUsage = 64;

/// Runs one invocation; args excludes the program name. Returns the process exit code.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

/// Parses "1-12", "3" or "1,3,5-7" into ascending case indices. Throws ValidationError.
std::vector<int> parse_case_range(const std::string &text, int max_index);

/// Byte count with optional K/M/G suffix (binary multiples). Throws ValidationError.
std::uint64_t parse_byte_size(const std::string &text);

} // namespace shorlab::cli
