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
 * Exception types shared by every shor-lab module.
 */
#pragma once

#include <stdexcept>
#include <string>

namespace shorlab {

/// Argument outside the mathematical domain of an operation (gcd(0, 0), modulus < 2, ...).
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/// Structurally invalid input: out-of-range qubit, duplicate index, width mismatch.
class ValidationError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// A gate kind the operation cannot handle.
class UnsupportedGateError : public std::invalid_argument {
  public:
    using std::invalid_argument::invalid_argument;
};

/// Gate budget or memory budget exceeded.
class CapacityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Circuit exceeds the configured qubit limit.
class NotApplicableError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

} // namespace shorlab
