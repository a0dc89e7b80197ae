// Copyright 2026 The qdisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QDISC_ERRORS_H
#define QDISC_ERRORS_H

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>

namespace qdisc {

/// A single failed constraint, as reported by the validate_* functions.
struct Violation {
    /// Short stable identifier of the constraint, e.g. "povm.weight_sum".
    std::string constraint;
    /// Offending element or input index, when the constraint is per-item.
    std::optional<std::size_t> index;
    /// The quantity that was out of bounds.
    double value = 0;
    std::string detail;

    std::string str() const;
};

/// An argument lies outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
   public:
    using std::domain_error::domain_error;
};

/// The caller combined arguments that do not fit together (wrong mode, empty selection, ...).
class UsageError : public std::invalid_argument {
   public:
    using std::invalid_argument::invalid_argument;
};

/// A geometry or POVM failed validation.
class ValidationError : public std::runtime_error {
   public:
    explicit ValidationError(Violation v);
    const Violation &violation() const noexcept {
        return violation_;
    }

   private:
    Violation violation_;
};

}  // namespace qdisc

#endif
