// Copyright 2026 The anyonpair Authors
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

#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace anyonpair {

enum class ErrorKind {
    domain,        // argument outside its physical or mathematical domain
    sampling,      // grid too coarse for the signal it has to carry
    window,        // grid window too narrow for the signal support
    pairing,       // grid lacks the exact +x / -x pairing an operation needs
    grid,          // grids that must agree do not
    precondition,  // input violates a structural assumption (e.g. exchange symmetry)
    ill_posed,     // estimator has nothing to work with
    numerical,     // result breached an invariant beyond round-off
    config,        // malformed configuration input
};

std::string_view to_string(ErrorKind kind);

/// Every failure raised by the library. The kind drives the CLI exit code.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message);
    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

[[noreturn]] void fail(ErrorKind kind, const std::string& message);

inline void require(bool condition, ErrorKind kind, const std::string& message) {
    if (!condition) fail(kind, message);
}

// Non-fatal diagnostics (clamped probabilities, validity conditions that are
// only approximately met). Default handler prints to stderr.
using WarningHandler = std::function<void(std::string_view)>;

/// Installs `handler` and returns the previous one. Passing an empty function
/// restores the stderr default.
WarningHandler set_warning_handler(WarningHandler handler);
void warn(std::string_view message);

}  // namespace anyonpair
