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

#include "anyonpair/errors.hpp"

#include <iostream>
#include <mutex>

namespace anyonpair {

std::string_view to_string(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::domain: return "domain error";
        case ErrorKind::sampling: return "sampling error";
        case ErrorKind::window: return "window error";
        case ErrorKind::pairing: return "pairing error";
        case ErrorKind::grid: return "grid error";
        case ErrorKind::precondition: return "precondition error";
        case ErrorKind::ill_posed: return "ill-posed estimate";
        case ErrorKind::numerical: return "numerical-quality error";
        case ErrorKind::config: return "config error";
    }
    return "error";
}

Error::Error(ErrorKind kind, const std::string& message)
    : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

void fail(ErrorKind kind, const std::string& message) { throw Error(kind, message); }

namespace {

std::mutex g_warning_mutex;
WarningHandler g_warning_handler;

}  // namespace

WarningHandler set_warning_handler(WarningHandler handler) {
    std::lock_guard lock(g_warning_mutex);
    std::swap(g_warning_handler, handler);
    return handler;
}

void warn(std::string_view message) {
    std::lock_guard lock(g_warning_mutex);
    if (g_warning_handler) {
        g_warning_handler(message);
    } else {
        std::cerr << "warning: " << message << '\n';
    }
}

}  // namespace anyonpair
