/*
 * Copyright 2026 The tdescope Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <stdexcept>
#include <string>

namespace tdescope {

/// Base class for operational failures. Programming-contract violations
/// (e.g. permuting a word of the wrong width) throw std::invalid_argument
/// instead.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Invalid configuration or command usage. CLI exit status 2.
struct UsageError : Error {
    using Error::Error;
};

/// File or stream failure. CLI exit status 3.
struct IoError : Error {
    using Error::Error;
};

/// Malformed data: bad padding, truncated ciphertext. CLI exit status 4.
struct DataError : Error {
    using Error::Error;
};

/// Misuse of the clocked engine (stepping past completion, unknown probe).
struct EngineError : Error {
    using Error::Error;
};

/// KAT file syntax error; carries the 1-based line and the offending token.
struct KatParseError : Error {
    KatParseError(int line_number, std::string offending, const std::string& message)
        : Error("line " + std::to_string(line_number) + ": " + message),
          line(line_number),
          token(std::move(offending)) {}

    int line;
    std::string token;
};

}  // namespace tdescope
