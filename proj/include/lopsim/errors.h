// Copyright 2026 The lopsim Authors
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

#ifndef LOPSIM_ERRORS_H
#define LOPSIM_ERRORS_H

#include <stdexcept>
#include <string>

namespace lopsim {

enum class ErrorCode {
    Config = 1,
    Mode = 2,
    Normalization = 3,
    Unitarity = 4,
    Encoding = 5,
};

/// Base class for every error raised by the simulator. The code is what the C
/// API hands back across the library boundary.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &message) : std::runtime_error(message), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Malformed configuration: bad element wiring, unknown stage, non-square matrix.
struct ConfigError : Error {
    explicit ConfigError(const std::string &m) : Error(ErrorCode::Config, m) {}
};

/// A mode that is not registered, or registries that do not match.
struct ModeError : Error {
    explicit ModeError(const std::string &m) : Error(ErrorCode::Mode, m) {}
};

struct NormalizationError : Error {
    explicit NormalizationError(const std::string &m) : Error(ErrorCode::Normalization, m) {}
};

struct UnitarityError : Error {
    explicit UnitarityError(const std::string &m) : Error(ErrorCode::Unitarity, m) {}
};

/// A state that does not carry the requested qubit encoding.
struct EncodingError : Error {
    explicit EncodingError(const std::string &m) : Error(ErrorCode::Encoding, m) {}
};

}  // namespace lopsim

#endif
