/*
 * Copyright 2026 The mirrorkit Authors
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

#ifndef MIRRORKIT_ERRORS_HPP
#define MIRRORKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace mirrorkit {

/// Failure categories raised by the computational core. The numeric values
/// are mirrored one-to-one by `mk_status` in the C API.
enum class ErrorCode : int {
    InvalidArgument = 1,
    DivisionByNonUnit = 2,
    BadConstantTerm = 3,
    NotReversible = 4,
    RecurrenceBreakdown = 5,
    NonIntegral = 6,
    NotUnipotent = 7,
    NotNilpotent = 8,
    NoUnimodularPartner = 9,
    RayOutsideSupport = 10,
    CheckFailed = 11,
    IndexOutOfRange = 12,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

const char* error_code_name(ErrorCode code) noexcept;

} // namespace mirrorkit

#endif // MIRRORKIT_ERRORS_HPP
