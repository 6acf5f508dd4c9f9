/*
   Copyright 2026 The ffiwa authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef FFIWA_ERRORS_HPP
#define FFIWA_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace ffiwa {

/// Base class for all library errors.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Bad arguments, unparsable input, violated preconditions.
struct UsageError : Error {
    explicit UsageError(const std::string& msg) : Error(msg) {}
};

/// A computation would exceed a hard size bound.
struct ResourceError : Error {
    explicit ResourceError(const std::string& msg) : Error(msg) {}
};

/// Working precision (p-adic or t-adic) was insufficient to resolve a value.
struct PrecisionError : Error {
    explicit PrecisionError(const std::string& msg) : Error(msg) {}
};

/// A proven identity failed numerically.  This is the highest-value signal
/// the library can emit: it means an implementation bug, not a usage error.
struct MathInconsistencyError : Error {
    explicit MathInconsistencyError(const std::string& msg) : Error(msg) {}
};

}  // namespace ffiwa

#endif
