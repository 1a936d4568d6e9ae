// Copyright 2026 The acgem Authors
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

#ifndef ACGEM_ERROR_HPP
#define ACGEM_ERROR_HPP

#include <stdexcept>
#include <string>

namespace acgem {

enum class ErrorCode {
    invalid_argument = 1,
    near_resonance = 2,
    forbidden_scheme = 3,
    undefined_ratio = 4,
    numerical = 5,
    out_of_range = 6,
};

/// Base for every error thrown by the library. The code is what the C API
/// hands back across the boundary.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string &what) : std::runtime_error(what), code_(code) {}
    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

/// Physics-domain failures: the requested operating point is outside the
/// regime the model describes (laser on resonance, forbidden level scheme).
class DomainError : public Error {
   public:
    using Error::Error;
};

}  // namespace acgem

#endif
