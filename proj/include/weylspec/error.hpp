/*
   Copyright 2026 The weylspec Authors

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

#ifndef WEYLSPEC_ERROR_HPP
#define WEYLSPEC_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace weylspec {

enum class ErrorCode {
    ParseError,
    RankError,
    NotCyclotomicProduct,
    StrategyUnavailable,
    DataCorrupt,
    DataUnavailable,
    InvalidPair,
    InconsistentSpectrum,
    SearchBoundExceeded,
    InvalidArgument,
    IoError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above; the
/// CLI renders it as `ERROR <code>: <detail>`.
class Error : public std::runtime_error {
   public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(detail), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

   private:
    ErrorCode code_;
};

}  // namespace weylspec

#endif
