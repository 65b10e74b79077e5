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

#include "weylspec/error.hpp"

namespace weylspec {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::RankError: return "RankError";
        case ErrorCode::NotCyclotomicProduct: return "NotCyclotomicProduct";
        case ErrorCode::StrategyUnavailable: return "StrategyUnavailable";
        case ErrorCode::DataCorrupt: return "DataCorrupt";
        case ErrorCode::DataUnavailable: return "DataUnavailable";
        case ErrorCode::InvalidPair: return "InvalidPair";
        case ErrorCode::InconsistentSpectrum: return "InconsistentSpectrum";
        case ErrorCode::SearchBoundExceeded: return "SearchBoundExceeded";
        case ErrorCode::InvalidArgument: return "InvalidArgument";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace weylspec
