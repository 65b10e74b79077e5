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

#ifndef WEYLSPEC_PARALLEL_HPP
#define WEYLSPEC_PARALLEL_HPP

#include <cstddef>
#include <functional>

namespace weylspec {

/// Worker count for `requested` (0 means hardware concurrency), at least 1.
unsigned resolve_threads(unsigned requested);

/// Runs body(index, worker) for every index in [0, count) on `threads`
/// workers pulling indices from a shared counter. The first exception thrown
/// by any worker is rethrown after all workers have joined.
void parallel_for(std::size_t count, unsigned threads,
                  const std::function<void(std::size_t index, unsigned worker)>& body);

}  // namespace weylspec

#endif
