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

#ifndef WEYLSPEC_PARTITIONS_HPP
#define WEYLSPEC_PARTITIONS_HPP

#include <vector>

namespace weylspec {

using Partition = std::vector<int>;

/// Calls f(const Partition&) for every partition of n, parts weakly
/// decreasing, in reverse lexicographic order starting from (n). n = 0
/// yields the single empty partition.
template <class F>
void for_each_partition(int n, F&& f) {
    Partition parts;
    if (n == 0) {
        f(parts);
        return;
    }
    parts.push_back(n);
    while (true) {
        f(parts);
        // Find rightmost part > 1.
        int ones = 0;
        while (!parts.empty() && parts.back() == 1) {
            parts.pop_back();
            ++ones;
        }
        if (parts.empty()) return;
        int k = --parts.back();
        int rem = ones + 1;
        while (rem > k) {
            parts.push_back(k);
            rem -= k;
        }
        if (rem > 0) parts.push_back(rem);
    }
}

inline std::vector<Partition> partitions(int n) {
    std::vector<Partition> out;
    for_each_partition(n, [&](const Partition& p) { out.push_back(p); });
    return out;
}

}  // namespace weylspec

#endif
