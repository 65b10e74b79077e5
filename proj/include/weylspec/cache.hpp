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

#ifndef WEYLSPEC_CACHE_HPP
#define WEYLSPEC_CACHE_HPP

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "weylspec/spectra.hpp"

namespace weylspec {

std::uint64_t fnv1a_64(std::string_view bytes);
std::string fnv1a_hex(std::string_view bytes);

/// Directory of spectrum files named `<canonical-type>.wspec`.
class SpectrumCache {
   public:
    explicit SpectrumCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

    /// $WEYLSPEC_CACHE_DIR, else ${XDG_CACHE_HOME:-$HOME/.cache}/weylspec.
    static std::filesystem::path default_dir();

    const std::filesystem::path& dir() const noexcept { return dir_; }
    std::filesystem::path path_for(std::string_view key) const;

    /// nullopt when absent or when the file does not parse or carries a
    /// different key.
    std::optional<Spectrum> load(std::string_view key) const;

    /// Writes to a temporary file in the same directory, then renames.
    void store(std::string_view key, const Spectrum& s) const;

    struct Entry {
        std::string key;
        std::string hash;
        std::filesystem::path path;
    };
    /// Sorted by key. Files that fail to parse are reported with key taken
    /// from the file name.
    std::vector<Entry> entries() const;

    /// Removes all cache files; returns how many.
    std::size_t clear() const;

   private:
    std::filesystem::path dir_;
};

}  // namespace weylspec

#endif
