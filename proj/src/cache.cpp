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

#include "weylspec/cache.hpp"

#include <algorithm>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <system_error>
#include <thread>

#include "weylspec/error.hpp"

namespace weylspec {

namespace fs = std::filesystem;

namespace {

constexpr std::string_view kExtension = ".wspec";

std::optional<std::string> read_file(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) return std::nullopt;
    std::ostringstream buf;
    buf << in.rdbuf();
    return std::move(buf).str();
}

}  // namespace

std::uint64_t fnv1a_64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

std::string fnv1a_hex(std::string_view bytes) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a_64(bytes)));
    return buf;
}

fs::path SpectrumCache::default_dir() {
    if (const char* env = std::getenv("WEYLSPEC_CACHE_DIR"); env != nullptr && *env != '\0') return env;
    if (const char* xdg = std::getenv("XDG_CACHE_HOME"); xdg != nullptr && *xdg != '\0') return fs::path(xdg) / "weylspec";
    if (const char* home = std::getenv("HOME"); home != nullptr && *home != '\0')
        return fs::path(home) / ".cache" / "weylspec";
    return fs::temp_directory_path() / "weylspec";
}

fs::path SpectrumCache::path_for(std::string_view key) const {
    return dir_ / (std::string(key) + std::string(kExtension));
}

std::optional<Spectrum> SpectrumCache::load(std::string_view key) const {
    const auto text = read_file(path_for(key));
    if (!text) return std::nullopt;
    try {
        SpectrumFile file = parse_spectrum_file(*text);
        if (file.type_key != key) return std::nullopt;
        if (parse_type(key).total_rank() != file.spectrum.n) return std::nullopt;
        file.spectrum.provenance = Provenance::cached;
        return std::move(file.spectrum);
    } catch (const Error&) {
        return std::nullopt;
    }
}

void SpectrumCache::store(std::string_view key, const Spectrum& s) const {
    std::error_code ec;
    fs::create_directories(dir_, ec);
    if (ec) throw Error(ErrorCode::IoError, "cannot create cache directory " + dir_.string() + ": " + ec.message());

    const fs::path target = path_for(key);
    std::ostringstream tmp_name;
    tmp_name << '.' << key << '.' << std::hash<std::thread::id>{}(std::this_thread::get_id()) << ".tmp";
    const fs::path tmp = dir_ / tmp_name.str();
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        out << format_spectrum_file(s, key);
        if (!out.flush()) throw Error(ErrorCode::IoError, "cannot write " + tmp.string());
    }
    fs::rename(tmp, target, ec);
    if (ec) {
        fs::remove(tmp, ec);
        throw Error(ErrorCode::IoError, "cannot rename into " + target.string());
    }
}

std::vector<SpectrumCache::Entry> SpectrumCache::entries() const {
    std::vector<Entry> out;
    std::error_code ec;
    if (!fs::is_directory(dir_, ec)) return out;
    for (const auto& item : fs::directory_iterator(dir_, ec)) {
        if (!item.is_regular_file() || item.path().extension() != kExtension) continue;
        const std::string stem = item.path().stem().string();
        if (stem.empty() || stem.front() == '.') continue;
        const auto text = read_file(item.path());
        if (!text) throw Error(ErrorCode::IoError, "cannot read " + item.path().string());
        out.push_back({stem, fnv1a_hex(*text), item.path()});
    }
    std::sort(out.begin(), out.end(), [](const Entry& a, const Entry& b) { return a.key < b.key; });
    return out;
}

std::size_t SpectrumCache::clear() const {
    std::size_t removed = 0;
    for (const auto& entry : entries()) {
        std::error_code ec;
        if (fs::remove(entry.path, ec)) ++removed;
        if (ec) throw Error(ErrorCode::IoError, "cannot remove " + entry.path.string());
    }
    return removed;
}

}  // namespace weylspec
