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

#ifndef WEYLSPEC_CLI_HPP
#define WEYLSPEC_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "weylspec/spectra.hpp"

namespace weylspec::cli {

enum class Command { spectrum, invariants, identify, verify, springer_check, classes, tori, share, cache };
enum class Format { table, json, tsv };
enum class CacheAction { status, clear, rebuild };

struct CommandConfig {
    Command command = Command::spectrum;
    std::vector<std::string> type_exprs;
    std::optional<std::string> q;
    std::optional<int> max_rank;
    Format format = Format::table;
    std::optional<std::filesystem::path> cache_dir;
    bool no_cache = false;
    E8Mode e8_mode = E8Mode::bundled;
    bool allow_long_running = false;
    unsigned threads = 0;

    std::vector<int> indices;
    std::vector<std::pair<int, int>> pairs;
    std::optional<std::filesystem::path> spectrum_file;
    bool search = false;
    int search_bound = 8;
    CacheAction cache_action = CacheAction::status;
};

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailure = 1;
inline constexpr int kExitUsage = 2;

/// Executes a parsed command. Reports go to `out`; failures are written to
/// `err` as `ERROR <code>: <detail>`. Returns the process exit status.
int run(const CommandConfig& config, std::ostream& out, std::ostream& err);

/// Parses argv (argv[0] is the program name) and runs it.
int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace weylspec::cli

#endif
