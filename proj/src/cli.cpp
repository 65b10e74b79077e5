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

#include "weylspec/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "weylspec/cache.hpp"
#include "weylspec/error.hpp"
#include "weylspec/identify.hpp"
#include "weylspec/invariants.hpp"
#include "weylspec/tori_fq.hpp"

namespace weylspec::cli {

namespace {

using nlohmann::json;

std::string poly_display(const CycloPoly& p) {
    if (p.empty()) return "1";
    std::string out;
    for (auto [d, mult] : p.factors()) {
        if (!out.empty()) out += ' ';
        out += "Phi" + std::to_string(d);
        if (mult > 1) out += "^" + std::to_string(mult);
    }
    return out;
}

std::string join(const std::set<int>& xs) {
    std::string out;
    for (int x : xs) {
        if (!out.empty()) out += ',';
        out += std::to_string(x);
    }
    return out;
}

std::vector<std::string> sorted_texts(const Spectrum& s) {
    std::vector<std::string> out;
    for (const auto& p : s.polys) out.push_back(p.text());
    std::sort(out.begin(), out.end());
    return out;
}

void write_json(std::ostream& out, const json& j) { out << j.dump(2) << '\n'; }

class Runner {
   public:
    Runner(const CommandConfig& config, std::ostream& out) : config_(config), out_(out) {
        options_.e8_mode = config.e8_mode;
        options_.allow_long_running = config.allow_long_running;
        options_.threads = config.threads;
        if (!config.no_cache) options_.cache_dir = cache_dir();
    }

    int dispatch() {
        switch (config_.command) {
            case Command::spectrum: return cmd_spectrum();
            case Command::invariants: return cmd_invariants();
            case Command::identify: return cmd_identify();
            case Command::verify: return cmd_verify();
            case Command::springer_check: return cmd_springer_check();
            case Command::classes: return cmd_classes();
            case Command::tori: return cmd_tori();
            case Command::share: return cmd_share();
            case Command::cache: return cmd_cache();
        }
        return kExitUsage;
    }

   private:
    std::filesystem::path cache_dir() const {
        return config_.cache_dir ? *config_.cache_dir : SpectrumCache::default_dir();
    }

    void require_types(std::size_t count) const {
        if (config_.type_exprs.size() != count)
            throw Error(ErrorCode::InvalidArgument, "expected " + std::to_string(count) + " type expression" +
                                                        (count == 1 ? "" : "s") + ", got " +
                                                        std::to_string(config_.type_exprs.size()));
    }

    SemisimpleType type_arg(std::size_t k) const { return parse_type(config_.type_exprs.at(k)); }

    int cmd_spectrum() {
        require_types(1);
        const SemisimpleType t = type_arg(0);
        const Spectrum s = spectrum(t, options_);
        const auto texts = sorted_texts(s);
        switch (config_.format) {
            case Format::tsv:
                for (const auto& line : texts) out_ << line << '\n';
                break;
            case Format::json: {
                json j;
                j["type"] = t.canonical();
                j["n"] = s.n;
                j["count"] = texts.size();
                j["polynomials"] = texts;
                write_json(out_, j);
                break;
            }
            case Format::table: {
                out_ << "spectrum of " << t.canonical() << ": " << texts.size() << " polynomials of degree " << s.n
                     << " (" << to_string(s.provenance) << ")\n";
                std::size_t width = 0;
                for (const auto& line : texts) width = std::max(width, line.size());
                for (const auto& line : texts)
                    out_ << "  " << std::left << std::setw(static_cast<int>(width)) << line << "  "
                         << poly_display(CycloPoly::parse(line)) << '\n';
                break;
            }
        }
        return kExitOk;
    }

    int cmd_invariants() {
        require_types(1);
        const SemisimpleType t = type_arg(0);
        const Spectrum s = spectrum(t, options_);
        std::set<int> indices(config_.indices.begin(), config_.indices.end());
        const std::set<int> star = ch_star(s);
        if (indices.empty()) indices = star;
        for (int i : indices)
            if (i < 1) throw Error(ErrorCode::InvalidArgument, "index must be positive");
        const InvariantTable table = invariant_table(s, indices, config_.pairs);

        if (config_.format == Format::json) {
            json j;
            j["type"] = t.canonical();
            j["n"] = s.n;
            j["ch_star"] = std::vector<int>(star.begin(), star.end());
            json m = json::object();
            json mp = json::object();
            json pair = json::object();
            for (auto [i, v] : table.m) m[std::to_string(i)] = v;
            for (auto [i, v] : table.m_prime) mp[std::to_string(i)] = v;
            for (auto [ij, v] : table.m_pair) pair[std::to_string(ij.first) + "," + std::to_string(ij.second)] = v;
            j["m"] = m;
            j["m_prime"] = mp;
            j["m_pair"] = pair;
            write_json(out_, j);
            return kExitOk;
        }
        if (config_.format == Format::table) out_ << "invariants of " << t.canonical() << " (n=" << s.n << ")\n";
        out_ << "ch*=" << join(star) << '\n';
        for (auto [i, v] : table.m) out_ << "m[" << i << "]=" << v << '\n';
        for (auto [i, v] : table.m_prime) out_ << "m'[" << i << "]=" << v << '\n';
        for (auto [ij, v] : table.m_pair) out_ << "m[" << ij.first << ',' << ij.second << "]=" << v << '\n';
        return kExitOk;
    }

    int cmd_identify() {
        Spectrum s;
        std::string source;
        if (config_.spectrum_file) {
            if (!config_.type_exprs.empty())
                throw Error(ErrorCode::InvalidArgument, "give either a type or --spectrum-file, not both");
            std::ifstream in(*config_.spectrum_file, std::ios::binary);
            if (!in) throw Error(ErrorCode::IoError, "cannot read " + config_.spectrum_file->string());
            std::ostringstream buf;
            buf << in.rdbuf();
            s = parse_spectrum_file(buf.str()).spectrum;
            source = config_.spectrum_file->string();
        } else {
            require_types(1);
            const SemisimpleType t = type_arg(0);
            s = spectrum(t, options_);
            source = t.canonical();
        }

        const FactorReport report = identify_by_cases(s, s.n, options_);
        std::optional<std::vector<std::vector<SimpleType>>> searched;
        if (config_.search) {
            SpectrumMemo memo(search_options());
            searched = identify_by_search(s, s.n, memo, config_.search_bound);
        }
        const bool agrees = !searched || (searched->size() == 1 && searched->front() == report.factors);

        auto multiset_text = [](const std::vector<SimpleType>& f) {
            FactorReport r;
            r.factors = f;
            return r.text();
        };

        switch (config_.format) {
            case Format::json: {
                json j;
                j["source"] = source;
                j["n"] = s.n;
                j["factors"] = report.labels();
                j["residual_ok"] = report.residual_ok;
                if (searched) {
                    json list = json::array();
                    for (const auto& f : *searched) list.push_back(multiset_text(f));
                    j["search"] = list;
                    j["search_agrees"] = agrees;
                }
                write_json(out_, j);
                break;
            }
            case Format::tsv:
                for (const auto& label : report.labels()) out_ << "factor\t" << label << '\n';
                out_ << "residual_ok\t" << (report.residual_ok ? "true" : "false") << '\n';
                if (searched) {
                    for (const auto& f : *searched) out_ << "search\t" << multiset_text(f) << '\n';
                    out_ << "search_agrees\t" << (agrees ? "true" : "false") << '\n';
                }
                break;
            case Format::table:
                out_ << "source:      " << source << " (n=" << s.n << ")\n";
                out_ << "factors:     " << report.text() << '\n';
                out_ << "residual_ok: " << (report.residual_ok ? "true" : "false") << '\n';
                if (searched) {
                    out_ << "search:      ";
                    if (searched->empty()) out_ << "(no match)";
                    for (std::size_t k = 0; k < searched->size(); ++k)
                        out_ << (k ? "; " : "") << multiset_text((*searched)[k]);
                    out_ << "\nagreement:   " << (agrees ? "yes" : "no") << '\n';
                }
                break;
        }
        if (!report.residual_ok)
            throw Error(ErrorCode::InconsistentSpectrum, "invariants left over after removing " + report.text());
        if (!agrees) throw Error(ErrorCode::InconsistentSpectrum, "case analysis and search disagree");
        return kExitOk;
    }

    SpectrumOptions search_options() const {
        SpectrumOptions o = options_;
        o.cache_dir.reset();
        return o;
    }

    int cmd_verify() {
        if (!config_.max_rank) throw Error(ErrorCode::InvalidArgument, "verify needs --max-rank");
        const int max_rank = *config_.max_rank;
        if (max_rank < 1 || max_rank > 10) throw Error(ErrorCode::InvalidArgument, "--max-rank must be in 1..10");
        SpectrumMemo memo(search_options());
        const CollisionReport report = verify_uniqueness(max_rank, memo, config_.threads);
        const auto unexpected = std::count_if(report.collisions.begin(), report.collisions.end(),
                                              [](const Collision& c) { return !c.bc_relabeling; });
        if (config_.format == Format::json) {
            json list = json::array();
            for (const auto& c : report.collisions)
                list.push_back({{"first", c.first.canonical()},
                                {"second", c.second.canonical()},
                                {"bc_relabeling", c.bc_relabeling}});
            write_json(out_, {{"max_rank", max_rank},
                              {"types_checked", report.types_checked},
                              {"collisions", list},
                              {"ok", report.only_bc()}});
        } else {
            for (const auto& line : report.lines()) out_ << line << '\n';
            if (config_.format == Format::table)
                out_ << "checked " << report.types_checked << " types up to rank " << max_rank << ": "
                     << report.collisions.size() << " collisions, " << unexpected << " not B/C relabelings\n";
        }
        if (!report.only_bc())
            throw Error(ErrorCode::InconsistentSpectrum, std::to_string(unexpected) + " unexpected collisions");
        return kExitOk;
    }

    int cmd_springer_check() {
        std::vector<std::string> exprs = config_.type_exprs;
        if (exprs.empty()) {
            for (int r = 1; r <= 8; ++r) exprs.push_back("A" + std::to_string(r));
            for (int r = 2; r <= 8; ++r) exprs.push_back("B" + std::to_string(r));
            for (int r = 3; r <= 8; ++r) exprs.push_back("C" + std::to_string(r));
            for (int r = 4; r <= 8; ++r) exprs.push_back("D" + std::to_string(r));
            for (const char* e : {"G2", "F4", "E6", "E7"}) exprs.emplace_back(e);
            if (config_.e8_mode != E8Mode::forbid) exprs.emplace_back("E8");
        }
        json list = json::array();
        int failures = 0;
        for (const auto& expr : exprs) {
            const SemisimpleType t = parse_type(expr);
            if (t.factors().size() != 1) throw Error(ErrorCode::InvalidArgument, expr + " is not a simple type");
            const SimpleType f = t.factors().front();
            const auto star = ch_star(spectrum(t, options_));
            const auto springer = springer_ch_star(f);
            const auto tabulated = tabulated_ch_star(f);
            const bool ok = star == springer && star == tabulated;
            failures += ok ? 0 : 1;
            if (config_.format == Format::json) {
                list.push_back({{"type", f.label()},
                                {"ch_star", std::vector<int>(star.begin(), star.end())},
                                {"springer", std::vector<int>(springer.begin(), springer.end())},
                                {"tabulated", std::vector<int>(tabulated.begin(), tabulated.end())},
                                {"ok", ok}});
            } else if (config_.format == Format::tsv) {
                out_ << f.label() << '\t' << join(star) << '\t' << (ok ? "OK" : "MISMATCH") << '\n';
            } else {
                out_ << std::left << std::setw(4) << f.label() << "  ch*={" << join(star) << "}  "
                     << (ok ? "OK" : "MISMATCH springer={" + join(springer) + "} tabulated={" + join(tabulated) + "}")
                     << '\n';
            }
        }
        if (config_.format == Format::json) write_json(out_, {{"types", list}, {"ok", failures == 0}});
        if (failures > 0)
            throw Error(ErrorCode::InconsistentSpectrum, std::to_string(failures) + " types fail the Springer check");
        return kExitOk;
    }

    int cmd_classes() {
        require_types(1);
        const SemisimpleType t = type_arg(0);
        const auto classes = weyl_classes(t);
        if (config_.format == Format::json) {
            json list = json::array();
            for (const auto& c : classes) {
                json e = {{"label", c.label}, {"factors", c.char_poly.text()}};
                e["size"] = c.size ? json(c.size->str()) : json(nullptr);
                list.push_back(e);
            }
            write_json(out_, {{"type", t.canonical()}, {"classes", list}});
            return kExitOk;
        }
        if (config_.format == Format::table)
            out_ << classes.size() << " classes of W(" << t.canonical() << "), |W| = " << weyl_order(t) << '\n';
        for (const auto& c : classes)
            out_ << c.label << '\t' << c.char_poly.text() << '\t' << (c.size ? c.size->str() : "-") << '\n';
        return kExitOk;
    }

    int cmd_tori() {
        require_types(1);
        if (!config_.q) throw Error(ErrorCode::InvalidArgument, "tori needs --q");
        BigInt q;
        try {
            const std::string& text = *config_.q;
            if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) throw std::invalid_argument(text);
            q = BigInt(text);
        } catch (const std::exception&) {
            throw Error(ErrorCode::InvalidArgument, "--q must be a positive integer, got '" + *config_.q + "'");
        }
        const SemisimpleType t = type_arg(0);
        const TorusReport report = torus_orders(t, q);
        if (config_.format == Format::json) {
            json list = json::array();
            for (const auto& e : report.entries)
                list.push_back({{"label", e.label}, {"factors", e.char_poly.text()}, {"order", e.order.str()}});
            write_json(out_, {{"type", t.canonical()},
                              {"q", report.q.str()},
                              {"q_unverified", report.q_unverified},
                              {"entries", list}});
            return kExitOk;
        }
        if (config_.format == Format::table) {
            out_ << "maximal tori of the split group of type " << t.canonical() << " over F_" << report.q << '\n';
            if (report.q_unverified) out_ << "warning: q has no prime factor below 10^6; prime power not verified\n";
        }
        for (const auto& e : report.entries) out_ << e.label << '\t' << e.char_poly.text() << '\t' << e.order << '\n';
        return kExitOk;
    }

    int cmd_share() {
        require_types(2);
        const SemisimpleType t1 = type_arg(0);
        const SemisimpleType t2 = type_arg(1);
        const ShareVerdict v = share_tori(t1, t2, options_);
        const std::string witness = v.witness ? v.witness->text() : "";
        switch (config_.format) {
            case Format::json: {
                json j = {{"first", t1.canonical()},
                          {"second", t2.canonical()},
                          {"shared", v.shared},
                          {"justification", v.justification}};
                j["witness"] = v.witness ? json(witness) : json(nullptr);
                write_json(out_, j);
                break;
            }
            case Format::tsv:
                out_ << "shared\t" << (v.shared ? "true" : "false") << '\n';
                if (v.witness) out_ << "witness\t" << witness << '\n';
                break;
            case Format::table:
                out_ << t1.canonical() << " and " << t2.canonical() << ": "
                     << (v.shared ? "same maximal tori" : "different maximal tori") << '\n';
                if (v.witness) out_ << "witness: " << witness << " (" << poly_display(*v.witness) << ")\n";
                out_ << "reason:  " << v.justification << '\n';
                break;
        }
        return kExitOk;
    }

    int cmd_cache() {
        const SpectrumCache cache(cache_dir());
        auto count_text = [](std::size_t k, std::string_view noun) {
            return std::to_string(k) + (k == 1 ? " entry " : " entries ") + std::string(noun);
        };
        switch (config_.cache_action) {
            case CacheAction::status: {
                const auto entries = cache.entries();
                if (config_.format == Format::json) {
                    json list = json::array();
                    for (const auto& e : entries) list.push_back({{"key", e.key}, {"hash", e.hash}});
                    write_json(out_, {{"dir", cache.dir().string()}, {"entries", list}});
                    return kExitOk;
                }
                for (const auto& e : entries) out_ << e.key << '\t' << e.hash << '\n';
                const std::size_t k = entries.size();
                out_ << k << (k == 1 ? " entry" : " entries") << '\n';
                return kExitOk;
            }
            case CacheAction::clear: {
                const std::size_t removed = cache.clear();
                out_ << count_text(removed, "removed") << '\n';
                return kExitOk;
            }
            case CacheAction::rebuild: {
                SpectrumOptions fresh = options_;
                fresh.cache_dir.reset();
                std::size_t verified = 0;
                std::size_t drifted = 0;
                for (const auto& e : cache.entries()) {
                    const SemisimpleType t = parse_type(e.key);
                    if (t.canonical() != e.key) throw Error(ErrorCode::DataCorrupt, "cache key " + e.key + " is not canonical");
                    const Spectrum s = spectrum(t, fresh);
                    const std::string hash = fnv1a_hex(format_spectrum_file(s, e.key));
                    if (hash == e.hash) {
                        ++verified;
                        continue;
                    }
                    ++drifted;
                    out_ << "drift " << e.key << '\t' << e.hash << " -> " << hash << '\n';
                    cache.store(e.key, s);
                }
                out_ << count_text(verified, "verified");
                if (drifted > 0) out_ << ", " << count_text(drifted, "rewritten");
                out_ << '\n';
                return kExitOk;
            }
        }
        return kExitUsage;
    }

    const CommandConfig& config_;
    std::ostream& out_;
    SpectrumOptions options_;
};

bool is_usage_error(ErrorCode code) {
    switch (code) {
        case ErrorCode::ParseError:
        case ErrorCode::RankError:
        case ErrorCode::InvalidArgument:
        case ErrorCode::InvalidPair:
        case ErrorCode::SearchBoundExceeded: return true;
        default: return false;
    }
}

std::pair<int, int> parse_pair(const std::string& text) {
    const auto comma = text.find(',');
    try {
        if (comma == std::string::npos) throw std::invalid_argument(text);
        std::size_t used1 = 0;
        std::size_t used2 = 0;
        const int i = std::stoi(text.substr(0, comma), &used1);
        const int j = std::stoi(text.substr(comma + 1), &used2);
        if (used1 != comma || used2 != text.size() - comma - 1 || i < 1 || j < 1) throw std::invalid_argument(text);
        return {i, j};
    } catch (const std::exception&) {
        throw CLI::ValidationError("--pair", "expected i,j with positive integers, got '" + text + "'");
    }
}

}  // namespace

int run(const CommandConfig& config, std::ostream& out, std::ostream& err) {
    try {
        Runner runner(config, out);
        return runner.dispatch();
    } catch (const Error& e) {
        err << "ERROR " << to_string(e.code()) << ": " << e.what() << '\n';
        return is_usage_error(e.code()) ? kExitUsage : kExitFailure;
    } catch (const std::filesystem::filesystem_error& e) {
        err << "ERROR " << to_string(ErrorCode::IoError) << ": " << e.what() << '\n';
        return kExitFailure;
    }
}

int main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CommandConfig config;
    CLI::App app("Weyl group spectra: characteristic-polynomial fingerprints of split semisimple groups", "weylspec");
    app.fallthrough();
    app.require_subcommand(1);
    app.set_version_flag("--version", "weylspec 0.1.0");

    const std::map<std::string, Format> formats{{"table", Format::table}, {"json", Format::json}, {"tsv", Format::tsv}};
    const std::map<std::string, E8Mode> e8_modes{
        {"bundled", E8Mode::bundled}, {"enumerate", E8Mode::enumerate}, {"forbid", E8Mode::forbid}};
    std::string cache_dir;
    app.add_option("--format", config.format, "Output format")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    app.add_option("--cache-dir", cache_dir, "Spectrum cache directory (default: $WEYLSPEC_CACHE_DIR or XDG cache)");
    app.add_flag("--no-cache", config.no_cache, "Neither read nor write the spectrum cache");
    app.add_option("--e8-mode", config.e8_mode, "How E8 spectra are obtained")
        ->transform(CLI::CheckedTransformer(e8_modes, CLI::ignore_case));
    app.add_flag("--allow-long-running", config.allow_long_running, "Permit exhaustive E8 enumeration");
    app.add_option("--threads", config.threads, "Worker threads (0 = all cores)")->check(CLI::NonNegativeNumber);

    auto* spectrum_cmd = app.add_subcommand("spectrum", "Characteristic polynomials of W(T)");
    spectrum_cmd->add_option("type", config.type_exprs, "Type expression, e.g. 'A3 x B2'")->required();

    auto* invariants_cmd = app.add_subcommand("invariants", "ch*, m, m' and m-pair invariants of W(T)");
    invariants_cmd->add_option("type", config.type_exprs, "Type expression")->required();
    invariants_cmd->add_option("--index", config.indices, "Indices d for m[d] and m'[d] (default: ch*)");
    std::vector<std::string> pair_texts;
    invariants_cmd->add_option("--pair", pair_texts, "Index pairs i,j for m[i,j]");

    auto* identify_cmd = app.add_subcommand("identify", "Recover the simple factors from a spectrum");
    identify_cmd->add_option("type", config.type_exprs, "Type whose spectrum is identified");
    std::string spectrum_file;
    identify_cmd->add_option("--spectrum-file", spectrum_file, "Spectrum file to identify")->check(CLI::ExistingFile);
    identify_cmd->add_flag("--search", config.search, "Cross-check against exhaustive search");
    identify_cmd->add_option("--search-bound", config.search_bound, "Largest rank the search accepts")
        ->check(CLI::PositiveNumber);

    auto* verify_cmd = app.add_subcommand("verify", "Check that spectra determine types up to B/C");
    int max_rank = 0;
    verify_cmd->add_option("--max-rank", max_rank, "Largest total rank to enumerate")->required();

    auto* springer_cmd = app.add_subcommand("springer-check", "Compare ch* with divisors of the degrees");
    springer_cmd->add_option("types", config.type_exprs, "Simple types (default: the standard list)");

    auto* classes_cmd = app.add_subcommand("classes", "Conjugacy classes of W(T)");
    classes_cmd->add_option("type", config.type_exprs, "Type expression")->required();

    auto* tori_cmd = app.add_subcommand("tori", "Maximal torus orders of the split group over F_q");
    tori_cmd->add_option("type", config.type_exprs, "Type expression")->required();
    std::string q_text;
    tori_cmd->add_option("--q", q_text, "Field size (prime power)")->required();

    auto* share_cmd = app.add_subcommand("share", "Whether two types have the same maximal tori");
    share_cmd->add_option("types", config.type_exprs, "Two type expressions")->required()->expected(2);

    auto* cache_cmd = app.add_subcommand("cache", "Inspect or maintain the spectrum cache");
    const std::map<std::string, CacheAction> actions{
        {"status", CacheAction::status}, {"clear", CacheAction::clear}, {"rebuild", CacheAction::rebuild}};
    cache_cmd->add_option("action", config.cache_action, "status, clear or rebuild")
        ->required()
        ->transform(CLI::CheckedTransformer(actions));

    try {
        app.parse(argc, argv);
        for (const auto& text : pair_texts) config.pairs.push_back(parse_pair(text));
    } catch (const CLI::ParseError& e) {
        std::ostringstream usage_out;
        std::ostringstream usage_err;
        const int code = app.exit(e, usage_out, usage_err);
        out << usage_out.str();
        err << usage_err.str();
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (!cache_dir.empty()) config.cache_dir = cache_dir;
    // Single-type commands accept an unquoted expression split across arguments.
    if (!share_cmd->parsed() && !springer_cmd->parsed() && config.type_exprs.size() > 1) {
        std::string joined;
        for (const auto& part : config.type_exprs) joined += (joined.empty() ? "" : " ") + part;
        config.type_exprs = {joined};
    }
    if (spectrum_cmd->parsed()) config.command = Command::spectrum;
    else if (invariants_cmd->parsed()) config.command = Command::invariants;
    else if (identify_cmd->parsed()) {
        config.command = Command::identify;
        if (!spectrum_file.empty()) config.spectrum_file = spectrum_file;
    } else if (verify_cmd->parsed()) {
        config.command = Command::verify;
        config.max_rank = max_rank;
    } else if (springer_cmd->parsed()) config.command = Command::springer_check;
    else if (classes_cmd->parsed()) config.command = Command::classes;
    else if (tori_cmd->parsed()) {
        config.command = Command::tori;
        config.q = q_text;
    } else if (share_cmd->parsed()) config.command = Command::share;
    else if (cache_cmd->parsed()) config.command = Command::cache;
    return run(config, out, err);
}

}  // namespace weylspec::cli
