// Command-line front end: simulation, cycle analysis, quadruple and
// equivalent-start searches, theorem checks, and sonification. Every result
// embeds the manifest that produced it so runs can be reproduced from their
// own output.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <mutex>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "gopm/analysis.hpp"
#include "gopm/automaton.hpp"
#include "gopm/grid.hpp"
#include "gopm/primes.hpp"
#include "gopm/sonify.hpp"
#include "gopm/version.hpp"

using nlohmann::json;

namespace {

constexpr int kOk = 0;
constexpr int kUsage = 1;
constexpr int kBudget = 2;
constexpr int kVerdictFailed = 3;
constexpr int kIo = 4;

// Cycle lengths with known reference values, used by the table command's
// match column. Only meaningful for start 1, step 1 grids.
const std::map<uint64_t, uint64_t> kReferenceLambda = {
    {1, 0},  {2, 0},  {3, 2},      {4, 4},    {5, 12},  {6, 44}, {7, 8},
    {8, 16}, {9, 120}, {10, 8},    {12, 21384}, {17, 360}, {19, 24}};

struct SpecOpts {
    uint64_t dim = 1;
    uint64_t start = 1;
    uint64_t step = 1;
};

void add_spec_options(CLI::App* cmd, SpecOpts& so, bool dim_required = true) {
    auto* dim = cmd->add_option("--dim", so.dim, "grid side length");
    if (dim_required) dim->required();
    cmd->add_option("--start", so.start, "top-left value")->capture_default_str();
    cmd->add_option("--step", so.step, "common difference")->capture_default_str();
}

gopm::GridSpec to_spec(const SpecOpts& so) {
    gopm::GridSpec spec{so.dim, so.start, so.step};
    gopm::validate(spec);
    return spec;
}

void add_format_option(CLI::App* cmd, std::string& fmt) {
    cmd->add_option("--format", fmt, "output format")
        ->check(CLI::IsMember({"text", "json", "jsonl"}))
        ->capture_default_str();
}

json spec_params(const gopm::GridSpec& spec) {
    return json{{"dim", spec.dim}, {"start", spec.start}, {"step", spec.step}};
}

json make_manifest(const std::string& command, const json& params, const std::string& fmt) {
    return json{{"command", command},
                {"version", gopm::kVersion},
                {"format", fmt},
                {"params", params}};
}

std::pair<uint64_t, uint64_t> parse_dim_range(const std::string& text) {
    const auto parse_one = [](const std::string& part) {
        size_t used = 0;
        const unsigned long long v = std::stoull(part, &used);
        if (used != part.size()) throw std::invalid_argument("");
        return static_cast<uint64_t>(v);
    };
    try {
        const auto pos = text.find("..");
        if (pos == std::string::npos) {
            const uint64_t d = parse_one(text);
            return {d, d};
        }
        const uint64_t lo = parse_one(text.substr(0, pos));
        const uint64_t hi = parse_one(text.substr(pos + 2));
        if (lo == 0 || hi < lo) throw std::invalid_argument("");
        return {lo, hi};
    } catch (const std::exception&) {
        throw std::invalid_argument("bad dimension range '" + text + "' (expected N or A..B)");
    }
}

void print_board(std::ostream& os, const gopm::GridSpec& spec, const gopm::BoardState& state) {
    const uint64_t last = spec.start + spec.step * (spec.cell_count() - 1);
    const int width = static_cast<int>(std::to_string(last).size());
    for (uint64_t r = 0; r < spec.dim; ++r) {
        for (uint64_t c = 0; c < spec.dim; ++c) {
            const uint64_t k = gopm::snake_index(spec, {r, c});
            const bool excited = state.excited.get(k);
            os << (excited ? '*' : ' ') << std::setw(width)
               << spec.start + spec.step * k << (excited ? '*' : ' ');
            if (c + 1 < spec.dim) os << ' ';
        }
        os << '\n';
    }
}

json record_json(const gopm::DayRecord& rec) {
    return json{{"day", rec.day}, {"excited_values", rec.excited_values}, {"count", rec.count}};
}

// Runs fn(lo + i) for every i in [0, count) on a small worker pool and
// returns results in ascending-dimension order. The first exception thrown
// by fn is rethrown on the calling thread after the pool drains.
template <typename Row, typename Fn>
std::vector<Row> map_dims(uint64_t lo, uint64_t count, Fn fn) {
    std::vector<Row> rows(count);
    std::atomic<uint64_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (;;) {
            const uint64_t i = next.fetch_add(1);
            if (i >= count) break;
            try {
                rows[i] = fn(lo + i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    const auto n_threads = static_cast<unsigned>(std::min<uint64_t>(hw, count));
    if (n_threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(n_threads);
        for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    if (error) std::rethrow_exception(error);
    return rows;
}

// ---------------------------------------------------------------- simulate

int cmd_simulate(const SpecOpts& so, uint64_t days, const std::string& fmt) {
    const gopm::GridSpec spec = to_spec(so);
    const std::vector<gopm::BoardState> states = gopm::run(spec, days);

    json params = spec_params(spec);
    params["days"] = days;
    const json manifest = make_manifest("simulate", params, fmt);

    if (fmt == "text") {
        std::cout << "legend: *v* excited, v dormant\n";
        for (const gopm::BoardState& state : states) {
            const gopm::DayRecord rec = gopm::day_record(spec, state);
            std::cout << "day " << rec.day << "  excited " << rec.count << ":";
            for (uint64_t v : rec.excited_values) std::cout << ' ' << v;
            std::cout << '\n';
            print_board(std::cout, spec, state);
        }
    } else if (fmt == "json") {
        json doc{{"manifest", manifest}, {"days", json::array()}};
        for (const gopm::BoardState& state : states)
            doc["days"].push_back(record_json(gopm::day_record(spec, state)));
        std::cout << doc.dump(2) << '\n';
    } else {
        for (const gopm::BoardState& state : states) {
            json line = record_json(gopm::day_record(spec, state));
            line["manifest"] = manifest;
            std::cout << line.dump() << '\n';
        }
    }
    return kOk;
}

// ------------------------------------------------------------------- cycle

int cmd_cycle(const SpecOpts& so, uint64_t max_days, const std::string& fmt) {
    const gopm::GridSpec spec = to_spec(so);
    json params = spec_params(spec);
    params["max_days"] = max_days;
    const json manifest = make_manifest("cycle", params, fmt);

    try {
        const gopm::CycleReport rep = gopm::detect_cycle(spec, max_days);
        if (fmt == "text") {
            std::cout << "tail_mu=" << rep.tail_mu << " period_lambda=" << rep.period_lambda
                      << " days_explored=" << rep.days_explored << '\n';
        } else {
            const json doc{{"manifest", manifest},
                           {"tail_mu", rep.tail_mu},
                           {"period_lambda", rep.period_lambda},
                           {"days_explored", rep.days_explored}};
            std::cout << (fmt == "json" ? doc.dump(2) : doc.dump()) << '\n';
        }
        return kOk;
    } catch (const gopm::BudgetExceededError& e) {
        if (fmt == "text") {
            std::cout << "budget exceeded: no repeated state within " << e.days_explored
                      << " days\n";
        } else {
            const json doc{{"manifest", manifest},
                           {"error", "budget-exceeded"},
                           {"days_explored", e.days_explored}};
            std::cout << (fmt == "json" ? doc.dump(2) : doc.dump()) << '\n';
        }
        return kBudget;
    }
}

// ------------------------------------------------------------------- table

struct TableRow {
    uint64_t dim = 0;
    bool budget_exceeded = false;
    gopm::CycleReport rep;
    uint64_t days_explored = 0;
    std::optional<uint64_t> reference;
};

int cmd_table(const SpecOpts& so, const std::string& dims, uint64_t max_days,
              const std::string& fmt) {
    const auto [lo, hi] = parse_dim_range(dims);
    const uint64_t count = hi - lo + 1;

    json params{{"dims", dims}, {"start", so.start}, {"step", so.step}, {"max_days", max_days}};
    const json manifest = make_manifest("table", params, fmt);

    const bool ngopm = so.start == 1 && so.step == 1;
    const std::vector<TableRow> rows = map_dims<TableRow>(lo, count, [&](uint64_t dim) {
        TableRow row;
        row.dim = dim;
        gopm::GridSpec spec{dim, so.start, so.step};
        gopm::validate(spec);
        try {
            row.rep = gopm::detect_cycle(spec, max_days);
            row.days_explored = row.rep.days_explored;
        } catch (const gopm::BudgetExceededError& e) {
            row.budget_exceeded = true;
            row.days_explored = e.days_explored;
        }
        if (ngopm) {
            const auto it = kReferenceLambda.find(dim);
            if (it != kReferenceLambda.end()) row.reference = it->second;
        }
        return row;
    });

    bool any_budget = false;
    json out_rows = json::array();
    for (const TableRow& row : rows) {
        json j{{"dim", row.dim}};
        if (row.budget_exceeded) {
            any_budget = true;
            j["error"] = "budget-exceeded";
            j["days_explored"] = row.days_explored;
        } else {
            j["tail_mu"] = row.rep.tail_mu;
            j["period_lambda"] = row.rep.period_lambda;
            j["days_explored"] = row.rep.days_explored;
        }
        j["reference_lambda"] = row.reference ? json(*row.reference) : json(nullptr);
        j["match"] = row.reference && !row.budget_exceeded
                         ? json(*row.reference == row.rep.period_lambda)
                         : json(nullptr);
        out_rows.push_back(std::move(j));
    }

    if (fmt == "text") {
        std::cout << std::left << std::setw(6) << "dim" << std::setw(10) << "tail_mu"
                  << std::setw(15) << "period_lambda" << std::setw(15) << "days_explored"
                  << std::setw(11) << "reference" << "match\n";
        for (const json& j : out_rows) {
            std::cout << std::left << std::setw(6) << j["dim"].get<uint64_t>();
            if (j.contains("error")) {
                std::cout << "budget exceeded after " << j["days_explored"].get<uint64_t>()
                          << " days\n";
                continue;
            }
            std::cout << std::setw(10) << j["tail_mu"].get<uint64_t>() << std::setw(15)
                      << j["period_lambda"].get<uint64_t>() << std::setw(15)
                      << j["days_explored"].get<uint64_t>();
            if (j["reference_lambda"].is_null())
                std::cout << std::setw(11) << "-" << "-\n";
            else
                std::cout << std::setw(11) << j["reference_lambda"].get<uint64_t>()
                          << (j["match"].get<bool>() ? "yes" : "NO") << '\n';
        }
    } else if (fmt == "json") {
        const json doc{{"manifest", manifest}, {"rows", out_rows}};
        std::cout << doc.dump(2) << '\n';
    } else {
        for (json& j : out_rows) {
            j["manifest"] = manifest;
            std::cout << j.dump() << '\n';
        }
    }
    return any_budget ? kBudget : kOk;
}

// -------------------------------------------------------------------- quad

int cmd_quad(const SpecOpts& so, const std::string& dims, const std::string& mode,
             const std::string& fmt) {
    const auto [lo, hi] = parse_dim_range(dims);
    const uint64_t count = hi - lo + 1;
    const bool arithmetic = mode == "arithmetic";
    if (arithmetic && lo < 3)
        throw std::invalid_argument("quad: arithmetic mode needs dimensions >= 3");

    json params{{"dims", dims}, {"mode", mode}};
    if (!arithmetic) {
        params["start"] = so.start;
        params["step"] = so.step;
    }
    const json manifest = make_manifest("quad", params, fmt);

    using Hit = std::optional<gopm::QuadrupleHit>;
    const std::vector<Hit> hits = map_dims<Hit>(lo, count, [&](uint64_t dim) -> Hit {
        if (arithmetic) return gopm::quad_search_arithmetic(dim);
        gopm::GridSpec spec{dim, so.start, so.step};
        gopm::validate(spec);
        return gopm::quad_search_grid(spec);
    });

    json out_rows = json::array();
    for (uint64_t i = 0; i < count; ++i)
        out_rows.push_back(json{{"dim", lo + i},
                                {"mode", mode},
                                {"x", hits[i] ? json(hits[i]->x) : json(nullptr)}});

    if (fmt == "text") {
        for (const json& j : out_rows) {
            std::cout << "dim " << j["dim"].get<uint64_t>() << ": ";
            if (j["x"].is_null())
                std::cout << "-\n";
            else
                std::cout << j["x"].get<uint64_t>() << '\n';
        }
    } else if (fmt == "json") {
        const json doc{{"manifest", manifest}, {"hits", out_rows}};
        std::cout << doc.dump(2) << '\n';
    } else {
        for (json& j : out_rows) {
            j["manifest"] = manifest;
            std::cout << j.dump() << '\n';
        }
    }
    return kOk;
}

// ------------------------------------------------------------------- equiv

int cmd_equiv(uint64_t dim, uint64_t start, uint64_t bound, uint64_t limit,
              const std::string& fmt) {
    const gopm::GapSignature sig = gopm::gap_signature(start, dim * dim);
    const std::vector<uint64_t> starts = gopm::equivalent_starts(dim, start, bound, limit);

    const json params{{"dim", dim}, {"start", start}, {"bound", bound}, {"limit", limit}};
    const json manifest = make_manifest("equiv", params, fmt);
    const json sig_json{{"window_len", sig.window_len},
                        {"prime_offsets", sig.prime_offsets},
                        {"gaps", sig.gaps}};

    if (fmt == "text") {
        std::cout << "signature: window_len=" << sig.window_len << " prime_offsets=[";
        for (size_t i = 0; i < sig.prime_offsets.size(); ++i)
            std::cout << (i ? "," : "") << sig.prime_offsets[i];
        std::cout << "] gaps=[";
        for (size_t i = 0; i < sig.gaps.size(); ++i) std::cout << (i ? "," : "") << sig.gaps[i];
        std::cout << "]\nequivalent starts (" << starts.size() << "):";
        for (uint64_t b : starts) std::cout << ' ' << b;
        std::cout << '\n';
    } else {
        const json doc{{"manifest", manifest},
                       {"signature", sig_json},
                       {"equivalent_starts", starts}};
        std::cout << (fmt == "json" ? doc.dump(2) : doc.dump()) << '\n';
    }
    return kOk;
}

// ------------------------------------------------------------------ verify

int cmd_verify(const SpecOpts& so, const std::string& theorem, uint64_t max_days,
               uint64_t horizon, const std::string& fmt) {
    const gopm::GridSpec spec = to_spec(so);
    json params = spec_params(spec);
    params["theorem"] = theorem;
    params["max_days"] = max_days;
    params["horizon"] = horizon;
    const json manifest = make_manifest("verify", params, fmt);

    try {
        gopm::TheoremVerdict verdict;
        if (theorem == "4.1")
            verdict = gopm::verify_indegree(spec, max_days);
        else if (theorem == "4.2")
            verdict = gopm::verify_even_cycle(spec, max_days);
        else if (theorem == "4.3")
            verdict = gopm::verify_immortal_corners(spec, horizon);
        else
            verdict = gopm::verify_parity_day1(spec);

        if (fmt == "text") {
            std::cout << "theorem " << verdict.theorem_id << ": "
                      << gopm::to_string(verdict.status) << '\n';
            if (!verdict.witness.empty()) std::cout << "witness: " << verdict.witness << '\n';
        } else {
            const json doc{{"manifest", manifest},
                           {"theorem", verdict.theorem_id},
                           {"status", gopm::to_string(verdict.status)},
                           {"witness", verdict.witness.empty() ? json(nullptr)
                                                               : json(verdict.witness)}};
            std::cout << (fmt == "json" ? doc.dump(2) : doc.dump()) << '\n';
        }
        return verdict.ok() ? kOk : kVerdictFailed;
    } catch (const gopm::BudgetExceededError& e) {
        if (fmt == "text") {
            std::cout << "budget exceeded: no cycle within " << e.days_explored << " days\n";
        } else {
            const json doc{{"manifest", manifest},
                           {"error", "budget-exceeded"},
                           {"days_explored", e.days_explored}};
            std::cout << (fmt == "json" ? doc.dump(2) : doc.dump()) << '\n';
        }
        return kBudget;
    }
}

// ------------------------------------------------------------------- music

int cmd_music(const SpecOpts& so, uint64_t days, uint64_t first_day, double note_duration,
              const std::string& wav_path, const std::string& fmt) {
    const gopm::GridSpec spec = to_spec(so);
    if (days < 1) throw std::invalid_argument("music: --days must be >= 1");
    const gopm::NoteSequence seq = gopm::note_sequence(spec, first_day, days);

    json params = spec_params(spec);
    params["days"] = days;
    params["first_day"] = first_day;
    params["note_duration"] = note_duration;
    params["wav"] = wav_path.empty() ? json(nullptr) : json(wav_path);
    const json manifest = make_manifest("music", params, fmt);

    uint64_t wav_bytes = 0;
    if (!wav_path.empty()) {
        std::ofstream out(wav_path, std::ios::binary | std::ios::trunc);
        if (!out) throw gopm::WavWriteError("music: cannot open " + wav_path);
        wav_bytes = gopm::render_wav(seq, note_duration, out);
        out.close();
        if (!out) throw gopm::WavWriteError("music: failed to finish " + wav_path);
    }

    if (fmt == "text") {
        for (const gopm::NoteEntry& e : seq.entries) {
            std::cout << "day " << e.day << "  count " << e.excited_count << "  pitch "
                      << e.pitch_class << "  " << gopm::kSolfege[e.pitch_class] << "  "
                      << e.frequency_hz << " Hz\n";
        }
        if (!wav_path.empty())
            std::cout << "wrote " << wav_path << " (" << wav_bytes << " bytes)\n";
    } else {
        json notes = json::array();
        for (const gopm::NoteEntry& e : seq.entries)
            notes.push_back(json{{"day", e.day},
                                 {"count", e.excited_count},
                                 {"pitch_class", e.pitch_class},
                                 {"solfege", gopm::kSolfege[e.pitch_class]},
                                 {"frequency_hz", e.frequency_hz}});
        json doc{{"manifest", manifest}, {"notes", notes}};
        doc["wav"] = wav_path.empty()
                         ? json(nullptr)
                         : json{{"path", wav_path}, {"bytes", wav_bytes}};
        std::cout << (fmt == "json" ? doc.dump(2) : doc.dump()) << '\n';
    }
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Game of Primes: prime-driven cellular automaton toolkit"};
    app.set_version_flag("--version", std::string(gopm::kVersion));
    app.require_subcommand(1);

    int rc = kOk;

    // simulate
    auto* simulate = app.add_subcommand("simulate", "evolve a grid and print each day");
    SpecOpts sim_spec;
    uint64_t sim_days = 0;
    std::string sim_fmt = "text";
    add_spec_options(simulate, sim_spec);
    simulate->add_option("--days", sim_days, "number of days to evolve")->required();
    add_format_option(simulate, sim_fmt);
    simulate->callback([&] { rc = cmd_simulate(sim_spec, sim_days, sim_fmt); });

    // cycle
    auto* cycle = app.add_subcommand("cycle", "find the tail and period of a grid's run");
    SpecOpts cyc_spec;
    uint64_t cyc_max_days = 1'000'000;
    std::string cyc_fmt = "text";
    add_spec_options(cycle, cyc_spec);
    cycle->add_option("--max-days", cyc_max_days, "day budget")->capture_default_str();
    add_format_option(cycle, cyc_fmt);
    cycle->callback([&] { rc = cmd_cycle(cyc_spec, cyc_max_days, cyc_fmt); });

    // table
    auto* table = app.add_subcommand("table", "cycle reports across a dimension range");
    SpecOpts tab_spec;
    std::string tab_dims;
    uint64_t tab_max_days = 1'000'000;
    std::string tab_fmt = "text";
    table->add_option("--dims", tab_dims, "dimension range, N or A..B")->required();
    table->add_option("--start", tab_spec.start, "top-left value")->capture_default_str();
    table->add_option("--step", tab_spec.step, "common difference")->capture_default_str();
    table->add_option("--max-days", tab_max_days, "day budget per dimension")
        ->capture_default_str();
    add_format_option(table, tab_fmt);
    table->callback([&] { rc = cmd_table(tab_spec, tab_dims, tab_max_days, tab_fmt); });

    // quad
    auto* quad = app.add_subcommand("quad", "smallest quadruple value per dimension");
    SpecOpts quad_spec;
    std::string quad_dims;
    std::string quad_mode = "arithmetic";
    std::string quad_fmt = "text";
    auto* quad_dim_opt = quad->add_option("--dim", quad_dims, "single dimension");
    auto* quad_dims_opt = quad->add_option("--dims", quad_dims, "dimension range A..B");
    quad_dim_opt->excludes(quad_dims_opt);
    quad->add_option("--mode", quad_mode, "search mode")
        ->check(CLI::IsMember({"arithmetic", "grid"}))
        ->capture_default_str();
    quad->add_option("--start", quad_spec.start, "top-left value (grid mode)")
        ->capture_default_str();
    quad->add_option("--step", quad_spec.step, "common difference (grid mode)")
        ->capture_default_str();
    add_format_option(quad, quad_fmt);
    quad->callback([&] {
        if (quad_dims.empty())
            throw CLI::RequiredError("quad: one of --dim or --dims");
        rc = cmd_quad(quad_spec, quad_dims, quad_mode, quad_fmt);
    });

    // equiv
    auto* equiv = app.add_subcommand("equiv", "starts that replay the same game");
    uint64_t eq_dim = 0, eq_start = 0, eq_bound = 0, eq_limit = 10;
    std::string eq_fmt = "text";
    equiv->add_option("--dim", eq_dim, "grid side length")->required();
    equiv->add_option("--start", eq_start, "reference start value")->required();
    equiv->add_option("--bound", eq_bound, "largest candidate start")->required();
    equiv->add_option("--limit", eq_limit, "maximum results")->capture_default_str();
    add_format_option(equiv, eq_fmt);
    equiv->callback([&] { rc = cmd_equiv(eq_dim, eq_start, eq_bound, eq_limit, eq_fmt); });

    // verify
    auto* verify = app.add_subcommand("verify", "run a theorem check");
    SpecOpts ver_spec;
    std::string ver_theorem;
    uint64_t ver_max_days = 1'000'000;
    uint64_t ver_horizon = 100;
    std::string ver_fmt = "text";
    verify->add_option("--theorem", ver_theorem, "which check to run")
        ->check(CLI::IsMember({"4.1", "4.2", "4.3", "4.4.1"}))
        ->required();
    add_spec_options(verify, ver_spec);
    verify->add_option("--max-days", ver_max_days, "cycle budget (4.1, 4.2)")
        ->capture_default_str();
    verify->add_option("--horizon", ver_horizon, "day horizon (4.3)")->capture_default_str();
    add_format_option(verify, ver_fmt);
    verify->callback(
        [&] { rc = cmd_verify(ver_spec, ver_theorem, ver_max_days, ver_horizon, ver_fmt); });

    // music
    auto* music = app.add_subcommand("music", "note sequence and optional WAV");
    SpecOpts mus_spec;
    uint64_t mus_days = 0;
    uint64_t mus_first_day = 1;
    double mus_duration = 0.5;
    std::string mus_wav;
    std::string mus_fmt = "text";
    add_spec_options(music, mus_spec);
    music->add_option("--days", mus_days, "last day to sonify")->required();
    music->add_option("--first-day", mus_first_day, "first day to sonify")
        ->capture_default_str();
    music->add_option("--note-duration", mus_duration, "seconds per note")
        ->capture_default_str();
    music->add_option("--wav", mus_wav, "write a WAV file to this path");
    add_format_option(music, mus_fmt);
    music->callback([&] {
        rc = cmd_music(mus_spec, mus_days, mus_first_day, mus_duration, mus_wav, mus_fmt);
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kUsage;
    } catch (const gopm::BudgetExceededError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kBudget;
    } catch (const gopm::WavWriteError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::ios_base::failure& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kIo;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kUsage;
    }
    return rc;
}
