#include "boxdom/sweep.hpp"

#include <algorithm>
#include <charconv>
#include <exception>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string_view>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "boxdom/cells.hpp"
#include "boxdom/domination.hpp"
#include "boxdom/errors.hpp"
#include "boxdom/generators.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/hypothesis.hpp"
#include "boxdom/product.hpp"
#include "boxdom/replay.hpp"

namespace boxdom {

namespace {

using json = nlohmann::ordered_json;
namespace fs = std::filesystem;

std::string trim(std::string_view sv) {
    const char* ws = " \t\r\n";
    const auto b = sv.find_first_not_of(ws);
    if (b == std::string_view::npos) return "";
    const auto e = sv.find_last_not_of(ws);
    return std::string(sv.substr(b, e - b + 1));
}

int parse_int(const std::string& what, const std::string& text) {
    int value = 0;
    const auto [p, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || p != text.data() + text.size())
        throw ConfigError(what + ": expected an integer, got \"" + text + "\"");
    return value;
}

std::vector<std::string> split(const std::string& text, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, sep)) parts.push_back(cur);
    return parts;
}

void set_ks(SweepConfig& c, std::vector<int> ks) {
    if (ks.empty()) throw ConfigError("ks: need at least one cover size");
    std::sort(ks.begin(), ks.end());
    ks.erase(std::unique(ks.begin(), ks.end()), ks.end());
    for (int k : ks)
        if (k < 1 || k > 8) throw ConfigError("ks: cover sizes must be in 1..8");
    c.ks = std::move(ks);
}

void apply_kv(SweepConfig& c, const std::string& key, const std::string& value) {
    if (key == "g_source")
        c.g_source = value;
    else if (key == "h_source")
        c.h_source = value;
    else if (key == "max_n")
        c.max_n = parse_int(key, value);
    else if (key == "max_product")
        c.max_product = parse_int(key, value);
    else if (key == "ks") {
        std::vector<int> v;
        for (const std::string& part : split(value, ',')) v.push_back(parse_int("ks", trim(part)));
        set_ks(c, std::move(v));
    } else if (key == "d_mode")
        c.d_mode = value;
    else if (key == "jobs")
        c.jobs = parse_int(key, value);
    else if (key == "out")
        c.out = value;
    else if (key == "format")
        c.format = value;
    else if (key == "dump_dir")
        c.dump_dir = value;
    else
        throw ConfigError("unknown config key: " + key);
}

void validate(const SweepConfig& c) {
    if (c.g_source.empty() || c.h_source.empty())
        throw ConfigError("g_source and h_source are required");
    if (c.max_n < 0 || c.max_n > kMaxFactorVertices)
        throw ConfigError("max_n must be in 0.." + std::to_string(kMaxFactorVertices));
    if (c.max_product < 0 || c.max_product > kMaxProductVertices)
        throw ConfigError("max_product must be in 0.." + std::to_string(kMaxProductVertices));
    if (c.jobs < 1) throw ConfigError("jobs must be >= 1");
    if (c.format != "json" && c.format != "csv" && c.format != "text")
        throw ConfigError("format must be json, csv, or text");
    if (c.dump_dir.empty()) throw ConfigError("dump_dir must not be empty");
    parse_d_mode(c.d_mode);
}

std::pair<int, int> parse_range(const std::string& what, const std::string& text) {
    const auto dots = text.find("..");
    if (dots == std::string::npos) {
        const int a = parse_int(what, text);
        return {a, a};
    }
    const int a = parse_int(what, text.substr(0, dots));
    const int b = parse_int(what, text.substr(dots + 2));
    if (a > b) throw ConfigError(what + ": empty range " + text);
    return {a, b};
}

}  // namespace

std::optional<int> parse_d_mode(const std::string& mode) {
    if (mode == "minimum") return std::nullopt;
    const std::string_view prefix = "upto:";
    if (mode.rfind(prefix, 0) == 0) {
        const int b = parse_int("d_mode", mode.substr(prefix.size()));
        if (b < 0) throw ConfigError("d_mode: size bound must be >= 0");
        return b;
    }
    throw ConfigError("d_mode must be \"minimum\" or \"upto:<size>\", got \"" + mode + "\"");
}

SweepConfig parse_config_text(const std::string& text) {
    SweepConfig c;
    const std::string t = trim(text);
    if (!t.empty() && t.front() == '{') {
        json j;
        try {
            j = json::parse(t);
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config JSON: ") + e.what());
        }
        if (!j.is_object()) throw ConfigError("config JSON must be an object");
        try {
            for (const auto& item : j.items()) {
                const std::string& key = item.key();
                const json& val = item.value();
                if (key == "ks") {
                    if (!val.is_array()) throw ConfigError("ks must be an array of integers");
                    set_ks(c, val.get<std::vector<int>>());
                } else if (key == "max_n" || key == "max_product" || key == "jobs") {
                    if (!val.is_number_integer()) throw ConfigError(key + " must be an integer");
                    apply_kv(c, key, std::to_string(val.get<long long>()));
                } else if (val.is_string()) {
                    apply_kv(c, key, val.get<std::string>());
                } else {
                    throw ConfigError("config key " + key + " has an unsupported value type");
                }
            }
        } catch (const json::exception& e) {
            throw ConfigError(std::string("config JSON: ") + e.what());
        }
    } else {
        std::istringstream in(text);
        std::string line;
        int lineno = 0;
        while (std::getline(in, line)) {
            ++lineno;
            const std::string stripped = trim(line);
            if (stripped.empty() || stripped.front() == '#') continue;
            const auto eq = stripped.find('=');
            if (eq == std::string::npos)
                throw ConfigError("config line " + std::to_string(lineno) + ": expected key=value");
            apply_kv(c, trim(stripped.substr(0, eq)), trim(stripped.substr(eq + 1)));
        }
    }
    validate(c);
    return c;
}

SweepConfig parse_config_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open config file: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_config_text(buf.str());
}

std::vector<Graph> load_graph_source(const std::string& spec, int max_n) {
    const auto colon = spec.find(':');
    if (colon == std::string::npos)
        throw ConfigError(
            "graph source needs a scheme prefix "
            "(file:, g6:, paths:, cycles:, completes:, stars:): " +
            spec);
    const std::string scheme = spec.substr(0, colon);
    const std::string rest = spec.substr(colon + 1);
    if (scheme == "file") return read_graph6_file(rest, max_n);
    if (scheme == "g6") {
        std::vector<Graph> out;
        for (const std::string& part : split(rest, ',')) {
            const std::string word = trim(part);
            if (word.empty()) throw ConfigError("g6 source: empty word in " + spec);
            out.push_back(parse_graph6(word, max_n));
        }
        return out;
    }
    if (scheme != "paths" && scheme != "cycles" && scheme != "completes" && scheme != "stars")
        throw ConfigError("unknown graph source scheme: " + scheme);
    const auto [lo, hi] = parse_range(scheme, rest);
    const int least = scheme == "cycles" ? 3 : scheme == "stars" ? 2 : 1;
    if (lo < least)
        throw ConfigError(scheme + ": order must be >= " + std::to_string(least));
    if (hi > max_n)
        throw ConfigError(scheme + ": order " + std::to_string(hi) + " exceeds max_n " +
                          std::to_string(max_n));
    std::vector<Graph> out;
    for (int n = lo; n <= hi; ++n) {
        if (scheme == "paths")
            out.push_back(path_graph(n));
        else if (scheme == "cycles")
            out.push_back(cycle_graph(n));
        else if (scheme == "completes")
            out.push_back(complete_graph(n));
        else
            out.push_back(star_graph(n));
    }
    return out;
}

SweepTallies& SweepTallies::operator+=(const SweepTallies& o) {
    pairs += o.pairs;
    pairs_skipped += o.pairs_skipped;
    sets += o.sets;
    cs_checks += o.cs_checks;
    single_cover += o.single_cover;
    pair_cover += o.pair_cover;
    min_pair_cover += o.min_pair_cover;
    per_layer_minimum += o.per_layer_minimum;
    replays_single += o.replays_single;
    replays_pair += o.replays_pair;
    replays_delegated += o.replays_delegated;
    conjecture_checked += o.conjecture_checked;
    conjecture_holds += o.conjecture_holds;
    conjecture_equality += o.conjecture_equality;
    return *this;
}

namespace {

struct Plan {
    std::vector<Graph> gs, hs;
    std::vector<std::string> g6_gs, g6_hs;
    std::optional<int> upto;

    long long pair_count() const {
        return static_cast<long long>(gs.size()) * static_cast<long long>(hs.size());
    }
};

Plan make_plan(const SweepConfig& cfg) {
    Plan plan;
    plan.gs = load_graph_source(cfg.g_source, cfg.max_n);
    plan.hs = load_graph_source(cfg.h_source, cfg.max_n);
    for (const Graph& g : plan.gs) plan.g6_gs.push_back(to_graph6(g));
    for (const Graph& h : plan.hs) plan.g6_hs.push_back(to_graph6(h));
    plan.upto = parse_d_mode(cfg.d_mode);
    return plan;
}

std::string write_json_file(const fs::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw IoError("cannot write " + path.string());
    out << j.dump(2) << "\n";
    out.flush();
    if (!out) throw IoError("short write to " + path.string());
    return path.string();
}

void ensure_dir(const std::string& dir) {
    std::error_code ec;
    fs::create_directories(dir, ec);
    if (ec) throw IoError("cannot create directory " + dir + ": " + ec.message());
}

std::string write_replay_failure_dump(const SweepConfig& cfg, long long pair_index,
                                      int set_index, const StepFailed& e) {
    ensure_dir(cfg.dump_dir);
    json j;
    j["kind"] = "replay-failure";
    j["pair_index"] = pair_index;
    j["set_index"] = set_index;
    j["error"] = e.what();
    j["report"] = replay_json(e.report);
    const fs::path path = fs::path(cfg.dump_dir) /
                          ("replay_failure_pair" + std::to_string(pair_index) + "_set" +
                           std::to_string(set_index) + ".json");
    return write_json_file(path, j);
}

json product_pairs_json(const ProductGraph& p, const VertexSet& d) {
    json arr = json::array();
    d.for_each([&](int v) {
        const auto [gv, hv] = p.decode(v);
        arr.push_back(json::array({gv, hv}));
    });
    return arr;
}

json indices_json(const VertexSet& s) { return json(s.indices()); }

}  // namespace

nlohmann::ordered_json hypothesis_flags_json(const HypothesisReport& hyp) {
    json j;
    j["single_cover"] = hyp.single_cover;
    j["pair_cover"] = hyp.pair_cover;
    j["min_pair_cover"] = hyp.min_pair_cover;
    j["per_layer_minimum"] = hyp.per_layer_minimum;
    j["min_cover_k"] = hyp.min_cover_k;
    j["min_minimum_cover_k"] =
        hyp.min_minimum_cover_k ? json(*hyp.min_minimum_cover_k) : json(nullptr);
    json kc = json::object();
    for (int k : hyp.ks_tested) kc[std::to_string(k)] = hyp.k_covers.count(k) > 0;
    j["k_covers"] = std::move(kc);
    if (hyp.single_witness) j["single_witness"] = indices_json(*hyp.single_witness);
    if (hyp.pair_witness)
        j["pair_witness"] = json::array(
            {indices_json(hyp.pair_witness->first), indices_json(hyp.pair_witness->second)});
    if (hyp.min_pair_witness)
        j["min_pair_witness"] = json::array({indices_json(hyp.min_pair_witness->first),
                                             indices_json(hyp.min_pair_witness->second)});
    return j;
}

nlohmann::ordered_json cs_outcome_json(const CSOutcome& out, int bases_checked) {
    json j;
    j["dominators"] = out.cert.dominators;
    j["n_per_i"] = out.cert.n_per_i;
    j["m_per_h"] = out.cert.m_per_h;
    j["d_size"] = out.cert.d_size;
    j["gamma_g"] = out.cert.gamma_g;
    j["gamma_h"] = out.cert.gamma_h;
    j["eq1_slack"] = out.eq1_slack;
    j["eq2_slack"] = out.eq2_slack;
    j["half_bound_tight"] = out.half_bound_tight;
    j["bases_checked"] = bases_checked;
    return j;
}

namespace {

json replay_summary_json(const ReplayReport& rr) {
    return json{{"mode", rr.mode},
                {"passed", rr.passed},
                {"delegated", rr.delegated},
                {"swapped", rr.swapped},
                {"steps", rr.steps.size()},
                {"bound_lhs", rr.bound_lhs},
                {"bound_rhs", rr.bound_rhs}};
}

struct PairOutcome {
    json record;
    SweepTallies tallies;
    json violations = json::array();
};

PairOutcome process_pair(const SweepConfig& cfg, const Plan& plan, long long idx) {
    const std::size_t gi = static_cast<std::size_t>(idx / static_cast<long long>(plan.hs.size()));
    const std::size_t hi = static_cast<std::size_t>(idx % static_cast<long long>(plan.hs.size()));
    const Graph& g = plan.gs[gi];
    const Graph& h = plan.hs[hi];

    PairOutcome out;
    out.tallies.pairs = 1;
    json rec;
    rec["g6_G"] = plan.g6_gs[gi];
    rec["g6_H"] = plan.g6_hs[hi];
    rec["n_G"] = g.n();
    rec["n_H"] = h.n();
    const int gg = gamma_exact(g).gamma;
    const int gh = gamma_exact(h).gamma;
    rec["gamma_G"] = gg;
    rec["gamma_H"] = gh;

    const ProductGraph p = cartesian_product(g, h, cfg.max_product);
    if (p.n() > kMaxSetEnumerationVertices || g.n() > kMaxEnumerationVertices) {
        rec["skipped"] = "set enumeration caps exceeded";
        rec["sets"] = json::array();
        out.tallies.pairs_skipped = 1;
        out.record = std::move(rec);
        return out;
    }

    const int gp = gamma_exact(p.graph()).gamma;
    rec["gamma_product"] = gp;
    out.tallies.conjecture_checked = 1;
    if (2 * gp < gg * gh)
        throw InvariantViolation("gamma(GxH) = " + std::to_string(gp) +
                                 " is below half of gamma(G)*gamma(H) = " +
                                 std::to_string(gg * gh));
    if (gp >= gg * gh) {
        out.tallies.conjecture_holds = 1;
        if (gp == gg * gh) out.tallies.conjecture_equality = 1;
    } else {
        out.violations.push_back({{"kind", "conjecture"},
                                  {"pair_index", idx},
                                  {"g6_G", plan.g6_gs[gi]},
                                  {"g6_H", plan.g6_hs[hi]},
                                  {"gamma_G", gg},
                                  {"gamma_H", gh},
                                  {"gamma_product", gp}});
    }

    const std::vector<VertexSet> ds =
        plan.upto ? dominating_sets_up_to(p.graph(), std::min(*plan.upto, p.n()))
                  : minimum_dominating_sets(p.graph());
    const std::vector<VertexSet> bases = minimum_dominating_sets(g);

    json sets = json::array();
    int set_index = 0;
    for (const VertexSet& d : ds) {
        out.tallies.sets += 1;
        json srec;
        srec["d"] = product_pairs_json(p, d);
        srec["d_size"] = d.size();

        const HypothesisReport hyp = classify(p, d, cfg.ks);
        out.tallies.single_cover += hyp.single_cover ? 1 : 0;
        out.tallies.pair_cover += hyp.pair_cover ? 1 : 0;
        out.tallies.min_pair_cover += hyp.min_pair_cover ? 1 : 0;
        out.tallies.per_layer_minimum += hyp.per_layer_minimum ? 1 : 0;
        srec["hypothesis_flags"] = hypothesis_flags_json(hyp);

        try {
            if (hyp.single_cover) {
                const ReplayReport rr = replay_one_set(g, h, d, *hyp.single_witness);
                out.tallies.replays_single += 1;
                srec["replay"] = replay_summary_json(rr);
            } else if (hyp.pair_cover) {
                const ReplayReport rr = replay_two_sets(g, h, d, hyp.pair_witness->first,
                                                        hyp.pair_witness->second);
                out.tallies.replays_pair += 1;
                if (rr.delegated) out.tallies.replays_delegated += 1;
                srec["replay"] = replay_summary_json(rr);
            }
        } catch (const StepFailed& e) {
            const std::string path = write_replay_failure_dump(cfg, idx, set_index, e);
            throw InvariantViolation(std::string("replay step failed: ") + e.what() +
                                     " (dump: " + path + ")");
        }

        // Verify the double-counting certificate against every minimum
        // dominating set of G; the lex-first base is the one recorded.
        json cs;
        for (std::size_t bi = 0; bi < bases.size(); ++bi) {
            const CellPartition cells = build_cells(g, bases[bi].indices());
            const CSOutcome outcome = verify_clark_suen(p, d, cells);
            out.tallies.cs_checks += 1;
            if (bi == 0) cs = cs_outcome_json(outcome, static_cast<int>(bases.size()));
        }
        srec["cs_certificate"] = std::move(cs);
        sets.push_back(std::move(srec));
        ++set_index;
    }
    rec["sets"] = std::move(sets);
    out.record = std::move(rec);
    return out;
}

PairOutcome process_pair_with_context(const SweepConfig& cfg, const Plan& plan, long long idx) {
    try {
        return process_pair(cfg, plan, idx);
    } catch (const InvariantViolation& e) {
        const std::size_t gi =
            static_cast<std::size_t>(idx / static_cast<long long>(plan.hs.size()));
        const std::size_t hi =
            static_cast<std::size_t>(idx % static_cast<long long>(plan.hs.size()));
        throw InvariantViolation("pair " + std::to_string(idx) + " (" + plan.g6_gs[gi] + " x " +
                                 plan.g6_hs[hi] + "): " + e.what());
    }
}

SweepReport assemble(const SweepConfig& cfg, std::vector<PairOutcome>&& slots) {
    SweepReport rep;
    rep.config = cfg;
    for (PairOutcome& slot : slots) {
        rep.tallies += slot.tallies;
        rep.pairs.push_back(std::move(slot.record));
        for (json& v : slot.violations) rep.violations.push_back(std::move(v));
    }
    return rep;
}

json config_echo(const SweepConfig& c) {
    // jobs and out are execution details, not semantics: they are omitted so
    // reports from different worker counts stay byte-identical.
    json j;
    j["g_source"] = c.g_source;
    j["h_source"] = c.h_source;
    j["max_n"] = c.max_n;
    j["max_product"] = c.max_product;
    j["ks"] = c.ks;
    j["d_mode"] = c.d_mode;
    j["format"] = c.format;
    j["dump_dir"] = c.dump_dir;
    return j;
}

json tallies_json(const SweepTallies& t) {
    json j;
    j["pairs"] = t.pairs;
    j["pairs_skipped"] = t.pairs_skipped;
    j["sets"] = t.sets;
    j["cs_checks"] = t.cs_checks;
    j["single_cover"] = t.single_cover;
    j["pair_cover"] = t.pair_cover;
    j["min_pair_cover"] = t.min_pair_cover;
    j["per_layer_minimum"] = t.per_layer_minimum;
    j["replays_single"] = t.replays_single;
    j["replays_pair"] = t.replays_pair;
    j["replays_delegated"] = t.replays_delegated;
    j["conjecture_checked"] = t.conjecture_checked;
    j["conjecture_holds"] = t.conjecture_holds;
    j["conjecture_equality"] = t.conjecture_equality;
    return j;
}

}  // namespace

SweepReport run_sweep_serial(const SweepConfig& config) {
    const Plan plan = make_plan(config);
    const long long total = plan.pair_count();
    std::vector<PairOutcome> slots(static_cast<std::size_t>(total));
    for (long long idx = 0; idx < total; ++idx)
        slots[static_cast<std::size_t>(idx)] = process_pair_with_context(config, plan, idx);
    return assemble(config, std::move(slots));
}

SweepReport run_sweep(const SweepConfig& config) {
#ifdef _OPENMP
    if (config.jobs > 1) {
        const Plan plan = make_plan(config);
        const long long total = plan.pair_count();
        std::vector<PairOutcome> slots(static_cast<std::size_t>(total));
        std::vector<std::exception_ptr> errors(static_cast<std::size_t>(total));
#pragma omp parallel for schedule(dynamic) num_threads(config.jobs)
        for (long long idx = 0; idx < total; ++idx) {
            try {
                slots[static_cast<std::size_t>(idx)] =
                    process_pair_with_context(config, plan, idx);
            } catch (...) {
                errors[static_cast<std::size_t>(idx)] = std::current_exception();
            }
        }
        // Merge in pair order; on error, the lowest-index failure wins so
        // serial and parallel runs fail identically.
        for (const std::exception_ptr& e : errors)
            if (e) std::rethrow_exception(e);
        return assemble(config, std::move(slots));
    }
#endif
    return run_sweep_serial(config);
}

nlohmann::ordered_json report_json(const SweepReport& report) {
    json j;
    j["config_echo"] = config_echo(report.config);
    j["pairs"] = report.pairs;
    j["tallies"] = tallies_json(report.tallies);
    j["violations"] = report.violations;
    return j;
}

namespace {

std::string render_csv(const SweepReport& rep) {
    std::string out =
        "pair_index,g6_G,g6_H,n_G,n_H,gamma_G,gamma_H,gamma_product,d_size,d,"
        "single_cover,pair_cover,min_pair_cover,per_layer_minimum,min_cover_k,"
        "replay_mode,replay_passed,eq1_slack,eq2_slack\n";
    long long pi = 0;
    for (const json& pr : rep.pairs) {
        if (pr.contains("gamma_product")) {
            const int ng = pr["n_G"].get<int>();
            for (const json& s : pr["sets"]) {
                std::string dstr;
                for (const json& gh : s["d"]) {
                    if (!dstr.empty()) dstr += '|';
                    dstr += std::to_string(gh[0].get<int>() + gh[1].get<int>() * ng);
                }
                const json& hf = s["hypothesis_flags"];
                const bool has_replay = s.contains("replay");
                const json& cs = s["cs_certificate"];
                out += std::to_string(pi) + ',' + pr["g6_G"].get<std::string>() + ',' +
                       pr["g6_H"].get<std::string>() + ',' + std::to_string(ng) + ',' +
                       std::to_string(pr["n_H"].get<int>()) + ',' +
                       std::to_string(pr["gamma_G"].get<int>()) + ',' +
                       std::to_string(pr["gamma_H"].get<int>()) + ',' +
                       std::to_string(pr["gamma_product"].get<int>()) + ',' +
                       std::to_string(s["d_size"].get<int>()) + ',' + dstr + ',' +
                       (hf["single_cover"].get<bool>() ? "1" : "0") + ',' +
                       (hf["pair_cover"].get<bool>() ? "1" : "0") + ',' +
                       (hf["min_pair_cover"].get<bool>() ? "1" : "0") + ',' +
                       (hf["per_layer_minimum"].get<bool>() ? "1" : "0") + ',' +
                       std::to_string(hf["min_cover_k"].get<int>()) + ',' +
                       (has_replay ? s["replay"]["mode"].get<std::string>() : std::string()) +
                       ',' +
                       (has_replay ? (s["replay"]["passed"].get<bool>() ? "1" : "0")
                                   : std::string()) +
                       ',' + std::to_string(cs["eq1_slack"].get<int>()) + ',' +
                       std::to_string(cs["eq2_slack"].get<int>()) + '\n';
            }
        }
        ++pi;
    }
    return out;
}

std::string render_text(const SweepReport& rep) {
    std::ostringstream out;
    const SweepTallies& t = rep.tallies;
    out << "pairs: " << t.pairs << " (" << t.pairs_skipped << " skipped)\n";
    out << "dominating sets checked: " << t.sets << "\n";
    out << "double-counting certificates verified: " << t.cs_checks << "\n";
    out << "covers: single=" << t.single_cover << " pair=" << t.pair_cover
        << " min-pair=" << t.min_pair_cover << " per-layer-minimum=" << t.per_layer_minimum
        << "\n";
    out << "replays: single=" << t.replays_single << " pair=" << t.replays_pair
        << " (delegated=" << t.replays_delegated << ")\n";
    out << "product bound: checked=" << t.conjecture_checked << " holds=" << t.conjecture_holds
        << " equality=" << t.conjecture_equality << "\n";
    out << "violations: " << rep.violations.size() << "\n";
    for (const json& pr : rep.pairs) {
        out << pr["g6_G"].get<std::string>() << " x " << pr["g6_H"].get<std::string>()
            << ": gamma_G=" << pr["gamma_G"].get<int>()
            << " gamma_H=" << pr["gamma_H"].get<int>();
        if (pr.contains("gamma_product")) {
            out << " gamma_product=" << pr["gamma_product"].get<int>() << " sets="
                << pr["sets"].size();
        } else {
            out << " [skipped: " << pr["skipped"].get<std::string>() << "]";
        }
        out << "\n";
    }
    return out.str();
}

}  // namespace

std::string render_report(const SweepReport& report) {
    if (report.config.format == "csv") return render_csv(report);
    if (report.config.format == "text") return render_text(report);
    return report_json(report).dump(2) + "\n";
}

HuntResult run_hunt(const SweepConfig& config, int k) {
    if (k < 1 || k > 8) throw ConfigError("hunt cover size must be in 1..8");
    const Plan plan = make_plan(config);
    HuntResult res;
    res.k = k;
    const long long total = plan.pair_count();
    for (long long idx = 0; idx < total; ++idx) {
        const std::size_t gi =
            static_cast<std::size_t>(idx / static_cast<long long>(plan.hs.size()));
        const std::size_t hi =
            static_cast<std::size_t>(idx % static_cast<long long>(plan.hs.size()));
        const Graph& g = plan.gs[gi];
        const Graph& h = plan.hs[hi];
        const int gg = gamma_exact(g).gamma;
        const int gh = gamma_exact(h).gamma;
        const ProductGraph p = cartesian_product(g, h, config.max_product);
        if (p.n() > kMaxSetEnumerationVertices || g.n() > kMaxEnumerationVertices) {
            res.pairs_skipped += 1;
            continue;
        }
        const int gp = gamma_exact(p.graph()).gamma;
        if (2 * gp < gg * gh)
            throw InvariantViolation("pair " + std::to_string(idx) + " (" + plan.g6_gs[gi] +
                                     " x " + plan.g6_hs[hi] + "): gamma(GxH) = " +
                                     std::to_string(gp) + " is below half of " +
                                     std::to_string(gg * gh));
        res.pairs_scanned += 1;
        const int bound = gg * gh - 1;
        if (bound < gp) continue;
        for (const VertexSet& d : dominating_sets_up_to(p.graph(), bound)) {
            res.sets_scanned += 1;
            const LayerProjections proj = layer_projections(p, d);
            const auto cover = find_k_cover(g, proj, k);
            if (!cover) continue;
            HuntHit hit;
            hit.k = k;
            hit.pair_index = static_cast<int>(idx);
            hit.g6_g = plan.g6_gs[gi];
            hit.g6_h = plan.g6_hs[hi];
            hit.gamma_g = gg;
            hit.gamma_h = gh;
            hit.gamma_product = gp;
            hit.d = d.indices();
            for (const VertexSet& s : *cover) hit.cover.push_back(s.indices());
            hit.dump_path = write_hunt_dump(hit, config.dump_dir);
            res.hits.push_back(std::move(hit));
        }
    }
    return res;
}

nlohmann::ordered_json hunt_json(const HuntResult& result) {
    json j;
    j["k"] = result.k;
    j["pairs_scanned"] = result.pairs_scanned;
    j["pairs_skipped"] = result.pairs_skipped;
    j["sets_scanned"] = result.sets_scanned;
    json hits = json::array();
    for (const HuntHit& hit : result.hits) {
        hits.push_back({{"k", hit.k},
                        {"pair_index", hit.pair_index},
                        {"g6_G", hit.g6_g},
                        {"g6_H", hit.g6_h},
                        {"gamma_G", hit.gamma_g},
                        {"gamma_H", hit.gamma_h},
                        {"gamma_product", hit.gamma_product},
                        {"d", hit.d},
                        {"cover", hit.cover},
                        {"dump", hit.dump_path}});
    }
    j["hits"] = std::move(hits);
    return j;
}

std::string write_hunt_dump(const HuntHit& hit, const std::string& dump_dir) {
    ensure_dir(dump_dir);
    json j;
    j["kind"] = "hunt-candidate";
    j["k"] = hit.k;
    j["pair_index"] = hit.pair_index;
    j["g6_G"] = hit.g6_g;
    j["g6_H"] = hit.g6_h;
    j["gamma_G"] = hit.gamma_g;
    j["gamma_H"] = hit.gamma_h;
    j["gamma_product"] = hit.gamma_product;
    j["d"] = hit.d;
    const Graph g = parse_graph6(hit.g6_g);
    json d_pairs = json::array();
    if (g.n() > 0)
        for (int v : hit.d) d_pairs.push_back(json::array({v % g.n(), v / g.n()}));
    j["d_pairs"] = std::move(d_pairs);
    j["cover"] = hit.cover;
    std::string name =
        "hunt_k" + std::to_string(hit.k) + "_pair" + std::to_string(hit.pair_index) + "_d";
    for (std::size_t i = 0; i < hit.d.size(); ++i)
        name += (i ? "-" : "") + std::to_string(hit.d[i]);
    name += ".json";
    return write_json_file(fs::path(dump_dir) / name, j);
}

HuntHit load_hunt_dump(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open dump: " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    json j;
    try {
        j = json::parse(buf.str());
    } catch (const json::exception& e) {
        throw ConfigError("dump " + path + ": " + e.what());
    }
    try {
        if (j.at("kind").get<std::string>() != "hunt-candidate")
            throw ConfigError("dump " + path + ": not a hunt candidate");
        HuntHit hit;
        hit.k = j.at("k").get<int>();
        hit.pair_index = j.at("pair_index").get<int>();
        hit.g6_g = j.at("g6_G").get<std::string>();
        hit.g6_h = j.at("g6_H").get<std::string>();
        hit.gamma_g = j.at("gamma_G").get<int>();
        hit.gamma_h = j.at("gamma_H").get<int>();
        hit.gamma_product = j.at("gamma_product").get<int>();
        hit.d = j.at("d").get<std::vector<int>>();
        hit.cover = j.at("cover").get<std::vector<std::vector<int>>>();
        hit.dump_path = path;
        return hit;
    } catch (const json::exception& e) {
        throw ConfigError("dump " + path + ": " + e.what());
    }
}

}  // namespace boxdom
