// Command-line front end: gamma, product, mds, cells, classify, replay,
// sweep, hunt.  Exit codes: 0 success, 1 usage or bad input, 2 I/O failure,
// 3 invariant violation (bug flag), 4 counterexample candidate (hunt).
#include <charconv>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "boxdom/cells.hpp"
#include "boxdom/domination.hpp"
#include "boxdom/errors.hpp"
#include "boxdom/graph6.hpp"
#include "boxdom/hypothesis.hpp"
#include "boxdom/product.hpp"
#include "boxdom/replay.hpp"
#include "boxdom/sweep.hpp"

namespace {

using json = nlohmann::ordered_json;
using namespace boxdom;

std::vector<int> parse_index_list(const std::string& what, const std::string& text) {
    std::vector<int> out;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        const std::string item = text.substr(pos, comma - pos);
        if (item.empty()) throw ConfigError(what + ": empty entry in \"" + text + "\"");
        int value = 0;
        const auto [p, ec] = std::from_chars(item.data(), item.data() + item.size(), value);
        if (ec != std::errc{} || p != item.data() + item.size())
            throw ConfigError(what + ": expected an integer, got \"" + item + "\"");
        out.push_back(value);
        pos = comma + 1;
        if (comma == text.size()) break;
    }
    if (out.empty()) throw ConfigError(what + ": empty list");
    return out;
}

void emit(const std::string& out_path, const std::string& content) {
    if (out_path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream f(out_path, std::ios::binary | std::ios::trunc);
    if (!f) throw IoError("cannot open output file: " + out_path);
    f << content;
    f.flush();
    if (!f) throw IoError("short write to " + out_path);
}

std::string set_text(const std::vector<int>& members) {
    std::string s = "{";
    for (std::size_t i = 0; i < members.size(); ++i)
        s += (i ? ", " : "") + std::to_string(members[i]);
    return s + "}";
}

// Options shared by every subcommand; zero counts mean "leave the
// command-specific default alone".
struct Shared {
    int jobs = 1;
    std::string format;
    int max_n = kMaxFactorVertices;
    int max_product = kMaxProductVertices;
    std::string out;
    std::string dump_dir;

    CLI::Option* jobs_opt = nullptr;
    CLI::Option* format_opt = nullptr;
    CLI::Option* max_n_opt = nullptr;
    CLI::Option* max_product_opt = nullptr;
    CLI::Option* out_opt = nullptr;
    CLI::Option* dump_dir_opt = nullptr;

    void attach(CLI::App& app) {
        jobs_opt = app.add_option("--jobs", jobs, "worker threads for sweep")
                       ->check(CLI::Range(1, 1024));
        format_opt = app.add_option("--format", format, "output format: json, csv, or text")
                         ->check(CLI::IsMember({"json", "csv", "text"}));
        max_n_opt = app.add_option("--max-n", max_n, "largest accepted factor order")
                        ->check(CLI::Range(0, kMaxFactorVertices));
        max_product_opt =
            app.add_option("--max-product", max_product, "largest accepted product order")
                ->check(CLI::Range(0, kMaxProductVertices));
        out_opt = app.add_option("--out", out, "write the result here instead of stdout");
        dump_dir_opt = app.add_option("--dump-dir", dump_dir, "directory for dump artifacts");
    }

    std::string pick_format(const std::string& fallback) const {
        return format_opt->count() ? format : fallback;
    }
};

void apply_overrides(const Shared& shared, SweepConfig& cfg) {
    if (shared.jobs_opt->count()) cfg.jobs = shared.jobs;
    if (shared.format_opt->count()) cfg.format = shared.format;
    if (shared.max_n_opt->count()) cfg.max_n = shared.max_n;
    if (shared.max_product_opt->count()) cfg.max_product = shared.max_product;
    if (shared.out_opt->count()) cfg.out = shared.out;
    if (shared.dump_dir_opt->count()) cfg.dump_dir = shared.dump_dir;
}

int run_gamma(const Shared& shared, const std::string& word) {
    const Graph g = parse_graph6(word, shared.max_n);
    const DominationResult r = gamma_exact(g);
    const std::string fmt = shared.pick_format("text");
    if (fmt == "json") {
        json j;
        j["g6"] = to_graph6(g);
        j["n"] = g.n();
        j["m"] = g.edge_count();
        j["gamma"] = r.gamma;
        j["witness"] = r.witness.indices();
        j["nodes_explored"] = r.nodes_explored;
        emit(shared.out, j.dump(2) + "\n");
    } else if (fmt == "csv") {
        throw ConfigError("csv output is only available for sweep");
    } else {
        emit(shared.out, "n = " + std::to_string(g.n()) + ", m = " +
                             std::to_string(g.edge_count()) + "\ngamma = " +
                             std::to_string(r.gamma) + "\nwitness = " +
                             set_text(r.witness.indices()) + "\n");
    }
    return 0;
}

int run_product(const Shared& shared, const std::string& wg, const std::string& wh) {
    const Graph g = parse_graph6(wg, shared.max_n);
    const Graph h = parse_graph6(wh, shared.max_n);
    const ProductGraph p = cartesian_product(g, h, shared.max_product);
    const std::string fmt = shared.pick_format("text");
    if (fmt == "json") {
        json j;
        j["g6_G"] = to_graph6(g);
        j["g6_H"] = to_graph6(h);
        j["g6_product"] = to_graph6(p.graph());
        j["n"] = p.n();
        j["m"] = p.graph().edge_count();
        emit(shared.out, j.dump(2) + "\n");
    } else if (fmt == "csv") {
        throw ConfigError("csv output is only available for sweep");
    } else {
        emit(shared.out, "product: n = " + std::to_string(p.n()) + ", m = " +
                             std::to_string(p.graph().edge_count()) + "\ngraph6: " +
                             to_graph6(p.graph()) + "\n");
    }
    return 0;
}

int run_mds(const Shared& shared, const std::string& word, const std::string& containing) {
    const Graph g = parse_graph6(word, shared.max_n);
    std::vector<VertexSet> sets;
    std::string kind;
    if (!containing.empty()) {
        const VertexSet x =
            VertexSet::from_indices(g.n(), parse_index_list("--containing", containing));
        sets = minimal_dominating_containing(g, x);
        kind = "minimal dominating supersets";
    } else {
        sets = minimum_dominating_sets(g);
        kind = "minimum dominating sets";
    }
    const std::string fmt = shared.pick_format("text");
    if (fmt == "json") {
        json j;
        j["g6"] = to_graph6(g);
        j["kind"] = kind;
        if (containing.empty()) j["gamma"] = gamma_exact(g).gamma;
        j["count"] = sets.size();
        json arr = json::array();
        for (const VertexSet& s : sets) arr.push_back(s.indices());
        j["sets"] = std::move(arr);
        emit(shared.out, j.dump(2) + "\n");
    } else if (fmt == "csv") {
        throw ConfigError("csv output is only available for sweep");
    } else {
        std::string text = std::to_string(sets.size()) + " " + kind + "\n";
        for (const VertexSet& s : sets) text += set_text(s.indices()) + "\n";
        emit(shared.out, text);
    }
    return 0;
}

int run_cells(const Shared& shared, const std::string& word, const std::string& dominators) {
    const Graph g = parse_graph6(word, shared.max_n);
    const CellPartition cells =
        build_cells(g, parse_index_list("--dominators", dominators));
    const std::string fmt = shared.pick_format("text");
    if (fmt == "json") {
        json j;
        j["g6"] = to_graph6(g);
        j["dominators"] = cells.dominators;
        json parts = json::array();
        for (const VertexSet& part : cells.parts) parts.push_back(part.indices());
        j["parts"] = std::move(parts);
        emit(shared.out, j.dump(2) + "\n");
    } else if (fmt == "csv") {
        throw ConfigError("csv output is only available for sweep");
    } else {
        std::string text;
        for (int i = 0; i < cells.k(); ++i)
            text += "cell " + std::to_string(i) + " (dominator " +
                    std::to_string(cells.dominators[static_cast<std::size_t>(i)]) +
                    "): " + set_text(cells.parts[static_cast<std::size_t>(i)].indices()) + "\n";
        emit(shared.out, text);
    }
    return 0;
}

int run_classify(const Shared& shared, const std::string& wg, const std::string& wh,
                 bool all_min_d, const std::string& d_str) {
    const Graph g = parse_graph6(wg, shared.max_n);
    const Graph h = parse_graph6(wh, shared.max_n);
    const ProductGraph p = cartesian_product(g, h, shared.max_product);

    std::vector<VertexSet> ds;
    if (!d_str.empty()) {
        ds.push_back(VertexSet::from_indices(p.n(), parse_index_list("--d", d_str)));
    } else {
        std::vector<VertexSet> minima = minimum_dominating_sets(p.graph());
        if (all_min_d)
            ds = std::move(minima);
        else
            ds.push_back(minima.front());
    }

    json j;
    j["g6_G"] = to_graph6(g);
    j["g6_H"] = to_graph6(h);
    j["gamma_G"] = gamma_exact(g).gamma;
    j["gamma_H"] = gamma_exact(h).gamma;
    if (p.n() <= kMaxSetEnumerationVertices)
        j["gamma_product"] = gamma_exact(p.graph()).gamma;
    json sets = json::array();
    std::string text;
    for (const VertexSet& d : ds) {
        const HypothesisReport hyp = classify(p, d);
        json srec;
        json d_pairs = json::array();
        d.for_each([&](int v) {
            const auto [gv, hv] = p.decode(v);
            d_pairs.push_back(json::array({gv, hv}));
        });
        srec["d"] = std::move(d_pairs);
        srec["d_size"] = d.size();
        srec["hypothesis_flags"] = hypothesis_flags_json(hyp);
        sets.push_back(std::move(srec));
        text += "d = " + set_text(d.indices()) + ": single=" +
                (hyp.single_cover ? "yes" : "no") + " pair=" + (hyp.pair_cover ? "yes" : "no") +
                " min-pair=" + (hyp.min_pair_cover ? "yes" : "no") + " per-layer-minimum=" +
                (hyp.per_layer_minimum ? "yes" : "no") + " min_cover_k=" +
                std::to_string(hyp.min_cover_k) + "\n";
    }
    j["sets"] = std::move(sets);

    const std::string fmt = shared.pick_format("json");
    if (fmt == "json")
        emit(shared.out, j.dump(2) + "\n");
    else if (fmt == "csv")
        throw ConfigError("csv output is only available for sweep");
    else
        emit(shared.out, text);
    return 0;
}

int run_replay(const Shared& shared, const std::string& wg, const std::string& wh,
               const std::string& d_str, const std::string& s1_str, const std::string& s2_str) {
    const Graph g = parse_graph6(wg, shared.max_n);
    const Graph h = parse_graph6(wh, shared.max_n);
    const ProductGraph p = cartesian_product(g, h, shared.max_product);
    const VertexSet d = VertexSet::from_indices(p.n(), parse_index_list("--d", d_str));
    const VertexSet s1 = VertexSet::from_indices(g.n(), parse_index_list("--s1", s1_str));
    const std::string fmt = shared.pick_format("text");

    ReplayReport report;
    try {
        if (s2_str.empty()) {
            report = replay_one_set(g, h, d, s1);
        } else {
            const VertexSet s2 =
                VertexSet::from_indices(g.n(), parse_index_list("--s2", s2_str));
            report = replay_two_sets(g, h, d, s1, s2);
        }
    } catch (const StepFailed& e) {
        const std::string body = fmt == "json" ? replay_json(e.report).dump(2) + "\n"
                                                : replay_transcript(e.report);
        emit(shared.out, body);
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    if (fmt == "csv") throw ConfigError("csv output is only available for sweep");
    emit(shared.out, fmt == "json" ? replay_json(report).dump(2) + "\n"
                                   : replay_transcript(report));
    return 0;
}

int run_sweep_cmd(const Shared& shared, const std::string& config_path) {
    SweepConfig cfg = parse_config_file(config_path);
    apply_overrides(shared, cfg);
    const SweepReport report = run_sweep(cfg);
    emit(cfg.out, render_report(report));
    return 0;
}

int run_hunt_cmd(const Shared& shared, const std::string& config_path, int k) {
    SweepConfig cfg = parse_config_file(config_path);
    apply_overrides(shared, cfg);
    const HuntResult result = run_hunt(cfg, k);
    const json j = hunt_json(result);
    if (cfg.format == "csv") throw ConfigError("csv output is only available for sweep");
    if (cfg.format == "text") {
        std::string text = "k=" + std::to_string(result.k) + " pairs_scanned=" +
                           std::to_string(result.pairs_scanned) + " pairs_skipped=" +
                           std::to_string(result.pairs_skipped) + " sets_scanned=" +
                           std::to_string(result.sets_scanned) + " hits=" +
                           std::to_string(result.hits.size()) + "\n";
        for (const HuntHit& hit : result.hits)
            text += hit.g6_g + " x " + hit.g6_h + " d=" + set_text(hit.d) + " dump=" +
                    hit.dump_path + "\n";
        emit(cfg.out, text);
    } else {
        emit(cfg.out, j.dump(2) + "\n");
    }
    if (result.hits.empty()) return 0;
    return k <= 2 ? 3 : 4;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domination bounds on Cartesian products: solvers, certificates, replays"};
    app.require_subcommand(1);

    Shared shared;
    shared.attach(app);

    std::string gamma_word;
    CLI::App* cmd_gamma = app.add_subcommand("gamma", "domination number of one graph")->fallthrough();
    cmd_gamma->add_option("graph6", gamma_word, "graph6 word")->required();

    std::string prod_g, prod_h;
    CLI::App* cmd_product = app.add_subcommand("product", "Cartesian product of two graphs")->fallthrough();
    cmd_product->add_option("G", prod_g, "graph6 word for G")->required();
    cmd_product->add_option("H", prod_h, "graph6 word for H")->required();

    std::string mds_word, mds_containing;
    CLI::App* cmd_mds =
        app.add_subcommand("mds", "minimum dominating sets, or minimal ones over a fixed core")->fallthrough();
    cmd_mds->add_option("graph6", mds_word, "graph6 word")->required();
    cmd_mds->add_option("--containing", mds_containing,
                        "comma-separated vertices every set must contain");

    std::string cells_word, cells_dominators;
    CLI::App* cmd_cells = app.add_subcommand("cells", "canonical cell partition of a graph")->fallthrough();
    cmd_cells->add_option("graph6", cells_word, "graph6 word")->required();
    cmd_cells
        ->add_option("--dominators", cells_dominators,
                     "comma-separated minimum dominating set guiding the partition")
        ->required();

    std::string cls_g, cls_h, cls_d;
    bool cls_all = false;
    CLI::App* cmd_classify =
        app.add_subcommand("classify", "hypothesis classification of product dominating sets")->fallthrough();
    cmd_classify->add_option("G", cls_g, "graph6 word for G")->required();
    cmd_classify->add_option("H", cls_h, "graph6 word for H")->required();
    cmd_classify->add_flag("--all-min-d", cls_all, "classify every minimum dominating set");
    cmd_classify->add_option("--d", cls_d,
                             "classify this product vertex set (comma-separated flat indices)");

    std::string rp_g, rp_h, rp_d, rp_s1, rp_s2;
    CLI::App* cmd_replay = app.add_subcommand("replay", "step-by-step bound verification")->fallthrough();
    cmd_replay->add_option("G", rp_g, "graph6 word for G")->required();
    cmd_replay->add_option("H", rp_h, "graph6 word for H")->required();
    cmd_replay->add_option("--d", rp_d, "dominating set of the product (flat indices)")
        ->required();
    cmd_replay->add_option("--s1", rp_s1, "first factor dominating set")->required();
    cmd_replay->add_option("--s2", rp_s2, "second factor dominating set (switches to the pair argument)");

    std::string sweep_config;
    CLI::App* cmd_sweep = app.add_subcommand("sweep", "verify certificates over factor pairs")->fallthrough();
    cmd_sweep->add_option("--config", sweep_config, "sweep configuration file")->required();

    std::string hunt_config;
    int hunt_k = 3;
    CLI::App* cmd_hunt =
        app.add_subcommand("hunt", "search for bound violations among small dominating sets")->fallthrough();
    cmd_hunt->add_option("--k", hunt_k, "cover size to search for")
        ->required()
        ->check(CLI::Range(1, 3));
    cmd_hunt->add_option("--config", hunt_config, "sweep configuration file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    try {
        if (cmd_gamma->parsed()) return run_gamma(shared, gamma_word);
        if (cmd_product->parsed()) return run_product(shared, prod_g, prod_h);
        if (cmd_mds->parsed()) return run_mds(shared, mds_word, mds_containing);
        if (cmd_cells->parsed()) return run_cells(shared, cells_word, cells_dominators);
        if (cmd_classify->parsed()) return run_classify(shared, cls_g, cls_h, cls_all, cls_d);
        if (cmd_replay->parsed()) return run_replay(shared, rp_g, rp_h, rp_d, rp_s1, rp_s2);
        if (cmd_sweep->parsed()) return run_sweep_cmd(shared, sweep_config);
        if (cmd_hunt->parsed()) return run_hunt_cmd(shared, hunt_config, hunt_k);
        std::cerr << "error: no subcommand\n";
        return 1;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << "\n";
        return 2;
    } catch (const StepFailed& e) {
        std::cerr << "replay step failed: " << e.what() << "\n";
        return 3;
    } catch (const InvariantViolation& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
