// Command-line front end. Exit codes: 0 affirmative, 1 negative verdict, 2 usage or runtime error.
#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>

#include "oddcrit/errors.hpp"
#include "oddcrit/factors.hpp"
#include "oddcrit/graph_io.hpp"
#include "oddcrit/partition.hpp"
#include "oddcrit/report.hpp"
#include "oddcrit/spectral.hpp"
#include "oddcrit/theorems.hpp"

using namespace oddcrit;
using json = nlohmann::ordered_json;

namespace {

struct RunConfig {
    std::string input;
    std::optional<int> n, b, k, delta, s;
    std::string variant = "gprime";
    std::string matrix = "distance";
    std::string theorem;
    std::string mode = "exact";
    std::string perturb = "add";
    std::optional<std::size_t> max_subset;
    std::size_t cap = 22;
    std::optional<double> tolerance;
    unsigned threads = 0;
    std::string out;
    std::string format;
};

constexpr int kAffirmative = 0;
constexpr int kNegative = 1;
constexpr int kError = 2;

int need(const std::optional<int>& value, const char* flag) {
    if (!value) throw ParameterError(std::string("missing --") + flag);
    return *value;
}

Tolerances tolerances(const RunConfig& cfg) {
    if (!cfg.tolerance) return {};
    if (!(*cfg.tolerance > 0)) throw ParameterError("--tolerance must be positive");
    return Tolerances::from_equality(*cfg.tolerance);
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << text;
}

// Machine output: to --out if given, else to stdout when --format was asked for.
void emit(const RunConfig& cfg, const json& report, const std::string& csv = {}) {
    const bool as_csv = cfg.format == "csv" && !csv.empty();
    const std::string text = as_csv ? csv : report.dump(2) + "\n";
    if (!cfg.out.empty())
        write_file(cfg.out, text);
    else if (!cfg.format.empty())
        std::cout << text;
}

void row(const std::string& key, const std::string& value) { std::cout << std::left << std::setw(22) << key << value << '\n'; }

int cmd_analyze(const RunConfig& cfg) {
    if (cfg.input.empty()) throw ParameterError("missing --input");
    const Graph g = read_graph_file(cfg.input);
    const MatrixKind kind = parse_matrix_kind(cfg.matrix);
    const double radius = spectral_radius(g, kind);

    json report;
    report["n"] = g.order();
    report["e"] = g.edge_count();
    report["min_degree"] = g.order() ? json(min_degree(g)) : json(nullptr);
    try {
        report["vertex_connectivity"] = vertex_connectivity(g);
    } catch (const ScaleError&) {
        report["vertex_connectivity"] = nullptr;
    }
    if (g.order() > 0 && is_connected(g)) {
        const auto tr = transmissions(g);
        report["wiener_index"] = wiener_index(g);
        report["transmission_min"] = *std::min_element(tr.begin(), tr.end());
        report["transmission_max"] = *std::max_element(tr.begin(), tr.end());
    } else {
        report["wiener_index"] = nullptr;
        report["transmission_min"] = nullptr;
        report["transmission_max"] = nullptr;
    }
    report["matrix"] = std::string(to_string(kind));
    report["spectral_radius"] = round12(radius);

    if (cfg.format.empty() || !cfg.out.empty()) {
        for (const auto& [key, value] : report.items()) row(key, value.is_string() ? value.get<std::string>() : value.dump());
    }
    emit(cfg, report);
    return kAffirmative;
}

int cmd_extremal(const RunConfig& cfg) {
    const int n = need(cfg.n, "n"), b = need(cfg.b, "b"), k = need(cfg.k, "k");
    ExtremalParams p{.n = n, .b = b, .k = k, .delta = cfg.delta.value_or(0), .s = cfg.s};

    Graph g;
    std::vector<int> parts;
    int join_size = 0;
    if (cfg.variant == "gstar") {
        g = g_star(n, b, k);
        p.delta = k + 2;
        parts = gprime_parts(p);
        join_size = k + 2;
    } else {
        ProofGraph which;
        if (cfg.variant == "gprime") {
            which = ProofGraph::gprime;
        } else if (cfg.variant == "g2") {
            which = ProofGraph::g2;
        } else if (cfg.variant == "g3") {
            which = ProofGraph::g3;
        } else {
            throw ParameterError("unknown --variant " + cfg.variant + " (gprime, g2, g3, gstar)");
        }
        if (which != ProofGraph::g2) need(cfg.delta, "delta");
        g = build_proof_graph(which, p);
        parts = proof_graph_parts(which, p);
        join_size = proof_graph_join_size(which, p);
    }

    const std::string g6 = write_graph6(g);
    if (!cfg.out.empty()) write_file(cfg.out, g6 + "\n");

    json report;
    report["variant"] = cfg.variant;
    report["parameters"] = {{"n", n}, {"b", b}, {"k", k}, {"delta", p.delta}, {"s", p.s ? json(*p.s) : json(nullptr)}};
    report["join_size"] = join_size;
    report["parts"] = parts;
    report["e"] = g.edge_count();
    report["min_degree"] = min_degree(g);
    report["mu1"] = round12(spectral_radius(g, MatrixKind::distance));
    report["eta1"] = round12(spectral_radius(g, MatrixKind::distance_signless_laplacian));
    report["wiener_index"] = wiener_index(g);
    if (cfg.variant == "gprime") report["wiener_closed_form"] = wiener_gprime_closed_form(p);
    report["graph6"] = g6;

    if (cfg.format.empty()) {
        for (const auto& [key, value] : report.items()) row(key, value.is_string() ? value.get<std::string>() : value.dump());
    } else {
        std::cout << report.dump(2) << '\n';
    }
    return kAffirmative;
}

int cmd_check_critical(const RunConfig& cfg) {
    if (cfg.input.empty()) throw ParameterError("missing --input");
    const Graph g = read_graph_file(cfg.input);
    const FactorSpec f = FactorSpec::constant(need(cfg.b, "b"), need(cfg.k, "k"));

    CriticalityOptions opt;
    opt.cap = cfg.cap;
    if (cfg.mode == "witness-only") {
        opt.cross_check = false;
        const std::size_t depth = cfg.max_subset.value_or(g.order() ? min_degree(g) : 0);
        opt.max_subset_size = std::max(depth, static_cast<std::size_t>(f.k));
    } else if (cfg.mode != "exact") {
        throw ParameterError("unknown --mode " + cfg.mode + " (exact, witness-only)");
    }
    const CriticalityVerdict v = is_k_critical(g, f, opt);

    json report = to_json(v);
    std::string verdict = v.critical ? "critical" : "not_critical";
    if (!v.exhaustive && !v.witness) verdict = "no_witness_found";
    report["verdict"] = verdict;
    report["mode"] = cfg.mode;

    if (cfg.format.empty() || !cfg.out.empty()) {
        row("verdict", verdict);
        if (v.witness) {
            std::string members;
            for (Vertex u : v.witness->members) members += (members.empty() ? "" : " ") + std::to_string(u);
            row("witness", "{" + members + "}");
            row("odd_components", std::to_string(v.witness_odd_components));
            row("bound", std::to_string(v.witness_bound));
        }
        row("subsets_examined", std::to_string(v.subsets_examined));
    }
    emit(cfg, report);
    return v.witness ? kNegative : kAffirmative;
}

int finish_sweep(const RunConfig& cfg, const SweepReport& report) {
    if (cfg.format.empty() || !cfg.out.empty()) std::cout << to_table(report);
    emit(cfg, to_json(report), to_csv(report));
    return report.falsifications() ? kNegative : kAffirmative;
}

SweepOptions sweep_options(const RunConfig& cfg) {
    SweepOptions opt;
    opt.cap = cfg.cap;
    opt.tolerances = tolerances(cfg);
    opt.threads = cfg.threads;
    return opt;
}

int cmd_verify(const RunConfig& cfg) {
    if (cfg.theorem.empty()) throw ParameterError("missing --theorem");
    if (cfg.input.empty()) throw ParameterError("missing --input");
    const TheoremId id = parse_theorem_id(cfg.theorem);
    const auto corpus = read_corpus_file(cfg.input);
    const int delta = id == TheoremId::t1_4 ? cfg.delta.value_or(0) : need(cfg.delta, "delta");
    return finish_sweep(cfg, counterexample_sweep(corpus, id, need(cfg.b, "b"), need(cfg.k, "k"), delta, sweep_options(cfg)));
}

// Single-edge perturbations of a constructed graph, then the same sweep as verify.
int cmd_sweep(const RunConfig& cfg) {
    if (cfg.theorem.empty()) throw ParameterError("missing --theorem");
    const TheoremId id = parse_theorem_id(cfg.theorem);
    const int n = need(cfg.n, "n"), b = need(cfg.b, "b"), k = need(cfg.k, "k");

    Graph base;
    int delta = cfg.delta.value_or(0);
    if (cfg.variant == "gprime") {
        base = extremal_gprime({.n = n, .b = b, .k = k, .delta = need(cfg.delta, "delta")});
    } else if (cfg.variant == "gstar") {
        base = g_star(n, b, k);
        if (!cfg.delta) delta = k + 2;
    } else if (cfg.variant == "connected") {
        base = connected_extremal(n, b, k);
    } else {
        throw ParameterError("unknown --variant " + cfg.variant + " for sweep (gprime, gstar, connected)");
    }

    std::vector<NamedGraph> corpus;
    if (cfg.perturb == "add")
        corpus = single_edge_additions(base);
    else if (cfg.perturb == "delete")
        corpus = single_edge_deletions(base);
    else
        throw ParameterError("unknown --perturb " + cfg.perturb + " (add, delete)");
    return finish_sweep(cfg, counterexample_sweep(corpus, id, b, k, delta, sweep_options(cfg)));
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Spectral conditions and k-criticality for [1,b]-odd factors"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with the same keys as the flags; flags win");

    RunConfig cfg;
    app.add_option("--input", cfg.input, "graph file (graph6 or edge list) or corpus");
    app.add_option("--n", cfg.n, "order");
    app.add_option("--b", cfg.b, "odd factor bound");
    app.add_option("--k", cfg.k, "vertices deleted");
    app.add_option("--delta", cfg.delta, "minimum degree");
    app.add_option("--s", cfg.s, "join size of G2/G3");
    app.add_option("--variant", cfg.variant, "gprime | g2 | g3 | gstar | connected");
    app.add_option("--matrix", cfg.matrix, "adjacency | signless_laplacian | distance | distance_signless_laplacian");
    app.add_option("--theorem", cfg.theorem, "1.1 .. 1.6");
    app.add_option("--mode", cfg.mode, "exact | witness-only");
    app.add_option("--max-subset", cfg.max_subset, "witness-only search depth (default: minimum degree)");
    app.add_option("--perturb", cfg.perturb, "add | delete");
    app.add_option("--cap", cfg.cap, "largest order enumerated exhaustively")->check(CLI::PositiveNumber);
    app.add_option("--tolerance", cfg.tolerance, "equality tolerance for spectral comparisons");
    app.add_option("--threads", cfg.threads, "sweep workers, 0 = all cores");
    app.add_option("--out", cfg.out, "output file");
    app.add_option("--format", cfg.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));

    auto* analyze = app.add_subcommand("analyze", "invariants and a spectral radius of one graph")->fallthrough();
    auto* extremal = app.add_subcommand("extremal", "build G', G2, G3 or G* and write graph6")->fallthrough();
    auto* check = app.add_subcommand("check-critical", "k-criticality by subset enumeration")->fallthrough();
    auto* verify = app.add_subcommand("verify", "evaluate a theorem over a corpus")->fallthrough();
    auto* sweep = app.add_subcommand("sweep", "evaluate a theorem over single-edge perturbations")->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kError;
    }

    try {
        if (*analyze) return cmd_analyze(cfg);
        if (*extremal) return cmd_extremal(cfg);
        if (*check) return cmd_check_critical(cfg);
        if (*verify) return cmd_verify(cfg);
        if (*sweep) return cmd_sweep(cfg);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kError;
    }
    return kError;
}
