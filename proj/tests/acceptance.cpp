// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>

#include "grid.hpp"
#include "oddcrit/factors.hpp"
#include "oddcrit/partition.hpp"
#include "oddcrit/spectral.hpp"
#include "oddcrit/theorems.hpp"

using namespace oddcrit;

namespace {

constexpr double kKernelTol = 1e-9;
constexpr double kQuotientTol = 1e-6;
constexpr double kPerronTol = 1e-8;
constexpr double kStrictMargin = 1e-9;
constexpr double kInterlaceTol = 1e-8;
constexpr double kTransmissionTol = 1e-8;

struct Outcome {
    bool pass;
    std::string detail;
};

int failures = 0;

std::string sci(double x) {
    char buffer[32];
    std::snprintf(buffer, sizeof buffer, "%.2e", x);
    return buffer;
}

void criterion(int id, const char* name, double budget_seconds, const std::function<Outcome()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
        o = body();
    } catch (const std::exception& e) {
        o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > budget_seconds) {
        o.pass = false;
        o.detail += "; over the " + std::to_string(static_cast<int>(budget_seconds)) + " s budget";
    }
    if (!o.pass) ++failures;
    std::printf("[%s] %2d %-28s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", id, name, secs, o.detail.c_str());
    std::fflush(stdout);
}

std::string count_text(std::size_t bad, std::size_t total, const char* what) {
    return std::to_string(bad) + " " + what + " in " + std::to_string(total);
}

Graph random_connected(std::size_t n, double p, std::mt19937_64& rng) {
    std::bernoulli_distribution coin(p);
    Graph g(n);
    for (std::size_t v = 1; v < n; ++v) g.add_edge(std::uniform_int_distribution<std::size_t>(0, v - 1)(rng), v);
    for (std::size_t u = 0; u < n; ++u)
        for (std::size_t v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

SymMatrix proof_matrix(const Graph& g, DistanceKind kind) {
    return kind == DistanceKind::distance ? distance_matrix(g).to_real() : distance_signless_laplacian_matrix(g);
}

constexpr ProofGraph kProofGraphs[] = {ProofGraph::gprime, ProofGraph::g2, ProofGraph::g3};
constexpr DistanceKind kKinds[] = {DistanceKind::distance, DistanceKind::distance_signless_laplacian};

Outcome spectral_kernel() {
    double worst = 0.0;
    for (std::size_t m = 2; m <= 40; ++m) {
        const Graph k = make_complete(m);
        worst = std::max(worst, std::abs(spectral_radius(k, MatrixKind::distance) - (m - 1.0)));
        worst = std::max(worst, std::abs(spectral_radius(k, MatrixKind::distance_signless_laplacian) - (2.0 * m - 2.0)));
    }
    worst = std::max(worst, std::abs(spectral_radius(make_path(3), MatrixKind::distance) - (1.0 + std::sqrt(3.0))));
    return {worst < kKernelTol, "max error " + sci(worst)};
}

Outcome quotient_fidelity() {
    const auto tuples = grid::tuples();
    double worst = 0.0;
    for (const auto& p : tuples)
        for (ProofGraph which : kProofGraphs)
            for (DistanceKind kind : kKinds) {
                const double root = cubic_quotient_roots(closed_form_quotient(which, kind, p)).front();
                const double direct = eigenvalues(proof_matrix(build_proof_graph(which, p), kind)).radius();
                worst = std::max(worst, std::abs(root - direct));
            }
    return {tuples.size() == 30 && worst < kQuotientTol,
            std::to_string(tuples.size()) + " tuples x 6 quotients, max |root - radius| " + sci(worst)};
}

Outcome perron_constancy() {
    double worst = 0.0;
    for (const auto& p : grid::tuples())
        for (ProofGraph which : kProofGraphs) {
            const Graph g = build_proof_graph(which, p);
            const Partition cells = join_partition(proof_graph_join_size(which, p), proof_graph_parts(which, p));
            for (DistanceKind kind : kKinds)
                worst = std::max(worst, max_within_cell_stddev(perron_vector(proof_matrix(g, kind)), cells));
        }
    return {worst < kPerronTol, "max within-cell stddev " + sci(worst)};
}

Outcome monotonicity() {
    std::mt19937_64 rng(2024);
    std::size_t additions = 0, deletions = 0, bad = 0;
    while (additions < 200 || deletions < 200) {
        const Graph g = random_connected(4 + rng() % 16, 0.2, rng);
        const auto missing = g.non_edges();
        if (additions < 200 && !missing.empty()) {
            const auto [u, v] = missing[rng() % missing.size()];
            bad += !(spectral_radius(g.with_edge(u, v), MatrixKind::distance) <
                     spectral_radius(g, MatrixKind::distance) - kStrictMargin);
            ++additions;
        }
        const auto present = g.edges();
        const auto [u, v] = present[rng() % present.size()];
        const Graph h = g.without_edge(u, v);
        if (deletions < 200 && is_connected(h)) {
            bad += !(spectral_radius(h, MatrixKind::distance_signless_laplacian) >
                     spectral_radius(g, MatrixKind::distance_signless_laplacian) + kStrictMargin);
            ++deletions;
        }
    }
    return {bad == 0, count_text(bad, additions + deletions, "violations")};
}

Outcome interlacing() {
    std::mt19937_64 rng(6);
    std::uniform_real_distribution<double> u(-3.0, 3.0);
    std::size_t bad = 0, submatrices = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const std::size_t n = 2 + rng() % 11;
        SymMatrix a(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i; j < n; ++j) a.set(i, j, u(rng));
        const auto la = eigenvalues(a).eigenvalues;
        for (std::uint32_t mask = 1; mask + 1 < (1u << n); ++mask) {
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < n; ++i)
                if (mask >> i & 1) idx.push_back(i);
            const auto lb = eigenvalues(a.principal_submatrix(idx)).eigenvalues;
            const std::size_t m = idx.size();
            for (std::size_t i = 0; i < m; ++i)
                bad += la[i] < lb[i] - kInterlaceTol || lb[i] < la[n - m + i] - kInterlaceTol;
            ++submatrices;
        }
    }
    std::size_t grid_bad = 0;
    const auto tuples = grid::tuples();
    for (const auto& p : tuples) grid_bad += !interlacing_bound_check(p);
    return {bad == 0 && grid_bad == 0, count_text(bad, submatrices, "violations") + " submatrices; " +
                                           count_text(grid_bad, tuples.size(), "mu1(G') bound failures")};
}

Outcome wiener() {
    std::size_t bad = 0;
    const auto tuples = grid::tuples();
    for (const auto& p : tuples) bad += wiener_gprime_closed_form(p) != wiener_index(extremal_gprime(p));

    std::mt19937_64 rng(71);
    std::size_t lemma_bad = 0, graphs = 0;
    auto lemma = [&](const Graph& g) {
        const double bound = 4.0 * static_cast<double>(wiener_index(g)) / static_cast<double>(g.order());
        lemma_bad += spectral_radius(g, MatrixKind::distance_signless_laplacian) < bound - kTransmissionTol;
        ++graphs;
    };
    for (int trial = 0; trial < 200; ++trial) lemma(random_connected(2 + rng() % 20, 0.25, rng));
    for (const auto& p : tuples) lemma(extremal_gprime(p));
    std::size_t equality_bad = 0;
    for (std::size_t n = 3; n <= 12; ++n) {
        const Graph c = make_cycle(n);
        equality_bad += std::abs(spectral_radius(c, MatrixKind::distance_signless_laplacian) -
                                 4.0 * static_cast<double>(wiener_index(c)) / static_cast<double>(n)) > kTransmissionTol;
    }
    return {bad == 0 && lemma_bad == 0 && equality_bad == 0,
            count_text(bad, tuples.size(), "closed-form mismatches") + "; " +
                count_text(lemma_bad, graphs, "4W/n violations") + "; " +
                count_text(equality_bad, 10, "cycle equality failures")};
}

Outcome oracle_equivalence() {
    std::size_t graphs = 0, bad = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        std::vector<Edge> slots;
        for (std::size_t v = 1; v < n; ++v)
            for (std::size_t u = 0; u < v; ++u) slots.emplace_back(u, v);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
            Graph g(n);
            for (std::size_t i = 0; i < slots.size(); ++i)
                if (mask >> i & 1) g.add_edge(slots[i].first, slots[i].second);
            if (!is_connected(g)) continue;
            ++graphs;
            for (int b : {1, 3})
                bad += has_odd_factor(g, FactorSpec::constant(b)) != find_odd_factor(g, b).has_value();
        }
    }
    return {bad == 0, count_text(bad, graphs, "disagreements") + " labelled connected graphs, b in {1,3}"};
}

Outcome extremal_noncritical() {
    std::size_t bad = 0;
    const auto tuples = grid::tuples();
    for (const auto& p : tuples) {
        const Graph g = extremal_gprime(p);
        CriticalityOptions opt;
        opt.cross_check = false;
        if (g.order() > opt.cap) opt.max_subset_size = static_cast<std::size_t>(p.delta);
        const auto v = is_k_critical(g, FactorSpec::constant(p.b, p.k), opt);
        const std::size_t needed = static_cast<std::size_t>(p.b * (p.delta - p.k) + 2);
        const bool ok = !v.critical && v.witness && odd_components_after_removal(g, *v.witness) >= needed &&
                        odd_components_after_removal(g, criticality_witness_extremal(p)) >= needed;
        bad += !ok;
    }
    return {bad == 0, count_text(bad, tuples.size(), "tuples without a confirmed witness")};
}

Outcome gstar_positive() {
    CriticalityOptions opt;
    opt.cross_check = false;
    const auto v = is_k_critical(g_star(19, 1, 1), FactorSpec::constant(1, 1), opt);
    const bool ordering = gstar_ordering_check(19, 1, 1, {1e-8, kStrictMargin});
    return {v.critical && v.exhaustive && ordering,
            std::string(v.critical ? "critical" : "NOT critical") + " after " + std::to_string(v.subsets_examined) +
                " subsets; ordering " + (ordering ? "holds" : "fails")};
}

Outcome theorem_sweep() {
    const Graph base = extremal_gprime({.n = 19, .b = 1, .k = 1, .delta = 3});
    const auto corpus = single_edge_additions(base);
    const auto report = counterexample_sweep(corpus, TheoremId::t1_1, 1, 1, 3);
    const auto t15 = evaluate_theorem(extremal_gprime({.n = 47, .b = 1, .k = 1, .delta = 3}), TheoremId::t1_5, 1, 1, 3);

    std::mt19937_64 rng(10);
    std::size_t checked[3] = {0, 0, 0};
    std::size_t violations = 0;
    for (int lemma = 0; lemma < 3; ++lemma) {
        for (int attempt = 0; attempt < 100000 && checked[lemma] < 50; ++attempt) {
            const int s = 1 + static_cast<int>(rng() % 3);
            const int p = 1 + static_cast<int>(rng() % 3);
            std::vector<int> parts(2 + rng() % 3);
            for (int& x : parts) x = p + static_cast<int>(rng() % 16);
            std::sort(parts.begin(), parts.end(), std::greater<>());
            const auto c = ordering_lemma_check(static_cast<OrderingLemma>(lemma), s, parts, p);
            if (c.outcome == CheckOutcome::inapplicable) continue;
            ++checked[lemma];
            violations += c.outcome == CheckOutcome::violated;
        }
    }
    const bool sampled = checked[0] == 50 && checked[1] == 50 && checked[2] == 50;
    return {report.falsifications() == 0 && t15.conclusion == Conclusion::extremal_exception && sampled &&
                violations == 0,
            std::to_string(report.falsifications()) + " falsifications in " + std::to_string(report.records.size()) +
                " graphs; G'(47,1,1,3) under 1.5: " + std::string(to_string(t15.conclusion)) + "; " +
                count_text(violations, checked[0] + checked[1] + checked[2], "lemma violations")};
}

}  // namespace

int main() {
    criterion(1, "spectral kernel", 1.0, spectral_kernel);
    criterion(2, "quotient fidelity", 30.0, quotient_fidelity);
    criterion(3, "Perron cell-constancy", 60.0, perron_constancy);
    criterion(4, "edge monotonicity", 60.0, monotonicity);
    criterion(5, "interlacing", 120.0, interlacing);
    criterion(6, "Wiener closed form, 4W/n", 60.0, wiener);
    criterion(7, "odd-factor oracle agreement", 300.0, oracle_equivalence);
    criterion(8, "G' not critical", 120.0, extremal_noncritical);
    criterion(9, "G* critical and ordered", 60.0, gstar_positive);
    criterion(10, "theorem sweep and lemmas", 300.0, theorem_sweep);
    std::printf("%d of 10 criteria failed\n", failures);
    return failures ? 1 : 0;
}
