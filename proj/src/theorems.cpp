#include "oddcrit/theorems.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <sstream>
#include <thread>

#include "oddcrit/errors.hpp"
#include "oddcrit/spectral.hpp"

namespace oddcrit {

TheoremId parse_theorem_id(std::string_view text) {
    if (text == "1.1") return TheoremId::t1_1;
    if (text == "1.2") return TheoremId::t1_2;
    if (text == "1.3") return TheoremId::t1_3;
    if (text == "1.4") return TheoremId::t1_4;
    if (text == "1.5") return TheoremId::t1_5;
    if (text == "1.6") return TheoremId::t1_6;
    throw std::invalid_argument("unknown theorem id '" + std::string(text) + "'");
}

std::string_view to_string(TheoremId id) {
    switch (id) {
        case TheoremId::t1_1: return "1.1";
        case TheoremId::t1_2: return "1.2";
        case TheoremId::t1_3: return "1.3";
        case TheoremId::t1_4: return "1.4";
        case TheoremId::t1_5: return "1.5";
        case TheoremId::t1_6: return "1.6";
    }
    return "?";
}

std::string_view to_string(Conclusion c) {
    switch (c) {
        case Conclusion::asserts_critical: return "asserts_critical";
        case Conclusion::extremal_exception: return "extremal_exception";
        case Conclusion::inapplicable: return "inapplicable";
        case Conclusion::condition_fails: return "condition_fails";
    }
    return "?";
}

std::string_view to_string(CheckOutcome c) {
    switch (c) {
        case CheckOutcome::holds: return "holds";
        case CheckOutcome::violated: return "violated";
        case CheckOutcome::inapplicable: return "inapplicable";
    }
    return "?";
}

OrderBound order_bound(TheoremId id, int b_in, int k_in, int delta_in) {
    if (b_in < 1 || k_in < 1 || (id != TheoremId::t1_4 && delta_in < 1))
        throw ParameterError("order bound needs positive b, k and delta");
    const Rational b(b_in), k(k_in), d(delta_in);
    auto q = [](std::int64_t num, std::int64_t den) { return Rational(num, den); };

    Rational value;
    switch (id) {
        case TheoremId::t1_1:
            value = std::max((b * b * k * k - 2 * b * b * k * d - 4 * b * b * k - b * k + b * b * d * d + 4 * b * b * d +
                              7 * b * d + b * b + 8 * b + 1) /
                                 (6 * b),
                             (b + 5) * d - (b + 4) * k - b + 1 + 5 / b);
            break;
        case TheoremId::t1_2:
            value = std::max(b * d * d - b * k, (2 * b + 3) * d - b * k + 1);
            break;
        case TheoremId::t1_3:
            // (2b + 4.3)delta - 2bk + 1.1 in exact tenths
            value = (2 * b + q(43, 10)) * d - 2 * b * k + q(11, 10);
            break;
        case TheoremId::t1_4:
            value = (b * b + 2 * b * k + 5 * b + 2 * k + 4) / b;
            break;
        case TheoremId::t1_5:
            value = std::max((2 * b * b + 3 * b + 11) * d - (2 * b * b + q(5, 2) * b + q(3, 2)) * k + q(3, 2) * b + 2 +
                                 q(3, 2) / b,
                             q(2, 3) * b * b * d * d * d + q(4, 3) * b * b * k * d * d);
            break;
        case TheoremId::t1_6:
            if (b_in < k_in) throw ParameterError("Theorem 1.6 requires b >= k");
            value = std::max((2 * b * b + 4 * b) * d * d + 2 * d + 2 * b * b * k * k,
                             q(6, 5) * b * b * d * d * d + q(8, 5) * b * b * k * d * d);
            break;
    }
    return {id, value};
}

namespace {

bool meets(std::int64_t n, const Rational& bound) { return Rational(n) >= bound; }

std::string rational_text(const Rational& r) {
    std::ostringstream out;
    out << r.numerator();
    if (r.denominator() != 1) out << '/' << r.denominator();
    return out.str();
}

MatrixKind kind_for(TheoremId id) {
    switch (id) {
        case TheoremId::t1_2: return MatrixKind::adjacency;
        case TheoremId::t1_3: return MatrixKind::signless_laplacian;
        case TheoremId::t1_4:
        case TheoremId::t1_5: return MatrixKind::distance;
        case TheoremId::t1_6: return MatrixKind::distance_signless_laplacian;
        case TheoremId::t1_1: break;
    }
    return MatrixKind::adjacency;
}

std::string quantity_for(TheoremId id) {
    switch (id) {
        case TheoremId::t1_1: return "e";
        case TheoremId::t1_2: return "rho";
        case TheoremId::t1_3: return "q";
        case TheoremId::t1_4:
        case TheoremId::t1_5: return "mu1";
        case TheoremId::t1_6: return "eta1";
    }
    return "?";
}

// Theorems 1.1-1.3 require the graph to be at least as large as the extremal one; 1.4-1.6 at most.
bool lower_is_better(TheoremId id) {
    return id == TheoremId::t1_4 || id == TheoremId::t1_5 || id == TheoremId::t1_6;
}

}  // namespace

TheoremVerdict evaluate_theorem(const Graph& g, TheoremId id, int b, int k, int delta, const Tolerances& tol) {
    TheoremVerdict v;
    v.theorem = id;
    v.quantity = quantity_for(id);
    const auto n = static_cast<std::int64_t>(g.order());
    auto add = [&](std::string name, bool met, std::string detail) {
        v.hypotheses.push_back({std::move(name), met, std::move(detail)});
        return met;
    };

    const bool params_ok = b >= 1 && b % 2 == 1 && k >= 1 && (id == TheoremId::t1_4 || delta >= 1);
    add("parity", params_ok && (n - k) % 2 == 0,
        "b = " + std::to_string(b) + " odd, n = " + std::to_string(n) + " = k = " + std::to_string(k) + " (mod 2)");
    if (id == TheoremId::t1_6) add("b_ge_k", b >= k, "b = " + std::to_string(b) + ", k = " + std::to_string(k));

    if (id == TheoremId::t1_4) {
        add("connectivity", g.order() > 0 && is_connected(g), "connected");
    } else {
        const bool kc = params_ok && is_t_connected(g, static_cast<std::size_t>(k) + 1);
        add("connectivity", kc, "(k+1)-connected with k+1 = " + std::to_string(k + 1));
    }

    std::optional<OrderBound> bound;
    if (params_ok && !(id == TheoremId::t1_6 && b < k)) bound = order_bound(id, b, k, delta);
    add("order", bound && meets(n, bound->value),
        bound ? "n = " + std::to_string(n) + " >= " + rational_text(bound->value) : "bound undefined");

    if (id != TheoremId::t1_4) {
        const std::size_t md = g.order() > 0 ? min_degree(g) : 0;
        add("min_degree", g.order() > 0 && md == static_cast<std::size_t>(std::max(delta, 0)),
            "delta(G) = " + std::to_string(md) + ", delta = " + std::to_string(delta));
    }

    // extremal comparison graph(s), built with canonical labels
    std::vector<Graph> exceptional;
    try {
        if (id == TheoremId::t1_4) {
            exceptional.push_back(connected_extremal(static_cast<int>(n), b, k));
            if (n - k - 1 >= 1) {
                const std::vector<int> parts{static_cast<int>(n) - k - 1, 1};
                exceptional.push_back(family(k, parts));
            }
        } else {
            exceptional.push_back(extremal_gprime({.n = static_cast<int>(n), .b = b, .k = k, .delta = delta}));
        }
    } catch (const ParameterError& e) {
        add("extremal_defined", false, e.what());
    }

    v.hypotheses_met = std::all_of(v.hypotheses.begin(), v.hypotheses.end(), [](const auto& h) { return h.met; });

    if (!exceptional.empty()) {
        const Graph& extremal = exceptional.front();
        try {
            if (id == TheoremId::t1_1) {
                v.graph_value = static_cast<double>(g.edge_count());
                v.extremal_value = static_cast<double>(extremal.edge_count());
                v.condition_met = g.edge_count() >= extremal.edge_count();
            } else {
                const MatrixKind kind = kind_for(id);
                v.graph_value = spectral_radius(g, kind);
                v.extremal_value = spectral_radius(extremal, kind);
                v.condition_met = lower_is_better(id) ? *v.graph_value <= *v.extremal_value + tol.equality
                                                      : *v.graph_value >= *v.extremal_value - tol.equality;
            }
        } catch (const DistanceUndefined&) {
            v.condition_met = false;
        }
    }

    if (!v.hypotheses_met) {
        v.conclusion = Conclusion::inapplicable;
    } else if (!v.condition_met) {
        v.conclusion = Conclusion::condition_fails;
    } else if (std::find(exceptional.begin(), exceptional.end(), g) != exceptional.end()) {
        v.conclusion = Conclusion::extremal_exception;
    } else {
        v.conclusion = Conclusion::asserts_critical;
    }
    return v;
}

bool gstar_ordering_check(int n, int b, int k, const Tolerances& tol) {
    const double lower = spectral_radius(connected_extremal(n, b, k), MatrixKind::distance);
    const double middle = spectral_radius(g_star(n, b, k), MatrixKind::distance);
    const double upper = spectral_radius(g_star_base(n, b, k), MatrixKind::distance);
    return lower + tol.strict_margin < middle && middle + tol.strict_margin < upper;
}

bool interlacing_bound_check(const ExtremalParams& p, const Tolerances& tol) {
    const double mu = spectral_radius(extremal_gprime(p), MatrixKind::distance);
    const double clique_radius = p.n - p.b * p.delta + p.b * p.k - 2;
    return mu >= clique_radius - tol.equality;
}

std::int64_t eta_bound_order_requirement(int b, int k, int delta) {
    const std::int64_t bb = b, kk = k, d = delta;
    return 2 * (bb * bb + 2 * bb) * d * d + 2 * d + 2 * bb * bb * kk * kk;
}

CheckOutcome eta_lower_bound_check(const ExtremalParams& p) {
    const Graph g = extremal_gprime(p);
    if (p.n < eta_bound_order_requirement(p.b, p.k, p.delta)) return CheckOutcome::inapplicable;
    const double eta = spectral_radius(g, MatrixKind::distance_signless_laplacian);
    const double bound = 2.0 * p.n + 4.0 * p.b * p.delta - 4.0 * p.b * p.k + 1.0;
    return eta > bound ? CheckOutcome::holds : CheckOutcome::violated;
}

LemmaCheck ordering_lemma_check(OrderingLemma lemma, int s, std::span<const int> parts, int p,
                                const Tolerances& tol) {
    LemmaCheck check;
    const int t = static_cast<int>(parts.size());
    if (parts.empty() || s < 1) return check;
    if (!std::is_sorted(parts.begin(), parts.end(), std::greater<>())) return check;
    const int lower = lemma == OrderingLemma::l2_9 ? 1 : p;
    if (lower < 1 || parts.back() < lower) return check;
    int n = s;
    for (int part : parts) n += part;

    std::vector<int> comparison;
    if (lemma == OrderingLemma::l2_9) {
        comparison.assign(static_cast<std::size_t>(t), 1);
        comparison[0] = n - s - t + 1;
    } else {
        if (lemma == OrderingLemma::l2_8 && !(parts[0] < n - s - p * (t - 1))) return check;
        if (lemma == OrderingLemma::l2_10 && !(parts[0] >= 5 * p && t >= s + 1)) return check;
        comparison.assign(static_cast<std::size_t>(t), p);
        comparison[0] = n - s - p * (t - 1);
    }

    const MatrixKind kind = lemma == OrderingLemma::l2_8 ? MatrixKind::distance : MatrixKind::distance_signless_laplacian;
    check.left = spectral_radius(family(s, parts), kind);
    check.right = spectral_radius(family(s, comparison), kind);
    check.equality_case = std::equal(parts.begin(), parts.end(), comparison.begin(), comparison.end());

    bool holds = false;
    if (lemma == OrderingLemma::l2_8) {
        holds = check.left > check.right + tol.strict_margin;
    } else if (check.equality_case) {
        holds = std::abs(check.left - check.right) <= tol.equality;
    } else {
        holds = check.left > check.right + tol.strict_margin;
    }
    check.outcome = holds ? CheckOutcome::holds : CheckOutcome::violated;
    return check;
}

std::size_t SweepReport::falsifications() const {
    return static_cast<std::size_t>(
        std::count_if(records.begin(), records.end(), [](const SweepRecord& r) { return r.falsification; }));
}

namespace {

SweepRecord sweep_one(const NamedGraph& item, TheoremId id, int b, int k, int delta, const SweepOptions& options) {
    SweepRecord record;
    record.graph_id = item.id;
    record.order = item.graph.order();
    record.verdict = evaluate_theorem(item.graph, id, b, k, delta, options.tolerances);
    record.brute_force = "not_run";

    const Conclusion c = record.verdict.conclusion;
    if (c != Conclusion::asserts_critical && c != Conclusion::extremal_exception) return record;
    if (item.graph.order() > options.cap) {
        record.brute_force = "skipped_cap";
        record.note = "n = " + std::to_string(item.graph.order()) + " exceeds cap " + std::to_string(options.cap);
        return record;
    }
    CriticalityOptions copt;
    copt.cap = options.cap;
    copt.cross_check = false;
    const CriticalityVerdict bf = is_k_critical(item.graph, FactorSpec::constant(b, k), copt);
    record.brute_force = bf.critical ? "critical" : "not_critical";
    record.witness = bf.witness;
    record.subsets_examined = bf.subsets_examined;
    record.falsification = c == Conclusion::asserts_critical && !bf.critical;
    if (c == Conclusion::extremal_exception && bf.critical) record.note = "extremal graph is critical";
    return record;
}

}  // namespace

SweepReport counterexample_sweep(std::span<const NamedGraph> corpus, TheoremId id, int b, int k, int delta,
                                 const SweepOptions& options) {
    SweepReport report;
    report.theorem = id;
    report.b = b;
    report.k = k;
    report.delta = delta;
    report.records.resize(corpus.size());

    unsigned workers = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(corpus.size(), 1)));
    // Strided assignment; each worker writes only its own slots, so output order is corpus order.
    std::vector<std::future<void>> jobs;
    for (unsigned w = 0; w < workers; ++w) {
        jobs.push_back(std::async(std::launch::async, [&, w] {
            for (std::size_t i = w; i < corpus.size(); i += workers)
                report.records[i] = sweep_one(corpus[i], id, b, k, delta, options);
        }));
    }
    for (auto& job : jobs) job.get();
    return report;
}

std::vector<NamedGraph> single_edge_additions(const Graph& base) {
    std::vector<NamedGraph> corpus{{"base", base}};
    for (const auto& [u, v] : base.non_edges())
        corpus.push_back({"add(" + std::to_string(u) + "," + std::to_string(v) + ")", base.with_edge(u, v)});
    return corpus;
}

std::vector<NamedGraph> single_edge_deletions(const Graph& base) {
    std::vector<NamedGraph> corpus{{"base", base}};
    for (const auto& [u, v] : base.edges()) {
        Graph h = base.without_edge(u, v);
        if (is_connected(h)) corpus.push_back({"del(" + std::to_string(u) + "," + std::to_string(v) + ")", std::move(h)});
    }
    return corpus;
}

}  // namespace oddcrit
