#pragma once

#include <boost/rational.hpp>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "oddcrit/factors.hpp"
#include "oddcrit/graph.hpp"
#include "oddcrit/graph_io.hpp"

namespace oddcrit {

enum class TheoremId { t1_1, t1_2, t1_3, t1_4, t1_5, t1_6 };

TheoremId parse_theorem_id(std::string_view text);  // "1.1" .. "1.6"
std::string_view to_string(TheoremId id);

// Global comparison knobs. Equality of spectral radii within `equality`; strict inequalities
// must clear `strict_margin`.
struct Tolerances {
    double equality = 1e-8;
    double strict_margin = 1e-9;

    // Single-knob override: the margin tracks the equality tolerance at one tenth.
    static Tolerances from_equality(double equality) { return {equality, equality / 10.0}; }
};

using Rational = boost::rational<std::int64_t>;

struct OrderBound {
    TheoremId theorem;
    Rational value;
    double as_double() const { return boost::rational_cast<double>(value); }
};

// The order lower bound n0 of each theorem, evaluated exactly. Theorem 1.4 ignores delta.
// Throws ParameterError for nonpositive inputs and, for Theorem 1.6, b < k.
OrderBound order_bound(TheoremId id, int b, int k, int delta);

enum class Conclusion { asserts_critical, extremal_exception, inapplicable, condition_fails };
std::string_view to_string(Conclusion c);

struct HypothesisCheck {
    std::string name;
    bool met = false;
    std::string detail;
};

struct TheoremVerdict {
    TheoremId theorem{};
    bool hypotheses_met = false;
    std::vector<HypothesisCheck> hypotheses;
    bool condition_met = false;
    std::string quantity;                  // "e", "rho", "q", "mu1", "eta1"
    std::optional<double> graph_value;     // left side of the comparison
    std::optional<double> extremal_value;  // right side
    Conclusion conclusion = Conclusion::inapplicable;
};

// Hypothesis gate, size/spectral comparison against the theorem's extremal graph, and the
// four-way conclusion. Extremal identity is decided by label-for-label equality with the graph
// the constructors build.
TheoremVerdict evaluate_theorem(const Graph& g, TheoremId id, int b, int k, int delta, const Tolerances& tol = {});

// mu1(K_{k+1} v (K_{n-b-k-2} u (b+1)K_1)) < mu1(G*) < mu1(K_{k+2} v (K_{n-2b-k-3} u (2b+1)K_1))
bool gstar_ordering_check(int n, int b, int k, const Tolerances& tol = {});

// mu1(G') >= n - b delta + bk - 2, the radius of its K_{n - b delta + bk - 1} principal submatrix.
bool interlacing_bound_check(const ExtremalParams& p, const Tolerances& tol = {});

enum class CheckOutcome { holds, violated, inapplicable };
std::string_view to_string(CheckOutcome c);

// eta1(G') > 2n + 4b delta - 4bk + 1, applicable once n >= 2(b^2+2b)delta^2 + 2delta + 2b^2k^2.
CheckOutcome eta_lower_bound_check(const ExtremalParams& p);
std::int64_t eta_bound_order_requirement(int b, int k, int delta);

enum class OrderingLemma { l2_8, l2_9, l2_10 };

struct LemmaCheck {
    CheckOutcome outcome = CheckOutcome::inapplicable;
    double left = 0.0;   // radius of K_s v (K_{n_1} u ... u K_{n_t})
    double right = 0.0;  // radius of the comparison family
    bool equality_case = false;
};

// p is the lower part bound of Lemmas 2.8 and 2.10 (ignored by Lemma 2.9).
LemmaCheck ordering_lemma_check(OrderingLemma lemma, int s, std::span<const int> parts, int p,
                                const Tolerances& tol = {});

struct SweepOptions {
    std::size_t cap = 22;
    Tolerances tolerances{};
    unsigned threads = 0;  // 0: hardware concurrency
};

struct SweepRecord {
    std::string graph_id;
    std::size_t order = 0;
    TheoremVerdict verdict;
    std::string brute_force;  // critical | not_critical | skipped_cap | not_run
    std::optional<VertexSet> witness;
    std::uint64_t subsets_examined = 0;
    bool falsification = false;
    std::string note;
};

struct SweepReport {
    TheoremId theorem{};
    int b = 1;
    int k = 1;
    int delta = 1;
    std::vector<SweepRecord> records;

    std::size_t falsifications() const;
};

// Evaluates every corpus graph; each asserts_critical or extremal_exception verdict is checked by
// brute-force criticality. A falsification is an asserts_critical graph that is not critical.
SweepReport counterexample_sweep(std::span<const NamedGraph> corpus, TheoremId id, int b, int k, int delta,
                                 const SweepOptions& options = {});

// base plus every single-edge addition, ids "base" and "add(u,v)".
std::vector<NamedGraph> single_edge_additions(const Graph& base);
// base plus every single-edge deletion that keeps the graph connected, ids "del(u,v)".
std::vector<NamedGraph> single_edge_deletions(const Graph& base);

}  // namespace oddcrit
