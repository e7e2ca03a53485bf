#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "oddcrit/graph.hpp"

namespace oddcrit {

// Per-vertex odd upper bounds f(v) for (1,f)-odd factors, plus the criticality order k.
// An empty `per_vertex` means the constant bound f = b (the [1,b] case).
struct FactorSpec {
    int b = 1;
    std::vector<int> per_vertex;
    int k = 0;

    static FactorSpec constant(int b, int k = 0) { return FactorSpec{b, {}, k}; }
    bool is_constant() const noexcept { return per_vertex.empty(); }
    int bound(Vertex v) const { return per_vertex.empty() ? b : per_vertex.at(v); }
};

// Throws ParameterError unless every bound is odd and >= 1, k >= 0, and per-vertex bounds (if any)
// cover exactly the vertices of g.
void validate_factor_spec(const Graph& g, const FactorSpec& f);

struct CriticalityVerdict {
    bool critical = false;
    std::optional<VertexSet> witness;  // present iff !critical (or a witness-only search found one)
    std::size_t witness_odd_components = 0;
    std::int64_t witness_bound = 0;  // sum_S f - max_{|X|=k} sum_X f
    std::uint64_t subsets_examined = 0;
    bool cross_checked = false;  // the definitional route was run and agreed
    bool exhaustive = true;      // false when the search was truncated by a size limit
};

struct CriticalityOptions {
    std::size_t cap = 22;                        // largest order enumerated exhaustively
    bool cross_check = true;                     // constant f: also run the definitional route
    std::optional<std::size_t> max_subset_size;  // truncate |S| (witness-only search, no cap)
};

// o(G-S) <= sum_{v in S} f(v) for every S (k = 0 case of the criterion).
bool has_odd_factor(const Graph& g, const FactorSpec& f, std::size_t cap = 22);

// Subsets S with |S| >= k are enumerated by increasing size in lexicographic order; the first S
// with o(G-S) > sum_S f - (top-k sum of f over S) is the witness. S = V is vacuous and skipped.
// Throws ParameterError for n < k+2, ScaleError past the cap, std::logic_error if the two
// routes disagree.
CriticalityVerdict is_k_critical(const Graph& g, const FactorSpec& f, const CriticalityOptions& options = {});

// Definitional route for constant f = b: G - X has a [1,b]-odd factor for every |X| = k.
// Returns the first failing X in lexicographic order, or nullopt if none fails.
std::optional<VertexSet> definitional_failure(const Graph& g, int b, int k, std::size_t cap = 22);

// The delta join vertices of G'; o(G' - S) = b delta - bk + 2 > b(delta - k).
VertexSet criticality_witness_extremal(const ExtremalParams& p);

// Depth-first search over edges with degree-parity pruning. Limits: n <= 12, e <= 24.
std::optional<std::vector<Edge>> find_odd_factor(const Graph& g, int b);

}  // namespace oddcrit
