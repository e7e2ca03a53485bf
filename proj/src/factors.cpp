#include "oddcrit/factors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

#include "combinations.hpp"
#include "oddcrit/errors.hpp"

namespace oddcrit {

void validate_factor_spec(const Graph& g, const FactorSpec& f) {
    if (f.k < 0) throw ParameterError("k must be nonnegative");
    auto check = [](int bound) {
        if (bound < 1 || bound % 2 == 0) throw ParameterError("factor bound " + std::to_string(bound) + " must be odd and >= 1");
    };
    if (f.is_constant()) {
        check(f.b);
    } else {
        if (f.per_vertex.size() != g.order()) throw ParameterError("per-vertex bounds do not match the vertex count");
        std::for_each(f.per_vertex.begin(), f.per_vertex.end(), check);
    }
}

namespace {

// Scratch union-find, rebuilt per subset.
class OddComponentCounter {
public:
    explicit OddComponentCounter(const Graph& g) : n_(g.order()), edges_(g.edges()), parent_(n_), size_(n_) {}

    std::size_t count(const std::vector<char>& removed) {
        for (std::size_t v = 0; v < n_; ++v) {
            parent_[v] = v;
            size_[v] = 1;
        }
        for (const auto& [u, v] : edges_) {
            if (removed[u] || removed[v]) continue;
            unite(u, v);
        }
        std::size_t odd = 0;
        for (std::size_t v = 0; v < n_; ++v)
            if (!removed[v] && parent_[v] == v && size_[v] % 2 == 1) ++odd;
        return odd;
    }

private:
    std::size_t find(std::size_t v) {
        while (parent_[v] != v) {
            parent_[v] = parent_[parent_[v]];
            v = parent_[v];
        }
        return v;
    }

    void unite(std::size_t a, std::size_t b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size_[a] < size_[b]) std::swap(a, b);
        parent_[b] = a;
        size_[a] += size_[b];
    }

    std::size_t n_;
    std::vector<Edge> edges_;
    std::vector<std::size_t> parent_;
    std::vector<std::size_t> size_;
};

struct Violation {
    VertexSet set;
    std::size_t odd = 0;
    std::int64_t bound = 0;
};

std::int64_t criterion_bound(const FactorSpec& f, std::span<const std::size_t> s, std::vector<int>& scratch) {
    if (f.is_constant()) return static_cast<std::int64_t>(f.b) * (static_cast<std::int64_t>(s.size()) - f.k);
    scratch.clear();
    for (std::size_t v : s) scratch.push_back(f.bound(v));
    const std::int64_t total = std::accumulate(scratch.begin(), scratch.end(), std::int64_t{0});
    const auto top = static_cast<std::ptrdiff_t>(f.k);
    std::partial_sort(scratch.begin(), scratch.begin() + top, scratch.end(), std::greater<>());
    return total - std::accumulate(scratch.begin(), scratch.begin() + top, std::int64_t{0});
}

// First S (by size, then lexicographically) in [min_size, max_size] violating the criterion.
std::optional<Violation> search_violation(const Graph& g, const FactorSpec& f, std::size_t min_size,
                                          std::size_t max_size, std::uint64_t& examined) {
    const std::size_t n = g.order();
    OddComponentCounter counter(g);
    std::vector<char> removed(n, 0);
    std::vector<int> scratch;
    std::optional<Violation> found;
    for (std::size_t r = min_size; r <= max_size && !found; ++r) {
        detail::for_each_combination(n, r, [&](std::span<const std::size_t> s) {
            ++examined;
            for (std::size_t v : s) removed[v] = 1;
            const std::size_t odd = counter.count(removed);
            for (std::size_t v : s) removed[v] = 0;
            const std::int64_t bound = criterion_bound(f, s, scratch);
            if (static_cast<std::int64_t>(odd) > bound) {
                found = Violation{VertexSet{{s.begin(), s.end()}}, odd, bound};
                return false;
            }
            return true;
        });
    }
    return found;
}

void enforce_cap(const Graph& g, std::size_t cap) {
    if (g.order() > cap)
        throw ScaleError("subset enumeration refused: n = " + std::to_string(g.order()) + " exceeds cap " +
                         std::to_string(cap));
}

}  // namespace

bool has_odd_factor(const Graph& g, const FactorSpec& f, std::size_t cap) {
    validate_factor_spec(g, f);
    if (f.k != 0) throw ParameterError("has_odd_factor expects k = 0");
    enforce_cap(g, cap);
    if (g.order() == 0) return true;
    std::uint64_t examined = 0;
    return !search_violation(g, f, 0, g.order() - 1, examined).has_value();
}

std::optional<VertexSet> definitional_failure(const Graph& g, int b, int k, std::size_t cap) {
    enforce_cap(g, cap);
    if (k < 0 || static_cast<std::size_t>(k) > g.order()) throw ParameterError("k out of range");
    std::optional<VertexSet> failing;
    detail::for_each_combination(g.order(), static_cast<std::size_t>(k), [&](std::span<const std::size_t> x) {
        if (!has_odd_factor(g.remove_vertices(x), FactorSpec::constant(b), cap)) {
            failing = VertexSet{{x.begin(), x.end()}};
            return false;
        }
        return true;
    });
    return failing;
}

CriticalityVerdict is_k_critical(const Graph& g, const FactorSpec& f, const CriticalityOptions& options) {
    validate_factor_spec(g, f);
    const std::size_t n = g.order();
    const auto k = static_cast<std::size_t>(f.k);
    if (n < k + 2)
        throw ParameterError("criticality needs n >= k+2, got n = " + std::to_string(n) + ", k = " + std::to_string(k));
    if (options.cap < 1) throw ParameterError("enumeration cap must be at least 1");

    std::size_t max_size = n - 1;
    CriticalityVerdict verdict;
    if (options.max_subset_size) {
        max_size = std::min(max_size, *options.max_subset_size);
        verdict.exhaustive = max_size == n - 1;
    }
    if (verdict.exhaustive) enforce_cap(g, options.cap);

    const auto violation = search_violation(g, f, k, max_size, verdict.subsets_examined);
    verdict.critical = !violation.has_value();
    if (violation) {
        verdict.witness = violation->set;
        verdict.witness_odd_components = violation->odd;
        verdict.witness_bound = violation->bound;
    }

    if (options.cross_check && verdict.exhaustive && f.is_constant()) {
        const bool definitional = !definitional_failure(g, f.b, f.k, options.cap).has_value();
        if (definitional != verdict.critical)
            throw std::logic_error("criticality routes disagree: criterion says " +
                                   std::string(verdict.critical ? "critical" : "not critical"));
        verdict.cross_checked = true;
    }
    return verdict;
}

VertexSet criticality_witness_extremal(const ExtremalParams& p) {
    gprime_parts(p);  // validation
    VertexSet s;
    s.members.resize(static_cast<std::size_t>(p.delta));
    std::iota(s.members.begin(), s.members.end(), Vertex{0});
    return s;
}

std::optional<std::vector<Edge>> find_odd_factor(const Graph& g, int b) {
    if (b < 1 || b % 2 == 0) throw ParameterError("b must be a positive odd integer");
    if (g.order() > 12 || g.edge_count() > 24) throw ScaleError("oracle scale");
    const std::size_t n = g.order();
    const std::vector<Edge> edges = g.edges();
    if (n == 0) return std::vector<Edge>{};

    // Index of the last edge touching each vertex; an isolated vertex can never be covered.
    std::vector<std::ptrdiff_t> last(n, -1);
    for (std::size_t i = 0; i < edges.size(); ++i) {
        last[edges[i].first] = static_cast<std::ptrdiff_t>(i);
        last[edges[i].second] = static_cast<std::ptrdiff_t>(i);
    }
    if (std::find(last.begin(), last.end(), -1) != last.end()) return std::nullopt;

    std::vector<int> degree(n, 0);
    std::vector<char> chosen(edges.size(), 0);

    auto closed_ok = [&](Vertex v, std::size_t i) {
        return last[v] != static_cast<std::ptrdiff_t>(i) || degree[v] % 2 == 1;
    };

    std::function<bool(std::size_t)> dfs = [&](std::size_t i) -> bool {
        if (i == edges.size()) return true;
        const auto [u, v] = edges[i];
        if (degree[u] < b && degree[v] < b) {
            ++degree[u];
            ++degree[v];
            chosen[i] = 1;
            if (closed_ok(u, i) && closed_ok(v, i) && dfs(i + 1)) return true;
            --degree[u];
            --degree[v];
            chosen[i] = 0;
        }
        return closed_ok(u, i) && closed_ok(v, i) && dfs(i + 1);
    };
    if (!dfs(0)) return std::nullopt;

    std::vector<Edge> factor;
    for (std::size_t i = 0; i < edges.size(); ++i)
        if (chosen[i]) factor.push_back(edges[i]);
    return factor;
}

}  // namespace oddcrit
