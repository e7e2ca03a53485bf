#include "oddcrit/graph.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>

#include "combinations.hpp"
#include "oddcrit/errors.hpp"

namespace oddcrit {

Graph::Graph(std::size_t n) : n_(n), adj_(n * n, 0) {}

Graph::Graph(std::size_t n, std::span<const Edge> edges) : Graph(n) {
    for (const auto& [u, v] : edges) add_edge(u, v);
}

void Graph::check_vertex(Vertex v) const {
    if (v >= n_) throw std::out_of_range("vertex " + std::to_string(v) + " out of range");
}

bool Graph::adjacent(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return adj_[u * n_ + v] != 0;
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    const auto row = adj_.begin() + static_cast<std::ptrdiff_t>(v * n_);
    return static_cast<std::size_t>(std::count(row, row + static_cast<std::ptrdiff_t>(n_), 1));
}

std::vector<Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    for (Vertex u = 0; u < n_; ++u)
        if (adj_[v * n_ + u]) out.push_back(u);
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(m_);
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (adj_[u * n_ + v]) out.emplace_back(u, v);
    return out;
}

std::vector<Edge> Graph::non_edges() const {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v = u + 1; v < n_; ++v)
            if (!adj_[u * n_ + v]) out.emplace_back(u, v);
    return out;
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("self-loop at vertex " + std::to_string(u));
    if (adj_[u * n_ + v]) return;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 1;
    ++m_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (!adj_[u * n_ + v]) return;
    adj_[u * n_ + v] = adj_[v * n_ + u] = 0;
    --m_;
}

Graph Graph::with_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.add_edge(u, v);
    return g;
}

Graph Graph::without_edge(Vertex u, Vertex v) const {
    Graph g = *this;
    g.remove_edge(u, v);
    return g;
}

Graph Graph::remove_vertices(std::span<const Vertex> removed) const {
    std::vector<char> gone(n_, 0);
    for (Vertex v : removed) {
        check_vertex(v);
        gone[v] = 1;
    }
    std::vector<Vertex> keep;
    for (Vertex v = 0; v < n_; ++v)
        if (!gone[v]) keep.push_back(v);
    Graph h(keep.size());
    for (std::size_t i = 0; i < keep.size(); ++i)
        for (std::size_t j = i + 1; j < keep.size(); ++j)
            if (adj_[keep[i] * n_ + keep[j]]) h.add_edge(i, j);
    return h;
}

bool VertexSet::contains(Vertex v) const {
    return std::binary_search(members.begin(), members.end(), v);
}

void check_vertex_set(const Graph& g, const VertexSet& s) {
    for (Vertex v : s.members)
        if (v >= g.order()) throw std::out_of_range("vertex set member " + std::to_string(v) + " out of range");
}

void validate_common(const ExtremalParams& p) {
    if (p.b < 1 || p.b % 2 == 0) throw ParameterError("b must be a positive odd integer, got " + std::to_string(p.b));
    if (p.k < 1) throw ParameterError("k must be positive, got " + std::to_string(p.k));
    if (p.n < 1) throw ParameterError("n must be positive, got " + std::to_string(p.n));
    if ((p.n - p.k) % 2 != 0)
        throw ParameterError("parity: n = " + std::to_string(p.n) + " is not congruent to k = " +
                             std::to_string(p.k) + " (mod 2)");
}

// --- constructors ---------------------------------------------------------

Graph make_complete(std::size_t m) {
    Graph g(m);
    for (Vertex u = 0; u < m; ++u)
        for (Vertex v = u + 1; v < m; ++v) g.add_edge(u, v);
    return g;
}

Graph make_empty(std::size_t m) { return Graph(m); }

Graph make_path(std::size_t m) {
    Graph g(m);
    for (Vertex v = 1; v < m; ++v) g.add_edge(v - 1, v);
    return g;
}

Graph make_cycle(std::size_t m) {
    if (m < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    Graph g = make_path(m);
    g.add_edge(m - 1, 0);
    return g;
}

Graph make_star(std::size_t leaves) {
    Graph g(leaves + 1);
    for (Vertex v = 1; v <= leaves; ++v) g.add_edge(0, v);
    return g;
}

Graph disjoint_union(const Graph& g, const Graph& h) {
    const std::size_t offset = g.order();
    Graph out(g.order() + h.order());
    for (const auto& [u, v] : g.edges()) out.add_edge(u, v);
    for (const auto& [u, v] : h.edges()) out.add_edge(u + offset, v + offset);
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    for (Vertex u = 0; u < g.order(); ++u)
        for (Vertex v = 0; v < h.order(); ++v) out.add_edge(u, g.order() + v);
    return out;
}

Graph family(int s, std::span<const int> parts) {
    if (parts.empty()) throw ParameterError("degenerate family");
    if (s < 0) throw ParameterError("join size must be nonnegative, got " + std::to_string(s));
    Graph body;
    for (int part : parts) {
        if (part < 1) throw ParameterError("family part sizes must be positive, got " + std::to_string(part));
        body = disjoint_union(body, make_complete(static_cast<std::size_t>(part)));
    }
    return join(make_complete(static_cast<std::size_t>(s)), body);
}

namespace {

std::vector<int> big_plus_repeats(int big, int repeat_size, int repeats) {
    std::vector<int> parts{big};
    parts.insert(parts.end(), static_cast<std::size_t>(repeats), repeat_size);
    return parts;
}

void require_positive(int value, const char* what) {
    if (value < 1) throw ParameterError(std::string(what) + " = " + std::to_string(value) + " must be positive");
}

int require_s(const ExtremalParams& p) {
    if (!p.s) throw ParameterError("separator size s is required");
    if (*p.s < 1) throw ParameterError("s must be positive, got " + std::to_string(*p.s));
    return *p.s;
}

}  // namespace

std::vector<int> gprime_parts(const ExtremalParams& p) {
    validate_common(p);
    require_positive(p.delta, "delta");
    const int big = p.n - (p.b + 1) * p.delta + p.b * p.k - 1;
    const int singles = p.b * p.delta - p.b * p.k + 1;
    require_positive(big, "n-(b+1)delta+bk-1");
    require_positive(singles, "b*delta-b*k+1");
    return big_plus_repeats(big, 1, singles);
}

std::vector<int> g2_parts(const ExtremalParams& p) {
    validate_common(p);
    const int s = require_s(p);
    const int big = p.n - (p.b + 1) * s + p.b * p.k - 1;
    const int singles = p.b * s - p.b * p.k + 1;
    require_positive(big, "n-(b+1)s+bk-1");
    require_positive(singles, "bs-bk+1");
    return big_plus_repeats(big, 1, singles);
}

std::vector<int> g3_parts(const ExtremalParams& p) {
    validate_common(p);
    const int s = require_s(p);
    if (s > p.delta - 1)
        throw ParameterError("G3 requires s <= delta-1, got s = " + std::to_string(s) +
                             ", delta = " + std::to_string(p.delta));
    const int copies = p.b * s - p.b * p.k + 1;
    const int clique = p.delta + 1 - s;
    require_positive(copies, "bs-bk+1");
    const int big = p.n - s - clique * copies;
    require_positive(big, "n-s-(delta+1-s)(bs-bk+1)");
    return big_plus_repeats(big, clique, copies);
}

Graph extremal_gprime(const ExtremalParams& p) { return family(p.delta, gprime_parts(p)); }

Graph proof_graph_g2(const ExtremalParams& p) { return family(*p.s, g2_parts(p)); }

Graph proof_graph_g3(const ExtremalParams& p) { return family(*p.s, g3_parts(p)); }

Graph connected_extremal(int n, int b, int k) {
    validate_common({.n = n, .b = b, .k = k});
    const int big = n - b - k - 2;
    require_positive(big, "n-b-k-2");
    return family(k + 1, big_plus_repeats(big, 1, b + 1));
}

Graph g_star_base(int n, int b, int k) {
    validate_common({.n = n, .b = b, .k = k});
    const int big = n - 2 * b - k - 3;
    require_positive(big, "n-2b-k-3");
    return family(k + 2, big_plus_repeats(big, 1, 2 * b + 1));
}

Graph g_star(int n, int b, int k) {
    Graph g = g_star_base(n, b, k);
    const Vertex first_single = static_cast<Vertex>(k + 2 + (n - 2 * b - k - 3));
    g.add_edge(first_single, first_single + 1);
    return g;
}

// --- queries --------------------------------------------------------------

std::size_t edge_count(const Graph& g) { return g.edge_count(); }

std::size_t min_degree(const Graph& g) {
    if (g.order() == 0) throw std::invalid_argument("minimum degree of the empty graph");
    std::size_t best = std::numeric_limits<std::size_t>::max();
    for (Vertex v = 0; v < g.order(); ++v) best = std::min(best, g.degree(v));
    return best;
}

Components component_labels(const Graph& g, std::span<const Vertex> removed) {
    constexpr std::size_t kRemoved = std::numeric_limits<std::size_t>::max();
    const std::size_t n = g.order();
    Components c;
    c.label.assign(n, kRemoved - 1);
    for (Vertex v : removed) c.label.at(v) = kRemoved;
    std::vector<Vertex> stack;
    for (Vertex root = 0; root < n; ++root) {
        if (c.label[root] != kRemoved - 1) continue;
        const std::size_t id = c.sizes.size();
        c.sizes.push_back(0);
        c.label[root] = id;
        stack.push_back(root);
        while (!stack.empty()) {
            const Vertex u = stack.back();
            stack.pop_back();
            ++c.sizes[id];
            for (Vertex w = 0; w < n; ++w) {
                if (c.label[w] == kRemoved - 1 && g.adjacent(u, w)) {
                    c.label[w] = id;
                    stack.push_back(w);
                }
            }
        }
    }
    return c;
}

std::size_t components(const Graph& g) { return component_labels(g).sizes.size(); }

bool is_connected(const Graph& g) { return components(g) <= 1; }

std::size_t odd_components_after_removal(const Graph& g, const VertexSet& s) {
    check_vertex_set(g, s);
    const auto c = component_labels(g, s.members);
    return static_cast<std::size_t>(
        std::count_if(c.sizes.begin(), c.sizes.end(), [](std::size_t size) { return size % 2 == 1; }));
}

bool is_spanning_subgraph(const Graph& sub, const Graph& super) {
    if (sub.order() != super.order()) return false;
    for (const auto& [u, v] : sub.edges())
        if (!super.adjacent(u, v)) return false;
    return true;
}

namespace {

bool is_complete(const Graph& g) {
    const std::size_t n = g.order();
    return g.edge_count() == n * (n - (n > 0 ? 1 : 0)) / 2;
}

// Smallest r < limit such that removing some r-set disconnects g, if any.
std::optional<std::size_t> smallest_cut_below(const Graph& g, std::size_t limit, std::uint64_t budget) {
    std::uint64_t planned = 0;
    for (std::size_t r = 0; r < limit; ++r) {
        planned += detail::binomial(g.order(), r);
        if (planned > budget)
            throw ScaleError("vertex connectivity enumeration exceeds budget of " + std::to_string(budget) +
                             " candidate cuts");
    }
    for (std::size_t r = 0; r < limit; ++r) {
        bool found = false;
        detail::for_each_combination(g.order(), r, [&](std::span<const std::size_t> cut) {
            if (component_labels(g, cut).sizes.size() > 1) {
                found = true;
                return false;
            }
            return true;
        });
        if (found) return r;
    }
    return std::nullopt;
}

}  // namespace

std::size_t vertex_connectivity(const Graph& g, std::uint64_t budget) {
    if (g.order() < 2) throw std::invalid_argument("vertex connectivity needs at least 2 vertices");
    if (is_complete(g)) return g.order() - 1;
    // A non-complete graph is separated by the neighbourhood of a minimum-degree vertex.
    const std::size_t delta = min_degree(g);
    return smallest_cut_below(g, delta, budget).value_or(delta);
}

bool is_t_connected(const Graph& g, std::size_t t, std::uint64_t budget) {
    if (g.order() <= t) return false;
    if (is_complete(g)) return true;
    if (min_degree(g) < t) return false;
    return !smallest_cut_below(g, t, budget).has_value();
}

}  // namespace oddcrit
