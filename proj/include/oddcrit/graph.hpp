#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace oddcrit {

using Vertex = std::size_t;
using Edge = std::pair<Vertex, Vertex>;

// Simple undirected graph on {0..n-1}, dense adjacency.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t n);
    Graph(std::size_t n, std::span<const Edge> edges);

    std::size_t order() const noexcept { return n_; }
    std::size_t edge_count() const noexcept { return m_; }

    bool adjacent(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::vector<Vertex> neighbors(Vertex v) const;

    // Edges (u, v) with u < v, in row-major order.
    std::vector<Edge> edges() const;
    // Unordered pairs u < v that are not edges.
    std::vector<Edge> non_edges() const;

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    Graph with_edge(Vertex u, Vertex v) const;
    Graph without_edge(Vertex u, Vertex v) const;

    // Subgraph induced on the vertices not in `removed`, relabelled in increasing order.
    Graph remove_vertices(std::span<const Vertex> removed) const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    void check_vertex(Vertex v) const;

    std::size_t n_ = 0;
    std::size_t m_ = 0;
    std::vector<std::uint8_t> adj_;
};

struct VertexSet {
    std::vector<Vertex> members;  // sorted, distinct

    std::size_t size() const noexcept { return members.size(); }
    bool contains(Vertex v) const;
    friend bool operator==(const VertexSet&, const VertexSet&) = default;
};

// Throws std::out_of_range if a member is not a vertex of g.
void check_vertex_set(const Graph& g, const VertexSet& s);

// Parameter tuple for the extremal families K_delta v (K_big u singletons) and the proof graphs.
struct ExtremalParams {
    int n = 0;
    int b = 1;
    int k = 1;
    int delta = 1;
    std::optional<int> s;
};

// Basic validity shared by every family: b positive odd, k positive, n = k (mod 2).
void validate_common(const ExtremalParams& p);

// --- constructors ---------------------------------------------------------

Graph make_complete(std::size_t m);
Graph make_empty(std::size_t m);
Graph make_path(std::size_t m);
Graph make_cycle(std::size_t m);
Graph make_star(std::size_t leaves);

Graph disjoint_union(const Graph& g, const Graph& h);
Graph join(const Graph& g, const Graph& h);

// K_s v (K_{parts[0]} u ... u K_{parts[t-1]}). Join cell is labelled first, then parts in order.
Graph family(int s, std::span<const int> parts);

// Part lists (big clique first) for the families below; they throw ParameterError on invalid input.
std::vector<int> gprime_parts(const ExtremalParams& p);
std::vector<int> g2_parts(const ExtremalParams& p);
std::vector<int> g3_parts(const ExtremalParams& p);

// G' = K_delta v (K_{n-(b+1)delta+bk-1} u (b delta - bk + 1) K_1)
Graph extremal_gprime(const ExtremalParams& p);
// G2 = K_s v (K_{n-(b+1)s+bk-1} u (bs - bk + 1) K_1)
Graph proof_graph_g2(const ExtremalParams& p);
// G3 = K_s v (K_{n-s-(delta+1-s)(bs-bk+1)} u (bs-bk+1) K_{delta+1-s}), s <= delta-1
Graph proof_graph_g3(const ExtremalParams& p);

// K_{k+1} v (K_{n-b-k-2} u (b+1) K_1), the distance-spectral extremal graph for connected graphs.
Graph connected_extremal(int n, int b, int k);

// K_{k+2} v (K_{n-2b-k-3} u (2b+1) K_1) plus one edge between the first two singletons.
Graph g_star(int n, int b, int k);
Graph g_star_base(int n, int b, int k);

// --- queries --------------------------------------------------------------

std::size_t edge_count(const Graph& g);
std::size_t min_degree(const Graph& g);  // throws std::invalid_argument on n = 0

// Component label per vertex (vertices in `removed` get label SIZE_MAX) and component sizes.
struct Components {
    std::vector<std::size_t> label;
    std::vector<std::size_t> sizes;
};
Components component_labels(const Graph& g, std::span<const Vertex> removed = {});

std::size_t components(const Graph& g);
bool is_connected(const Graph& g);
std::size_t odd_components_after_removal(const Graph& g, const VertexSet& s);

// True iff every edge of `sub` is an edge of `super` on identical vertex labels.
bool is_spanning_subgraph(const Graph& sub, const Graph& super);

// Size of a minimum vertex cut (n-1 for complete graphs). Exhaustive over cut candidates of size
// below the minimum degree, so exponential in delta; throws ScaleError past `budget` candidates.
std::size_t vertex_connectivity(const Graph& g, std::uint64_t budget = 50'000'000);
// Cheaper test: removing any fewer than t vertices leaves g connected, and n > t.
bool is_t_connected(const Graph& g, std::size_t t, std::uint64_t budget = 50'000'000);

}  // namespace oddcrit
