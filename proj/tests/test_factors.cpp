#include <doctest.h>

#include <random>

#include "oddcrit/errors.hpp"
#include "oddcrit/factors.hpp"
#include "oracles.hpp"

using namespace oddcrit;

namespace {

bool is_odd_factor(const Graph& g, const std::vector<Edge>& edges, int b) {
    std::vector<int> deg(g.order(), 0);
    for (const auto& [u, v] : edges) {
        if (!g.adjacent(u, v)) return false;
        ++deg[u];
        ++deg[v];
    }
    for (int d : deg)
        if (d % 2 == 0 || d > b) return false;
    return true;
}

}  // namespace

TEST_CASE("odd factors of small graphs") {
    CHECK(has_odd_factor(make_complete(2), FactorSpec::constant(1)));
    CHECK_FALSE(has_odd_factor(make_star(3), FactorSpec::constant(1)));
    CHECK(has_odd_factor(make_star(3), FactorSpec::constant(3)));
    CHECK_FALSE(has_odd_factor(make_path(3), FactorSpec::constant(3)));
    CHECK(has_odd_factor(make_complete(4), FactorSpec::constant(1)));
    CHECK_FALSE(has_odd_factor(make_complete(5), FactorSpec::constant(5)));

    // per-vertex bounds: the centre may take 3, the leaves 1
    CHECK(has_odd_factor(make_star(3), FactorSpec{1, {3, 1, 1, 1}, 0}));
    CHECK_FALSE(has_odd_factor(make_star(3), FactorSpec{1, {1, 1, 1, 1}, 0}));
    CHECK_THROWS_AS(has_odd_factor(make_star(3), FactorSpec{1, {3, 1, 2, 1}, 0}), ParameterError);
    CHECK_THROWS_AS(has_odd_factor(make_star(3), FactorSpec{1, {1, 1, 3}, 0}), ParameterError);
    CHECK_THROWS_AS(has_odd_factor(make_star(3), FactorSpec::constant(2)), ParameterError);
}

TEST_CASE("constructive search") {
    const auto k4 = find_odd_factor(make_complete(4), 1);
    REQUIRE(k4);
    CHECK(k4->size() == 2);
    CHECK(is_odd_factor(make_complete(4), *k4, 1));

    const auto star = find_odd_factor(make_star(3), 3);
    REQUIRE(star);
    CHECK(star->size() == 3);
    CHECK_FALSE(find_odd_factor(make_star(3), 1));
    CHECK_FALSE(find_odd_factor(make_path(3), 1));
    CHECK_THROWS_AS(find_odd_factor(make_complete(13), 1), ScaleError);
    CHECK_THROWS_AS(find_odd_factor(make_complete(8), 1), ScaleError);  // 28 edges
}

TEST_CASE("criterion, constructive search and edge-subset oracle agree") {
    std::mt19937_64 rng(31);
    for (int trial = 0; trial < 300; ++trial) {
        const std::size_t n = 1 + rng() % 8;
        Graph g = oracle::random_graph(n, 0.45, rng);
        while (g.edge_count() > 20) {
            const auto e = g.edges()[rng() % g.edge_count()];
            g.remove_edge(e.first, e.second);
        }
        for (int b : {1, 3}) {
            const bool by_edges = oracle::has_odd_factor_by_edges(g, b);
            CHECK(has_odd_factor(g, FactorSpec::constant(b)) == by_edges);
            const auto found = find_odd_factor(g, b);
            CHECK(found.has_value() == by_edges);
            if (found) CHECK(is_odd_factor(g, *found, b));
        }
    }
}

TEST_CASE("k-criticality examples") {
    const auto k3 = is_k_critical(make_complete(3), FactorSpec::constant(1, 1));
    CHECK(k3.critical);
    CHECK(k3.cross_checked);
    CHECK_FALSE(k3.witness);

    // n and k of different parity: deleting one vertex of K4 leaves K3
    const auto k4 = is_k_critical(make_complete(4), FactorSpec::constant(1, 1));
    CHECK_FALSE(k4.critical);
    REQUIRE(k4.witness);
    CHECK(k4.witness->members == std::vector<Vertex>{0});

    CHECK_THROWS_AS(is_k_critical(make_complete(2), FactorSpec::constant(1, 1)), ParameterError);
    CHECK_THROWS_AS(is_k_critical(make_complete(23), FactorSpec::constant(1, 1)), ScaleError);
}

TEST_CASE("G' is not critical; the join vertices are the first witness") {
    const ExtremalParams p{.n = 19, .b = 1, .k = 1, .delta = 3};
    const Graph g = extremal_gprime(p);
    const auto v = is_k_critical(g, FactorSpec::constant(1, 1));
    CHECK_FALSE(v.critical);
    REQUIRE(v.witness);
    CHECK(v.witness->members == std::vector<Vertex>{0, 1, 2});
    CHECK(v.witness_odd_components == 4);
    CHECK(v.witness_bound == 2);
    CHECK(v.witness->members == criticality_witness_extremal(p).members);

    // above the cap the closed-form witness is checked by a component count
    const ExtremalParams q{.n = 31, .b = 1, .k = 1, .delta = 2};
    CHECK(odd_components_after_removal(extremal_gprime(q), criticality_witness_extremal(q)) == 3);
}

TEST_CASE("truncated witness search") {
    const ExtremalParams p{.n = 41, .b = 3, .k = 1, .delta = 3};
    CriticalityOptions opt;
    opt.max_subset_size = 3;
    const auto v = is_k_critical(extremal_gprime(p), FactorSpec::constant(3, 1), opt);
    CHECK_FALSE(v.exhaustive);
    CHECK_FALSE(v.critical);
    REQUIRE(v.witness);
    CHECK(v.witness->members == std::vector<Vertex>{0, 1, 2});
    CHECK(v.witness_odd_components == 3 * 3 - 3 + 2);
}

TEST_CASE("G* is 1-critical for b = 1") {
    CriticalityOptions opt;
    opt.cross_check = false;
    const auto v = is_k_critical(g_star(19, 1, 1), FactorSpec::constant(1, 1), opt);
    CHECK(v.critical);
    CHECK(v.exhaustive);
}

TEST_CASE("critical graphs are k-connected; supergraphs stay critical") {
    std::mt19937_64 rng(77);
    int critical_seen = 0;
    for (int trial = 0; trial < 400; ++trial) {
        const int k = 1 + static_cast<int>(rng() % 2);
        const int b = rng() % 2 ? 1 : 3;
        const std::size_t n = static_cast<std::size_t>(k + 2) + 2 * (rng() % 3);
        const Graph g = oracle::random_graph(n, 0.7, rng);
        const auto v = is_k_critical(g, FactorSpec::constant(b, k));
        if (!v.critical) {
            REQUIRE(v.witness);
            CHECK(odd_components_after_removal(g, *v.witness) == v.witness_odd_components);
            continue;
        }
        ++critical_seen;
        CHECK(oracle::vertex_connectivity(g) >= static_cast<std::size_t>(k));
        const auto missing = g.non_edges();
        if (!missing.empty()) {
            const auto [a, c] = missing[rng() % missing.size()];
            CHECK(is_k_critical(g.with_edge(a, c), FactorSpec::constant(b, k)).critical);
        }
    }
    CHECK(critical_seen > 20);
}
