#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <sstream>

#include "wsat/graph.hpp"

using namespace wsat;

namespace {

// Symmetry and no-loop invariants, edge_count = half the degree sum.
void check_graph_invariants(const Graph& g) {
    long long degsum = 0;
    for (int u = 0; u < g.vertex_count(); ++u) {
        CHECK_FALSE(g.neighbors(u).contains(u));
        degsum += g.degree(u);
        for (int v = g.neighbors(u).first(); v >= 0; v = g.neighbors(u).next(v))
            CHECK(g.neighbors(v).contains(u));
    }
    CHECK(degsum == 2LL * g.edge_count());
}

Graph random_graph(int n, double p, std::uint64_t seed) {
    Graph g(n);
    std::mt19937_64 rng(seed);
    std::bernoulli_distribution coin(p);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (coin(rng)) g.add_edge(u, v);
    return g;
}

}  // namespace

TEST_CASE("complete_graph") {
    CHECK(complete_graph(0).edge_count() == 0);
    CHECK(complete_graph(5).edge_count() == 10);
    Graph k8 = complete_graph(8);
    CHECK(k8.edge_count() == 28);
    for (int v = 0; v < 8; ++v) CHECK(k8.degree(v) == 7);
    check_graph_invariants(k8);
}

TEST_CASE("complete_bipartite") {
    auto [g23, s23] = complete_bipartite(2, 3);
    CHECK(g23.edge_count() == 6);
    for (int v = 0; v < 2; ++v) CHECK(g23.degree(v) == 3);
    CHECK(s23.left_size() == 2);
    CHECK(s23.right_size() == 3);
    check_graph_invariants(g23);

    auto [g11, s11] = complete_bipartite(1, 1);
    CHECK(g11.edge_count() == 1);
    CHECK(s11.total == 2);

    auto [g44, s44] = complete_bipartite(4, 4);
    (void)s44;
    CHECK(g44.edge_count() == 16);
}

TEST_CASE("cone") {
    Graph k3 = complete_graph(3);
    CHECK(cone(k3, 0, false) == k3);

    Graph e4(4);
    Graph star = cone(e4, 1, false);
    CHECK(star.edge_count() == 4);
    CHECK(star.degree(4) == 4);
    check_graph_invariants(star);

    // e(cone(G,k,false)) = e(G) + k n(G); clique adds C(k,2) more.
    std::mt19937_64 seeds(7);
    for (int trial = 0; trial < 10; ++trial) {
        int n = 3 + trial % 5;
        Graph g = random_graph(n, 0.5, seeds());
        for (int k = 0; k <= 3; ++k) {
            CHECK(cone(g, k, false).edge_count() == g.edge_count() + k * n);
            CHECK(cone(g, k, true).edge_count() == g.edge_count() + k * n + k * (k - 1) / 2);
            check_graph_invariants(cone(g, k, false));
        }
    }
}

TEST_CASE("edge_complement_list") {
    Graph k4 = complete_graph(4);
    CHECK(edge_complement_list(k4, k4).empty());

    Graph k4_minus = k4;
    k4_minus.remove_edge(0, 1);
    auto one = edge_complement_list(k4_minus, k4);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == Edge(0, 1));

    Graph e3(3);
    auto all = edge_complement_list(e3, complete_graph(3));
    REQUIRE(all.size() == 3);
    CHECK(all[0] == Edge(0, 1));
    CHECK(all[1] == Edge(0, 2));
    CHECK(all[2] == Edge(1, 2));

    // G not a subgraph of F is rejected, as are mismatched vertex counts.
    Graph g(3);
    g.add_edge(0, 1);
    Graph f(3);
    f.add_edge(1, 2);
    CHECK_THROWS_AS(edge_complement_list(g, f), std::invalid_argument);
    CHECK_THROWS_AS(edge_complement_list(Graph(2), Graph(3)), std::invalid_argument);
}

TEST_CASE("edge normalization and ordering") {
    Edge e(3, 1);
    CHECK(e.u == 1);
    CHECK(e.v == 3);
    CHECK_THROWS_AS(Edge(2, 2), std::invalid_argument);
    CHECK(Edge(0, 2) < Edge(1, 2));
    CHECK(Edge(1, 2) < Edge(1, 3));
}

TEST_CASE("edge list round trip") {
    std::mt19937_64 seeds(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_graph(2 + trial % 9, 0.4, seeds());
        auto parsed = parse_edge_list(to_edge_list(g));
        CHECK(parsed.graph == g);
        CHECK_FALSE(parsed.sides.has_value());
    }
    auto [g, sides] = complete_bipartite(3, 4);
    auto parsed = parse_edge_list(to_edge_list(g, &sides));
    CHECK(parsed.graph == g);
    REQUIRE(parsed.sides.has_value());
    CHECK(parsed.sides->left_count == 3);
}

TEST_CASE("edge list parser accepts comments, blanks, any order") {
    auto parsed = parse_edge_list(
        "# a comment\n"
        "n 4\n"
        "\n"
        "2 3\n"
        "1 0  # trailing comment, reversed endpoints\n"
        "0 2\n");
    CHECK(parsed.graph.vertex_count() == 4);
    CHECK(parsed.graph.edge_count() == 3);
    CHECK(parsed.graph.has_edge(0, 1));
    CHECK(parsed.graph.has_edge(2, 3));

    CHECK_THROWS_AS(parse_edge_list("0 1\nn 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 3\n0 3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("n 3\n1 1\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_edge_list("3\n"), std::invalid_argument);
}

TEST_CASE("fingerprint distinguishes graphs and ignores build order") {
    Graph a(4);
    a.add_edge(0, 1);
    a.add_edge(2, 3);
    Graph b(4);
    b.add_edge(2, 3);
    b.add_edge(0, 1);
    CHECK(a.fingerprint() == b.fingerprint());
    b.add_edge(0, 2);
    CHECK(a.fingerprint() != b.fingerprint());
    CHECK(Graph(4).fingerprint() != Graph(5).fingerprint());
}

TEST_CASE("spanning subgraph check") {
    Graph k5 = complete_graph(5);
    Graph g(5);
    g.add_edge(0, 4);
    CHECK(g.is_spanning_subgraph_of(k5));
    CHECK_FALSE(k5.is_spanning_subgraph_of(g));
    CHECK_FALSE(g.is_spanning_subgraph_of(Graph(6)));
}

TEST_CASE("graphs beyond 64 vertices") {
    Graph g = complete_graph(70);
    CHECK(g.edge_count() == 70 * 69 / 2);
    CHECK(g.degree(69) == 69);
    check_graph_invariants(g);
}
