#include <doctest.h>

#include <random>
#include <sstream>

#include "lr/dot.hpp"
#include "lr/graph.hpp"
#include "lr/graph6.hpp"

using namespace lr;

namespace {

// Independent graph6 oracle following the format document: N(n) is n+63
// for n <= 62, and the edge bits are the upper triangle in column-major
// order, packed big-endian six to a byte.
std::string oracle_graph6(int n, const std::vector<std::vector<bool>>& adj) {
    REQUIRE(n <= 62);
    std::string out(1, static_cast<char>(n + 63));
    std::vector<bool> bits;
    for (int col = 1; col < n; ++col)
        for (int row = 0; row < col; ++row) bits.push_back(adj[row][col]);
    while (bits.size() % 6 != 0) bits.push_back(false);
    for (size_t i = 0; i < bits.size(); i += 6) {
        int v = 0;
        for (int b = 0; b < 6; ++b) v = (v << 1) | (bits[i + b] ? 1 : 0);
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

Graph random_graph(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution coin(p);
    std::vector<Edge> edges;
    for (int v = 0; v < n; ++v)
        for (int u = v + 1; u < n; ++u)
            if (coin(rng)) edges.emplace_back(v, u);
    return Graph::from_edges(n, edges);
}

}  // namespace

TEST_CASE("build_graph basics") {
    Graph k3 = Graph::from_edges(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(k3.order() == 3);
    CHECK(k3.edge_count() == 3);
    CHECK(k3.degree_set() == std::vector<int>{2});

    Graph e4 = Graph::from_edges(4, {});
    CHECK(e4.degree_set() == std::vector<int>{0});

    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(2, {{0, 2}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph::from_edges(3, {{0, 1}, {1, 0}}), std::invalid_argument);
}

TEST_CASE("complement") {
    CHECK(complete_graph(3).complement() == empty_graph(3));
    // C5 is self-complementary
    Graph c5 = cycle_graph(5);
    Graph cc = c5.complement();
    CHECK(cc.degree_set() == std::vector<int>{2});
    CHECK(cc.edge_count() == 5);

    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_graph(1 + trial % 12, 0.4, rng);
        CHECK(g.complement().complement() == g);
        CHECK(g.complement().edge_count() ==
              static_cast<long long>(g.order()) * (g.order() - 1) / 2 - g.edge_count());
    }
}

TEST_CASE("disjoint union") {
    Graph two = disjoint_union(complete_graph(1), complete_graph(1));
    CHECK(two.order() == 2);
    CHECK(two.edge_count() == 0);

    Graph c3c3 = disjoint_union(cycle_graph(3), cycle_graph(3));
    CHECK(c3c3.order() == 6);
    CHECK(c3c3.degree_set() == std::vector<int>{2});
    CHECK_FALSE(is_connected(c3c3));

    Graph p2p3 = disjoint_union(path_graph(2), path_graph(3));
    CHECK(p2p3.order() == 5);
    CHECK(p2p3.edge_count() == 3);
}

TEST_CASE("connectivity") {
    CHECK(is_connected(cycle_graph(6)));
    CHECK(is_connected(complete_graph(1)));
    CHECK(is_connected(empty_graph(0)));
    CHECK_FALSE(is_connected(empty_graph(2)));
}

TEST_CASE("cut vertices") {
    // path 0-1-2: middle vertex is the cut
    auto cut = cut_vertices(path_graph(3));
    CHECK(cut == std::vector<bool>{false, true, false});
    cut = cut_vertices(cycle_graph(5));
    for (bool c : cut) CHECK_FALSE(c);
    // K3 with a pendant at vertex 0
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {0, 2}, {0, 3}});
    cut = cut_vertices(g);
    CHECK(cut == std::vector<bool>{true, false, false, false});
}

TEST_CASE("graph6 fixed encodings") {
    CHECK(write_graph6(complete_graph(3)) == "Bw");
    CHECK(write_graph6(complete_graph(1)) == "@");
    CHECK(write_graph6(empty_graph(5)) == "D??");
    CHECK(parse_graph6("Bw") == complete_graph(3));
}

TEST_CASE("graph6 matches the independent oracle") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int n = 1 + static_cast<int>(rng() % 20);
        Graph g = random_graph(n, 0.3, rng);
        std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
        for (auto [u, v] : g.edges()) adj[u][v] = adj[v][u] = true;
        CHECK(write_graph6(g) == oracle_graph6(n, adj));
    }
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 200; ++trial) {
        int n = static_cast<int>(rng() % 33);
        Graph g = random_graph(n, 0.1 + 0.2 * (trial % 4), rng);
        CHECK(parse_graph6(write_graph6(g)) == g);
    }
    // long-form size encoding
    Graph big = path_graph(70);
    std::string enc = write_graph6(big);
    CHECK(enc[0] == '~');
    CHECK(parse_graph6(enc) == big);
}

TEST_CASE("graph6 parse errors carry byte offsets") {
    CHECK_THROWS_AS(parse_graph6("B"), Graph6Error);          // too short
    CHECK_THROWS_AS(parse_graph6("Bww"), Graph6Error);        // trailing garbage
    CHECK_THROWS_AS(parse_graph6("B\x1f"), Graph6Error);      // byte out of range
    try {
        parse_graph6("Bww");
        FAIL("expected throw");
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 2);
    }
}

TEST_CASE("graph6 line reader") {
    std::istringstream in("Bw\n\nD??\n");
    auto graphs = read_graph6_lines(in);
    REQUIRE(graphs.size() == 2);
    CHECK(graphs[0] == complete_graph(3));
    CHECK(graphs[1] == empty_graph(5));
}

TEST_CASE("dot output") {
    std::string plain = write_dot(path_graph(2));
    CHECK(plain.find("0 -- 1") != std::string::npos);

    std::vector<int> colours{0, 1};
    std::string coloured = write_dot(path_graph(2), &colours);
    CHECK(coloured.find("fillcolor") != std::string::npos);
    // two classes get two distinct fills
    auto first = coloured.find("fillcolor=\"");
    auto second = coloured.find("fillcolor=\"", first + 1);
    REQUIRE(second != std::string::npos);
    CHECK(coloured.substr(first, 22) != coloured.substr(second, 22));

    CHECK(write_dot(empty_graph(0)).find("graph g {") == 0);

    std::vector<int> wrong{0};
    CHECK_THROWS_AS(write_dot(path_graph(2), &wrong), std::invalid_argument);
}

TEST_CASE("permutation relabels edges") {
    Graph g = path_graph(3);
    std::vector<int> perm{2, 0, 1};
    Graph h = g.permuted(perm);
    CHECK(h.has_edge(2, 0));
    CHECK(h.has_edge(0, 1));
    CHECK_FALSE(h.has_edge(2, 1));
}
