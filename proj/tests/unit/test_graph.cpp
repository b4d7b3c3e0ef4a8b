#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chromroot/chromatic.hpp"
#include "chromroot/graph.hpp"
#include "support/oracles.hpp"
#include "support/test_rng.hpp"

using namespace chromroot;
using testsupport::Rng;

TEST_CASE("edge-list parsing") {
    Graph tri = parse_edge_list("0 1\n1 2\n0 2");
    CHECK(tri == Graph::complete(3));

    Graph isolated = parse_edge_list("n 3\n");
    CHECK(isolated.vertex_count() == 3);
    CHECK(isolated.edge_count() == 0);

    CHECK(parse_edge_list("0 1\n0 1") == Graph::complete(2));
    CHECK(parse_edge_list("1 0\n") == Graph::complete(2));  // order normalised

    Graph commented = parse_edge_list("# header comment\nn 4\n0 1  # trailing\n\n2 3\n");
    CHECK(commented.vertex_count() == 4);
    CHECK(commented.edge_count() == 2);

    CHECK_THROWS_AS(parse_edge_list("0 x"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 -1"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("0 1 2"), ParseError);
    CHECK_THROWS_AS(parse_edge_list("2 2"), LoopError);
    CHECK_THROWS_AS(parse_edge_list("n 2\n0 5"), ParseError);  // label exceeds header
    CHECK_THROWS_AS(parse_edge_list("n 2 3"), ParseError);
}

TEST_CASE("contraction") {
    Graph c4 = Graph::cycle(4);

    Graph adj = c4.contracted(0, 1);
    CHECK(adj.zero());
    CHECK(adj.vertex_count() == 3);
    // zero flag is absorbing
    CHECK(adj.with_edge(0, 1).zero());
    CHECK(adj.contracted(0, 2).zero());
    CHECK(chromatic_polynomial(adj) == IntPoly::zero());

    Graph opp = c4.contracted(0, 2);  // path centre: 3 vertices, 2 edges
    CHECK_FALSE(opp.zero());
    CHECK(opp.vertex_count() == 3);
    CHECK(opp == Graph::from_edges(3, {{0, 1}, {0, 2}}));

    Graph k2_plus = Graph::from_edges(3, {{0, 1}});
    CHECK(k2_plus.contracted(2, 1) == Graph::complete(2));

    CHECK_THROWS_AS(c4.contracted(0, 7), InvalidVertex);
    CHECK_THROWS_AS(c4.contracted(1, 1), std::invalid_argument);
}

TEST_CASE("edge addition") {
    Graph path = Graph::from_edges(3, {{0, 1}, {1, 2}});
    CHECK(path.with_edge(0, 2) == Graph::complete(3));
    CHECK(Graph::complete(3).with_edge(0, 1) == Graph::complete(3));
    CHECK(Graph::empty(2).with_edge(0, 1) == Graph::complete(2));
    CHECK_THROWS_AS(path.with_edge(0, 3), InvalidVertex);
    CHECK_THROWS_AS(path.with_edge(1, 1), LoopError);
}

TEST_CASE("chromatic polynomial closed forms") {
    CHECK(chromatic_polynomial(Graph::complete(3)) == IntPoly{0, 2, -3, 1});
    CHECK(chromatic_polynomial(Graph::cycle(4)) == IntPoly{0, -3, 6, -4, 1});
    CHECK(chromatic_polynomial(Graph::empty(0)) == IntPoly::one());
    CHECK(chromatic_polynomial(Graph::empty(5)) == IntPoly::monomial(1, 5));
    for (int n = 1; n <= 8; ++n)
        CHECK(chromatic_polynomial(Graph::complete(n)) == falling_factorial(n));
    // C_n: (q-1)^n + (-1)^n (q-1)
    for (int n = 3; n <= 9; ++n) {
        IntPoly qm1{-1, 1};
        IntPoly expected = qm1.pow(n) + (n % 2 ? -qm1 : qm1);
        CHECK(chromatic_polynomial(Graph::cycle(n)) == expected);
    }
    // disconnected: components multiply
    Graph two_triangles = Graph::from_edges(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}});
    CHECK(chromatic_polynomial(two_triangles) == falling_factorial(3) * falling_factorial(3));
}

TEST_CASE("chromatic matches brute-force counts on random graphs") {
    Rng rng(11);
    for (int trial = 0; trial < 250; ++trial) {
        Graph g = testsupport::random_graph(rng, 6, 40);
        IntPoly p = chromatic_polynomial(g);
        for (int k = 0; k <= 4; ++k)
            CHECK(p.eval(k) == BigInt(testsupport::count_colorings(g, k)));
    }
}

TEST_CASE("chromatic structural invariants") {
    Rng rng(12);
    for (int trial = 0; trial < 200; ++trial) {
        Graph g = testsupport::random_graph(rng, 7, 50);
        IntPoly p = chromatic_polynomial(g);
        const int n = g.vertex_count();
        REQUIRE(p.degree() == n);
        CHECK(p.is_monic());
        if (n >= 1) CHECK(p.coeff(0) == 0);
        for (int i = 0; i <= n; ++i) {
            // coefficients alternate in sign (some may vanish)
            const BigInt& c = p.coeff(i);
            if ((n - i) % 2 == 0)
                CHECK(c >= 0);
            else
                CHECK(c <= 0);
        }
        CHECK((p.eval(1) == 0) == (g.edge_count() > 0));
    }
}

TEST_CASE("both recursion flavours agree") {
    Rng rng(13);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = testsupport::random_graph(rng, 8, 45);
        IntPoly del_con = chromatic_polynomial(g, ChromaticStrategy::DeleteContract);
        IntPoly add_id = chromatic_polynomial(g, ChromaticStrategy::AddIdentify);
        CHECK(del_con == add_id);
        CHECK(del_con == chromatic_polynomial(g));
    }
}

TEST_CASE("contraction commutes with the colouring oracle") {
    Rng rng(14);
    for (int trial = 0; trial < 120; ++trial) {
        Graph g = testsupport::random_graph(rng, 6, 40);
        if (g.vertex_count() < 2) continue;
        int u = static_cast<int>(rng.below(g.vertex_count()));
        int v = static_cast<int>(rng.below(g.vertex_count()));
        if (u == v) continue;
        Graph c = g.contracted(u, v);
        IntPoly p = chromatic_polynomial(c);
        if (c.zero()) {
            CHECK(p == IntPoly::zero());
        } else {
            CHECK(p == testsupport::chromatic_by_interpolation(c));
        }
    }
}

TEST_CASE("interpolation oracle fixes the C4 value") {
    CHECK(testsupport::chromatic_by_interpolation(Graph::cycle(4)) == IntPoly{0, -3, 6, -4, 1});
}

TEST_CASE("petersen graph") {
    // vertex-transitive and 3-regular, so the refined partition stays coarse
    // and the canonical-labelling budget bails out at the top level
    std::vector<Graph::Edge> edges;
    for (int i = 0; i < 5; ++i) {
        edges.emplace_back(i, (i + 1) % 5);
        edges.emplace_back(5 + i, 5 + (i + 2) % 5);
        edges.emplace_back(i, i + 5);
    }
    Graph petersen = Graph::from_edges(10, edges);
    IntPoly expected{0, -704, 2606, -4305, 4275, -2861, 1353, -455, 105, -15, 1};
    CHECK(expected == falling_factorial(3) *
                          IntPoly{-352, 775, -814, 529, -230, 67, -12, 1});  // known factored form
    IntPoly p = chromatic_polynomial(petersen);
    CHECK(p == expected);
    CHECK(chromatic_polynomial(petersen, ChromaticStrategy::AddIdentify) == expected);
    for (int k = 0; k <= 3; ++k)
        CHECK(p.eval(k) == BigInt(testsupport::count_colorings(petersen, k)));
}

TEST_CASE("vertex-count boundary") {
    // 64 vertices is supported; the cycle has the closed form (q-1)^n + (q-1)
    IntPoly qm1{-1, 1};
    CHECK(chromatic_polynomial(Graph::cycle(64)) == qm1.pow(64) + qm1);
    CHECK(chromatic_polynomial(Graph::empty(100)) == IntPoly::monomial(1, 100));
    CHECK(chromatic_polynomial(Graph::complete(70)) == falling_factorial(70));

    std::vector<Graph::Edge> path;
    for (int i = 0; i + 1 < 65; ++i) path.emplace_back(i, i + 1);
    CHECK_THROWS_AS(chromatic_polynomial(Graph::from_edges(65, path)), std::invalid_argument);
}

TEST_CASE("edge-list parser survives junk input") {
    Rng rng(99);
    const char alphabet[] = "0123456789 un#-\nx";
    for (int trial = 0; trial < 5000; ++trial) {
        std::string text;
        int len = static_cast<int>(rng.below(30));
        for (int i = 0; i < len; ++i) text += alphabet[rng.below(sizeof alphabet - 1)];
        try {
            Graph g = parse_edge_list(text);
            CHECK(g.vertex_count() >= 0);
        } catch (const ParseError&) {
        } catch (const LoopError&) {
        }
    }
}
