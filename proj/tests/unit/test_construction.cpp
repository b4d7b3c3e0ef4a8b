#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "chromroot/catalog.hpp"
#include "chromroot/construction.hpp"
#include "chromroot/search.hpp"
#include "support/test_rng.hpp"

using namespace chromroot;

namespace {

using Kind = ConstructionExpr::Kind;

}  // namespace

TEST_CASE("parsing") {
    ConstructionExpr w = parse_construction("edge*edge | edge*edge");
    REQUIRE(w.kind() == Kind::Parallel);
    REQUIRE(w.children().size() == 2);
    CHECK(w.children()[0].kind() == Kind::Series);
    CHECK(w.children()[0].children()[0].kind() == Kind::Edge);
    CHECK(w.leaf_count() == 4);

    ConstructionExpr g1 =
        parse_construction("Kme(6) | ((edge*edge|edge*edge) * (edge*edge|edge*edge))");
    REQUIRE(g1.kind() == Kind::Parallel);
    CHECK(g1.children()[0].kind() == Kind::CompleteMinusEdge);
    CHECK(g1.children()[0].order() == 6);
    CHECK(g1.children()[1].kind() == Kind::Series);

    CHECK(parse_construction("K(3)").order() == 3);
    CHECK(parse_construction(" ( edge ) ").kind() == Kind::Edge);

    // precedence: series binds tighter
    ConstructionExpr mixed = parse_construction("edge|edge*edge");
    REQUIRE(mixed.kind() == Kind::Parallel);
    CHECK(mixed.children()[1].kind() == Kind::Series);

    // left associativity
    ConstructionExpr chain = parse_construction("edge*edge*edge");
    REQUIRE(chain.kind() == Kind::Series);
    CHECK(chain.children()[0].kind() == Kind::Series);
    CHECK(chain.children()[1].kind() == Kind::Edge);
}

TEST_CASE("parse errors carry offsets") {
    CHECK_THROWS_AS(parse_construction("edge *"), SyntaxError);
    CHECK_THROWS_AS(parse_construction(""), SyntaxError);
    CHECK_THROWS_AS(parse_construction("edge edge"), SyntaxError);
    CHECK_THROWS_AS(parse_construction("(edge"), SyntaxError);
    CHECK_THROWS_AS(parse_construction("vertex"), SyntaxError);
    CHECK_THROWS_AS(parse_construction("K(x)"), SyntaxError);
    CHECK_THROWS_AS(parse_construction("K(1)"), ArityError);
    CHECK_THROWS_AS(parse_construction("Kme(0)"), ArityError);

    try {
        parse_construction("edge * | edge");
    } catch (const SyntaxError& e) {
        CHECK(e.offset == 7);
    }
}

TEST_CASE("evaluation of leaves") {
    CHECK(eval_construction(ConstructionExpr::edge()) ==
          PartitionedPoly{IntPoly::zero(), falling_factorial(2)});
    CHECK(eval_construction(ConstructionExpr::complete(4)) ==
          PartitionedPoly{IntPoly::zero(), falling_factorial(4)});
    CHECK(eval_construction(ConstructionExpr::complete_minus_edge(6)) ==
          PartitionedPoly{falling_factorial(5), falling_factorial(6)});
    // two isolated terminal vertices
    CHECK(eval_construction(ConstructionExpr::complete_minus_edge(2)) ==
          PartitionedPoly{IntPoly::variable(), falling_factorial(2)});
}

TEST_CASE("realization") {
    auto [k2, k2_tp] = realize_graph(ConstructionExpr::edge());
    CHECK(k2 == Graph::complete(2));
    CHECK(k2_tp.s == 0);
    CHECK(k2_tp.t == 1);

    auto [w, w_tp] = realize_graph(parse_construction("edge*edge|edge*edge"));
    CHECK(w.vertex_count() == 4);
    CHECK(w.edge_count() == 4);
    CHECK_FALSE(w.adjacent(w_tp.s, w_tp.t));  // C4 with opposite terminals

    auto [g1, g1_tp] = realize_graph(parse_construction(std::string(b10_witness_g1_construction())));
    CHECK(g1.vertex_count() == 11);
    CHECK(chromatic_polynomial(g1) == b10_witness_g1_chromatic());

    auto [g2, g2_tp] = realize_graph(parse_construction(std::string(b10_witness_g2_construction())));
    CHECK(g2.vertex_count() == 11);
    CHECK(chromatic_polynomial(g2) == b10_witness_g2_chromatic());
}

TEST_CASE("canonical form and ordering") {
    ConstructionExpr a = parse_construction("edge*edge|edge");
    ConstructionExpr b = parse_construction("edge|edge*edge");
    CHECK(a.canonical() == b.canonical());
    CHECK_FALSE(a.canonical() == parse_construction("edge*(edge|edge)").canonical());

    // associativity flattening
    ConstructionExpr left = parse_construction("(edge*edge)*edge");
    ConstructionExpr right = parse_construction("edge*(edge*edge)");
    CHECK(left.canonical() == right.canonical());
    CHECK(left.canonical().children().size() == 3);

    // series order is preserved
    ConstructionExpr sp = parse_construction("edge*(edge|edge)");
    ConstructionExpr ps = parse_construction("(edge|edge)*edge");
    CHECK_FALSE(sp.canonical() == ps.canonical());

    CHECK(parse_construction("edge*edge|edge*edge").to_text() == "edge*edge|edge*edge");
    CHECK(parse_construction("(edge|edge)*edge").to_text() == "(edge|edge)*edge");
    CHECK(ConstructionExpr::complete_minus_edge(6).to_text() == "Kme(6)");
}

TEST_CASE("composed evaluation equals realized chromatic computation") {
    const std::vector<ConstructionExpr> leaves = {
        ConstructionExpr::edge(), ConstructionExpr::complete_minus_edge(2),
        ConstructionExpr::complete_minus_edge(3), ConstructionExpr::complete(3)};

    auto agree = [](const ConstructionExpr& e) {
        auto [g, tp] = realize_graph(e);
        PartitionedPoly via_graph = partitioned_from_graph(g, tp);
        PartitionedPoly via_algebra = eval_construction(e);
        CHECK(via_algebra == via_graph);
        CHECK(via_algebra.total() == chromatic_polynomial(g));
    };

    // one representative per composition class: exhaustive through 4 leaves,
    // strided through the 390k classes with 5 and 6 leaves
    auto small = enumerate_gadgets(4, leaves);
    for (const auto& e : small) agree(e);
    CHECK(small.size() == 2673);

    auto big = enumerate_gadgets(6, leaves);
    int sampled = 0;
    for (std::size_t i = small.size(); i < big.size(); i += 331) {
        agree(big[i]);
        ++sampled;
    }
    CHECK(sampled >= 1000);
}

TEST_CASE("parser survives junk input") {
    testsupport::Rng rng(4242);
    const char alphabet[] = "edgKm()*| 0123456789";
    for (int trial = 0; trial < 10000; ++trial) {
        std::string text;
        int len = static_cast<int>(rng.below(24));
        for (int i = 0; i < len; ++i) text += alphabet[rng.below(sizeof alphabet - 1)];
        try {
            ConstructionExpr e = parse_construction(text);
            CHECK(e.leaf_count() >= 1);  // parsed: must be a sane tree
        } catch (const SyntaxError& err) {
            CHECK(err.offset <= text.size());
        } catch (const ArityError&) {
        }
    }
}

TEST_CASE("deeper mixed expressions agree with realization") {
    for (const char* text : {
             "(edge*edge|edge*edge)*(edge*edge|edge*edge)",
             "Kme(3)*K(3)|edge*edge*edge",
             "edge*(Kme(2)|edge*edge)*edge",
             "K(4)|edge*Kme(3)*edge",
             "Kme(2)*Kme(2)|edge*edge|edge*K(3)",
         }) {
        ConstructionExpr e = parse_construction(text);
        auto [g, tp] = realize_graph(e);
        CHECK(eval_construction(e) == partitioned_from_graph(g, tp));
    }
}
