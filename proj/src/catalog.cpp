#include "chromroot/catalog.hpp"

namespace chromroot {

namespace {

constexpr std::string_view kG1EdgeList = R"(# K6 on 0..5 minus {2,3}; the gadget joins 2 and 3 through centre 6
# via the 4-cycles 2-7-6-8-2 and 3-9-6-10-3.
n 11
0 1
0 2
0 3
0 4
0 5
1 2
1 3
1 4
1 5
2 4
2 5
3 4
3 5
4 5
2 7
7 6
2 8
8 6
3 9
9 6
3 10
10 6
)";

constexpr std::string_view kG2EdgeList = R"(# K5 on 0..4 minus {3,4}; 5,6,7 attach to 3 and 8,9,10 to 4,
# cross-linked so the gadget is two C4s each extended by an edge, in parallel.
n 11
0 1
0 2
0 3
0 4
1 2
1 3
1 4
2 3
2 4
3 5
3 6
3 7
4 8
4 9
4 10
10 5
10 6
7 8
7 9
)";

constexpr std::string_view kG1Construction =
    "Kme(6) | ((edge*edge|edge*edge) * (edge*edge|edge*edge))";
constexpr std::string_view kG2Construction =
    "Kme(5) | (edge*edge|edge*edge)*edge | edge*(edge*edge|edge*edge)";

IntPoly product(std::initializer_list<IntPoly> factors) {
    IntPoly p = IntPoly::one();
    for (const auto& f : factors) p = p * f;
    return p;
}

}  // namespace

Graph k4() { return Graph::complete(4); }

Graph c4() { return Graph::cycle(4); }

Graph octahedron() {
    std::vector<Graph::Edge> edges;
    for (int u = 0; u < 6; ++u)
        for (int v = u + 1; v < 6; ++v)
            if (!(v == u + 1 && u % 2 == 0)) edges.emplace_back(u, v);
    return Graph::from_edges(6, edges);
}

Graph b10_witness_g1() { return parse_edge_list(kG1EdgeList); }
Graph b10_witness_g2() { return parse_edge_list(kG2EdgeList); }

std::string_view b10_witness_g1_edge_list() { return kG1EdgeList; }
std::string_view b10_witness_g2_edge_list() { return kG2EdgeList; }

std::string_view b10_witness_g1_construction() { return kG1Construction; }
std::string_view b10_witness_g2_construction() { return kG2Construction; }

IntPoly b10_witness_g1_chromatic() {
    return product({falling_factorial(4), IntPoly{-3, 1}, IntPoly{-4, 1}, IntPoly{5, -5, 1},
                    IntPoly{-7, 8, -4, 1}});
}

IntPoly b10_witness_g2_chromatic() {
    return product({falling_factorial(4), IntPoly{5, -5, 1}, IntPoly{-36, 73, -63, 30, -8, 1}});
}

}  // namespace chromroot
