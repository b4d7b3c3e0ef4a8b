#include "chromroot/two_terminal.hpp"

namespace chromroot {

namespace {

const IntPoly& poly_q() {
    static const IntPoly q = IntPoly::variable();
    return q;
}

const IntPoly& poly_q_qm1() {
    static const IntPoly p = IntPoly{0, -1, 1};  // q(q-1)
    return p;
}

}  // namespace

PartitionedPoly partitioned_from_graph(const Graph& g, TerminalPair tp) {
    if (tp.s == tp.t) throw InvalidVertex("terminals must be distinct");
    return {chromatic_polynomial(g.contracted(tp.s, tp.t)),
            chromatic_polynomial(g.with_edge(tp.s, tp.t))};
}

PartitionedPoly parallel_compose(const PartitionedPoly& a, const PartitionedPoly& b) {
    return {exact_div(a.same * b.same, poly_q()), exact_div(a.diff * b.diff, poly_q_qm1())};
}

PartitionedPoly series_compose(const PartitionedPoly& a, const PartitionedPoly& b) {
    IntPoly dd_over = exact_div(a.diff * b.diff, poly_q_qm1());
    IntPoly same = exact_div(a.same * b.same, poly_q()) + dd_over;
    IntPoly diff = IntPoly{-2, 1} * dd_over + exact_div(a.diff * b.same, poly_q()) +
                   exact_div(a.same * b.diff, poly_q());
    return {std::move(same), std::move(diff)};
}

}  // namespace chromroot
