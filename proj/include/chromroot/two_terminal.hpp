#pragma once

#include "chromroot/chromatic.hpp"
#include "chromroot/graph.hpp"
#include "chromroot/intpoly.hpp"

namespace chromroot {

/// Chromatic polynomial of a 2-terminal graph split by terminal colouring:
/// same counts the colourings giving both terminals one colour, diff the
/// rest, so same + diff = P_G. Equivalently same = P_{G/st} and
/// diff = P_{G+st}. For any 2-terminal graph q divides same and q(q-1)
/// divides diff, which is what makes the composition formulas exact.
struct PartitionedPoly {
    IntPoly same;
    IntPoly diff;

    IntPoly total() const { return same + diff; }
    bool operator==(const PartitionedPoly&) const = default;
};

/// [P_{G/st}, P_{G+st}] for a concrete graph with terminals tp.
PartitionedPoly partitioned_from_graph(const Graph& g, TerminalPair tp);

/// Parallel connection (terminals identified pairwise):
/// S = S_a S_b / q, D = D_a D_b / (q(q-1)).
PartitionedPoly parallel_compose(const PartitionedPoly& a, const PartitionedPoly& b);

/// Series connection (t of a identified with s of b):
/// S = S_a S_b / q + D_a D_b / (q(q-1)),
/// D = (q-2) D_a D_b / (q(q-1)) + D_a S_b / q + S_a D_b / q.
PartitionedPoly series_compose(const PartitionedPoly& a, const PartitionedPoly& b);

}  // namespace chromroot
