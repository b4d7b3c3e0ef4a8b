#pragma once

#include <string>
#include <vector>

#include "chromroot/construction.hpp"
#include "chromroot/intpoly.hpp"

namespace chromroot {

/// One candidate of the edge-replacement search: the host Kme(host_n) with
/// its missing edge replaced (in parallel) by the gadget.
struct SearchTask {
    ConstructionExpr gadget = ConstructionExpr::edge();
    int host_n = 0;
    IntPoly target;
};

struct SearchHit {
    SearchTask task;
    int vertices = 0;
    IntPoly chromatic;
    IntPoly cofactor;  // chromatic = target * cofactor

    /// "host=Kme(n); gadget=<DSL>; vertices=V; P=<asc coeffs>; cofactor=<asc coeffs>"
    std::string report_line() const;
};

/// All series-parallel gadget expressions with at most max_leaves leaves,
/// one representative per class modulo associativity of both compositions
/// and commutativity of the parallel one (n-ary nodes, parallel children
/// sorted). Leaves default to the single edge; a custom pool (e.g. with
/// K(n)/Kme(n) blocks) may be supplied instead, each pool entry costing one
/// leaf. Output is ordered by leaf count and is deterministic.
std::vector<ConstructionExpr> enumerate_gadgets(
    int max_leaves, const std::vector<ConstructionExpr>& leaf_pool = {ConstructionExpr::edge()});

struct SearchOptions {
    int workers = 0;  // 0 = hardware concurrency
    std::vector<ConstructionExpr> leaf_pool = {ConstructionExpr::edge()};
};

/// Splices every enumerated gadget into every host Kme(n), n in hosts, and
/// reports the composites whose chromatic polynomial the (monic) target
/// divides. Candidates are processed by a fixed worker pool over a
/// deterministic task list and hits are sorted by (vertices, host_n, gadget
/// text), so the result does not depend on the worker count.
std::vector<SearchHit> run_search(std::vector<int> hosts, int max_leaves, const IntPoly& target,
                                  const SearchOptions& options = {});

}  // namespace chromroot
