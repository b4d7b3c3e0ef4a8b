#pragma once

#include "chromroot/graph.hpp"
#include "chromroot/intpoly.hpp"

namespace chromroot {

/// Recursion flavour. Auto applies the density rule: graphs with more than
/// half the possible edges use addition-identification (driving toward
/// complete graphs), sparser graphs use deletion-contraction (driving toward
/// edgeless graphs). The explicit flavours exist so the two recursions can be
/// cross-checked against each other.
enum class ChromaticStrategy { Auto, DeleteContract, AddIdentify };

/// Exact chromatic polynomial. Simplicial vertices are eliminated as
/// (q - deg) factors (which dissolves chordal graphs entirely), connected
/// components multiply, one-point joins split at cut vertices as
/// P(G1)*P(G2)/q, and subresults on at most 12 vertices are memoized per
/// call under a canonical relabelling, so the function is reentrant.
/// Recursion supports up to 64 vertices.
IntPoly chromatic_polynomial(const Graph& g, ChromaticStrategy strategy = ChromaticStrategy::Auto);

}  // namespace chromroot
