#pragma once

#include <string_view>

#include "chromroot/graph.hpp"
#include "chromroot/intpoly.hpp"

namespace chromroot {

/// Built-in graphs used by the verification pipeline and as witnesses, with
/// closed forms of their chromatic polynomials where known.

Graph k4();
Graph c4();
/// K_{2,2,2}: 6 vertices, 12 edges, the smallest 4-regular triangulation.
Graph octahedron();

/// 11-vertex graph with B_10 as a chromatic root: K_6 minus an edge, the
/// removed edge replaced by two C_4s in series between the former endpoints.
Graph b10_witness_g1();
/// 11-vertex companion on a K_5 host with a 10-edge gadget.
Graph b10_witness_g2();

/// Embedded edge-list sources of the two witnesses (the exact text the
/// catalogue parses; also useful as CLI fixtures).
std::string_view b10_witness_g1_edge_list();
std::string_view b10_witness_g2_edge_list();

/// Construction-DSL expressions realizing the witnesses.
std::string_view b10_witness_g1_construction();
std::string_view b10_witness_g2_construction();

/// Known factored chromatic polynomials of the witnesses, expanded:
/// P_G1 = q(q-1)(q-2)(q-3)^2(q-4) (q^2-5q+5) (q^3-4q^2+8q-7)
/// P_G2 = q(q-1)(q-2)(q-3) (q^2-5q+5) (q^5-8q^4+30q^3-63q^2+73q-36)
IntPoly b10_witness_g1_chromatic();
IntPoly b10_witness_g2_chromatic();

}  // namespace chromroot
