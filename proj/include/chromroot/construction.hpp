#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "chromroot/graph.hpp"
#include "chromroot/two_terminal.hpp"

namespace chromroot {

struct SyntaxError : std::runtime_error {
    SyntaxError(std::size_t offset_, const std::string& what)
        : std::runtime_error("syntax error at offset " + std::to_string(offset_) + ": " + what),
          offset(offset_) {}
    std::size_t offset;
};

struct ArityError : std::runtime_error {
    explicit ArityError(const std::string& what) : std::runtime_error(what) {}
};

/// Expression tree over the 2-terminal building blocks. Leaves are a single
/// edge, K(n) with two adjacent terminals, or Kme(n) = K_n minus an edge with
/// the removed edge's ends as terminals. Inner nodes compose in series (the
/// left t is identified with the right s) or in parallel (terminals are
/// identified pairwise). The parser emits binary nodes; nodes with more
/// children arise from canonical flattening.
class ConstructionExpr {
   public:
    enum class Kind { Edge, Complete, CompleteMinusEdge, Series, Parallel };

    static ConstructionExpr edge() { return ConstructionExpr(Kind::Edge, 0, {}); }
    static ConstructionExpr complete(int n);
    static ConstructionExpr complete_minus_edge(int n);
    static ConstructionExpr series(std::vector<ConstructionExpr> children);
    static ConstructionExpr parallel(std::vector<ConstructionExpr> children);

    Kind kind() const { return kind_; }
    bool is_leaf() const { return kind_ != Kind::Series && kind_ != Kind::Parallel; }
    /// Order of a K(n)/Kme(n) leaf; 0 for other nodes.
    int order() const { return order_; }
    const std::vector<ConstructionExpr>& children() const { return children_; }

    int leaf_count() const;
    /// Vertices of the realized graph (series glues one vertex per joint,
    /// parallel glues two).
    int realized_vertex_count() const;

    /// DSL text, `*` for series and `|` for parallel with series binding
    /// tighter. Reparsing gives the same expression up to canonical().
    std::string to_text() const;

    /// Flattens nested series/parallel chains into n-ary nodes and sorts
    /// parallel children (parallel connection is commutative; series order is
    /// preserved). Two expressions denote the same composition pipeline
    /// modulo associativity and parallel commutativity iff their canonical
    /// forms are equal.
    ConstructionExpr canonical() const;

    /// Total order: leaf count, then node kind, then K/Kme order, then
    /// children lexicographically. Returns <0, 0 or >0.
    static int compare(const ConstructionExpr& a, const ConstructionExpr& b);

    bool operator==(const ConstructionExpr& rhs) const { return compare(*this, rhs) == 0; }

   private:
    ConstructionExpr(Kind kind, int order, std::vector<ConstructionExpr> children)
        : kind_(kind), order_(order), children_(std::move(children)) {}
    Kind kind_;
    int order_;
    std::vector<ConstructionExpr> children_;
};

/// Grammar: expr := par ; par := ser { "|" ser } ; ser := atom { "*" atom } ;
/// atom := "edge" | "K(" INT ")" | "Kme(" INT ")" | "(" expr ")" with INT >= 2
/// and insignificant whitespace. Throws SyntaxError with the byte offset of
/// the offending token, or ArityError for INT < 2.
ConstructionExpr parse_construction(std::string_view text);

/// Folds the tree in the partitioned-polynomial algebra:
/// edge -> [0, (q)_2], K(n) -> [0, (q)_n], Kme(n) -> [(q)_{n-1}, (q)_n].
PartitionedPoly eval_construction(const ConstructionExpr& e);

/// Builds the concrete 2-terminal graph by actual vertex identification.
/// Vertices are labelled in left-to-right construction order.
std::pair<Graph, TerminalPair> realize_graph(const ConstructionExpr& e);

}  // namespace chromroot
