#pragma once

#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace chromroot {

struct ParseError : std::runtime_error {
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

struct LoopError : std::runtime_error {
    explicit LoopError(const std::string& what) : std::runtime_error(what) {}
};

struct InvalidVertex : std::out_of_range {
    explicit InvalidVertex(const std::string& what) : std::out_of_range(what) {}
};

/// Finite simple labelled graph, held as an immutable value. Vertices are
/// 0..n-1 and edges are stored as a sorted set of pairs (u, v) with u < v.
///
/// zero() marks a graph whose chromatic polynomial is identically zero. It
/// arises when contraction identifies adjacent vertices (the loop is not
/// stored) and is inherited by every graph derived from such a graph.
class Graph {
   public:
    using Edge = std::pair<int, int>;

    Graph() = default;

    static Graph empty(int n);
    static Graph complete(int n);
    /// K_n minus the edge {0, 1}; requires n >= 2.
    static Graph complete_minus_edge(int n);
    static Graph cycle(int n);
    /// Validates labels, rejects loops, deduplicates.
    static Graph from_edges(int n, const std::vector<Edge>& edges);

    int vertex_count() const noexcept { return n_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }
    bool zero() const noexcept { return zero_flag_; }
    const std::vector<Edge>& edges() const noexcept { return edges_; }

    bool adjacent(int u, int v) const;
    int degree(int v) const;

    /// Copy with the edge {u, v} present (idempotent).
    Graph with_edge(int u, int v) const;

    /// Identifies u and v: parallel edges collapse, labels are compacted
    /// preserving relative order, and contracting an adjacent pair yields a
    /// graph with zero() set.
    Graph contracted(int u, int v) const;

    bool operator==(const Graph& rhs) const = default;

   private:
    int n_ = 0;
    bool zero_flag_ = false;
    std::vector<Edge> edges_;
    void check_vertex(int v) const;
};

/// Ordered terminal pair of a 2-terminal graph.
struct TerminalPair {
    int s = 0;
    int t = 1;
};

/// Edge-list text format: lines "u v" of non-negative decimal labels,
/// optional first line "n <count>", "#" comments, blank lines ignored.
Graph parse_edge_list(std::string_view text);

/// Reads a file in the edge-list format. Throws ParseError if unreadable.
Graph load_edge_list(const std::string& path);

}  // namespace chromroot
