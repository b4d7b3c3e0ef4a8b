#include "chromroot/graph.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace chromroot {

void Graph::check_vertex(int v) const {
    if (v < 0 || v >= n_)
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range [0, " +
                            std::to_string(n_) + ")");
}

Graph Graph::empty(int n) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    Graph g;
    g.n_ = n;
    return g;
}

Graph Graph::complete(int n) {
    Graph g = empty(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) g.edges_.emplace_back(u, v);
    return g;
}

Graph Graph::complete_minus_edge(int n) {
    if (n < 2) throw std::invalid_argument("complete_minus_edge: need n >= 2");
    Graph g = complete(n);
    g.edges_.erase(g.edges_.begin());  // {0, 1} sorts first
    return g;
}

Graph Graph::cycle(int n) {
    if (n < 3) throw std::invalid_argument("cycle: need n >= 3");
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) edges.emplace_back(std::min(i, (i + 1) % n), std::max(i, (i + 1) % n));
    return from_edges(n, edges);
}

Graph Graph::from_edges(int n, const std::vector<Edge>& edges) {
    Graph g = empty(n);
    g.edges_.reserve(edges.size());
    for (auto [u, v] : edges) {
        if (u == v) throw LoopError("loop at vertex " + std::to_string(u));
        g.check_vertex(u);
        g.check_vertex(v);
        g.edges_.emplace_back(std::min(u, v), std::max(u, v));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

bool Graph::adjacent(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) return false;
    Edge e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

int Graph::degree(int v) const {
    check_vertex(v);
    int d = 0;
    for (auto [a, b] : edges_)
        if (a == v || b == v) ++d;
    return d;
}

Graph Graph::with_edge(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw LoopError("cannot add a loop at vertex " + std::to_string(u));
    Graph g(*this);
    Edge e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(g.edges_.begin(), g.edges_.end(), e);
    if (it == g.edges_.end() || *it != e) g.edges_.insert(it, e);
    return g;
}

Graph Graph::contracted(int u, int v) const {
    check_vertex(u);
    check_vertex(v);
    if (u == v) throw std::invalid_argument("contracted: vertices must differ");
    Graph g = empty(n_ - 1);
    g.zero_flag_ = zero_flag_ || adjacent(u, v);
    // v merges into u; labels above v shift down by one.
    auto relabel = [&](int w) {
        if (w == v) w = u;
        return w > v ? w - 1 : w;
    };
    for (auto [a, b] : edges_) {
        int x = relabel(a), y = relabel(b);
        if (x == y) continue;  // the contracted edge itself
        g.edges_.emplace_back(std::min(x, y), std::max(x, y));
    }
    std::sort(g.edges_.begin(), g.edges_.end());
    g.edges_.erase(std::unique(g.edges_.begin(), g.edges_.end()), g.edges_.end());
    return g;
}

namespace {

bool parse_label(const std::string& tok, int line_no, int* out) {
    if (tok.empty()) return false;
    for (char c : tok)
        if (!std::isdigit(static_cast<unsigned char>(c))) return false;
    if (tok.size() > 7) throw ParseError("line " + std::to_string(line_no) + ": label too large");
    *out = std::stoi(tok);
    return true;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    std::istringstream in{std::string(text)};
    std::string line;
    int line_no = 0;
    bool saw_content = false;
    int declared_n = -1;
    int max_label = -1;
    std::vector<Graph::Edge> edges;

    while (std::getline(in, line)) {
        ++line_no;
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string a, b, extra;
        if (!(ls >> a)) continue;  // blank
        if (!saw_content && a == "n") {
            saw_content = true;
            if (!(ls >> b) || (ls >> extra))
                throw ParseError("line " + std::to_string(line_no) + ": malformed header");
            if (!parse_label(b, line_no, &declared_n))
                throw ParseError("line " + std::to_string(line_no) + ": bad vertex count '" + b + "'");
            continue;
        }
        saw_content = true;
        if (!(ls >> b) || (ls >> extra))
            throw ParseError("line " + std::to_string(line_no) + ": expected 'u v'");
        int u, v;
        if (!parse_label(a, line_no, &u))
            throw ParseError("line " + std::to_string(line_no) + ": bad label '" + a + "'");
        if (!parse_label(b, line_no, &v))
            throw ParseError("line " + std::to_string(line_no) + ": bad label '" + b + "'");
        if (u == v) throw LoopError("line " + std::to_string(line_no) + ": loop at " + a);
        max_label = std::max({max_label, u, v});
        edges.emplace_back(u, v);
    }

    int n = declared_n >= 0 ? declared_n : max_label + 1;
    if (max_label >= n)
        throw ParseError("edge label " + std::to_string(max_label) +
                         " exceeds declared vertex count " + std::to_string(n));
    return Graph::from_edges(n, edges);
}

Graph load_edge_list(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw ParseError("cannot open '" + path + "'");
    std::ostringstream buf;
    buf << f.rdbuf();
    return parse_edge_list(buf.str());
}

}  // namespace chromroot
