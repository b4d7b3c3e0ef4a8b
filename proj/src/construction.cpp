#include "chromroot/construction.hpp"

#include <algorithm>
#include <cctype>

namespace chromroot {

ConstructionExpr ConstructionExpr::complete(int n) {
    if (n < 2) throw ArityError("K(n) requires n >= 2");
    return ConstructionExpr(Kind::Complete, n, {});
}

ConstructionExpr ConstructionExpr::complete_minus_edge(int n) {
    if (n < 2) throw ArityError("Kme(n) requires n >= 2");
    return ConstructionExpr(Kind::CompleteMinusEdge, n, {});
}

ConstructionExpr ConstructionExpr::series(std::vector<ConstructionExpr> children) {
    if (children.size() < 2) throw std::invalid_argument("series node needs >= 2 children");
    return ConstructionExpr(Kind::Series, 0, std::move(children));
}

ConstructionExpr ConstructionExpr::parallel(std::vector<ConstructionExpr> children) {
    if (children.size() < 2) throw std::invalid_argument("parallel node needs >= 2 children");
    return ConstructionExpr(Kind::Parallel, 0, std::move(children));
}

int ConstructionExpr::leaf_count() const {
    if (is_leaf()) return 1;
    int total = 0;
    for (const auto& c : children_) total += c.leaf_count();
    return total;
}

int ConstructionExpr::realized_vertex_count() const {
    switch (kind_) {
        case Kind::Edge:
            return 2;
        case Kind::Complete:
        case Kind::CompleteMinusEdge:
            return order_;
        default:
            break;
    }
    int total = 0;
    for (const auto& c : children_) total += c.realized_vertex_count();
    int joints = static_cast<int>(children_.size()) - 1;
    return total - joints * (kind_ == Kind::Series ? 1 : 2);
}

std::string ConstructionExpr::to_text() const {
    switch (kind_) {
        case Kind::Edge:
            return "edge";
        case Kind::Complete:
            return "K(" + std::to_string(order_) + ")";
        case Kind::CompleteMinusEdge:
            return "Kme(" + std::to_string(order_) + ")";
        case Kind::Series: {
            std::string out;
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) out += '*';
                const auto& c = children_[i];
                bool parens = c.kind() == Kind::Parallel;
                if (parens) out += '(';
                out += c.to_text();
                if (parens) out += ')';
            }
            return out;
        }
        case Kind::Parallel: {
            std::string out;
            for (std::size_t i = 0; i < children_.size(); ++i) {
                if (i) out += '|';
                out += children_[i].to_text();
            }
            return out;
        }
    }
    return {};
}

ConstructionExpr ConstructionExpr::canonical() const {
    if (is_leaf()) return *this;
    std::vector<ConstructionExpr> flat;
    for (const auto& c : children_) {
        ConstructionExpr cc = c.canonical();
        if (cc.kind() == kind_) {
            for (auto& gc : cc.children_) flat.push_back(std::move(gc));
        } else {
            flat.push_back(std::move(cc));
        }
    }
    if (kind_ == Kind::Parallel)
        std::stable_sort(flat.begin(), flat.end(),
                         [](const auto& a, const auto& b) { return compare(a, b) < 0; });
    return ConstructionExpr(kind_, 0, std::move(flat));
}

int ConstructionExpr::compare(const ConstructionExpr& a, const ConstructionExpr& b) {
    if (int d = a.leaf_count() - b.leaf_count(); d != 0) return d;
    if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) - static_cast<int>(b.kind_);
    if (a.order_ != b.order_) return a.order_ - b.order_;
    const std::size_t common = std::min(a.children_.size(), b.children_.size());
    for (std::size_t i = 0; i < common; ++i)
        if (int d = compare(a.children_[i], b.children_[i]); d != 0) return d;
    return static_cast<int>(a.children_.size()) - static_cast<int>(b.children_.size());
}

namespace {

class Parser {
   public:
    explicit Parser(std::string_view text) : text_(text) {}

    ConstructionExpr parse() {
        ConstructionExpr e = parse_parallel();
        skip_ws();
        if (pos_ != text_.size()) throw SyntaxError(pos_, "unexpected trailing input");
        return e;
    }

   private:
    std::string_view text_;
    std::size_t pos_ = 0;

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    bool eat(char c) {
        skip_ws();
        if (pos_ < text_.size() && text_[pos_] == c) {
            ++pos_;
            return true;
        }
        return false;
    }

    ConstructionExpr parse_parallel() {
        ConstructionExpr e = parse_series();
        while (eat('|')) e = ConstructionExpr::parallel({std::move(e), parse_series()});
        return e;
    }

    ConstructionExpr parse_series() {
        ConstructionExpr e = parse_atom();
        while (eat('*')) e = ConstructionExpr::series({std::move(e), parse_atom()});
        return e;
    }

    int parse_order() {
        if (!eat('(')) throw SyntaxError(pos_, "expected '('");
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) throw SyntaxError(start, "expected an integer");
        if (pos_ - start > 6) throw ArityError("order out of range");
        int n = std::stoi(std::string(text_.substr(start, pos_ - start)));
        if (n < 2) throw ArityError("order must be >= 2, got " + std::to_string(n));
        if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
        return n;
    }

    ConstructionExpr parse_atom() {
        skip_ws();
        if (pos_ >= text_.size()) throw SyntaxError(pos_, "unexpected end of input");
        if (eat('(')) {
            ConstructionExpr e = parse_parallel();
            if (!eat(')')) throw SyntaxError(pos_, "expected ')'");
            return e;
        }
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        std::string_view word = text_.substr(start, pos_ - start);
        if (word == "edge") return ConstructionExpr::edge();
        if (word == "K") return ConstructionExpr::complete(parse_order());
        if (word == "Kme") return ConstructionExpr::complete_minus_edge(parse_order());
        throw SyntaxError(start, word.empty() ? "expected an atom"
                                              : "unknown atom '" + std::string(word) + "'");
    }
};

PartitionedPoly leaf_value(const ConstructionExpr& e) {
    switch (e.kind()) {
        case ConstructionExpr::Kind::Edge:
            return {IntPoly::zero(), falling_factorial(2)};
        case ConstructionExpr::Kind::Complete:
            return {IntPoly::zero(), falling_factorial(e.order())};
        case ConstructionExpr::Kind::CompleteMinusEdge:
            return {falling_factorial(e.order() - 1), falling_factorial(e.order())};
        default:
            throw std::logic_error("leaf_value on inner node");
    }
}

struct Realized {
    std::vector<Graph::Edge> edges;
    int n = 0;
    int s = 0;
    int t = 0;
};

Realized realize_rec(const ConstructionExpr& e) {
    switch (e.kind()) {
        case ConstructionExpr::Kind::Edge:
            return {{{0, 1}}, 2, 0, 1};
        case ConstructionExpr::Kind::Complete:
        case ConstructionExpr::Kind::CompleteMinusEdge: {
            Realized r;
            r.n = e.order();
            r.s = 0;
            r.t = 1;
            bool skip01 = e.kind() == ConstructionExpr::Kind::CompleteMinusEdge;
            for (int u = 0; u < r.n; ++u)
                for (int v = u + 1; v < r.n; ++v)
                    if (!(skip01 && u == 0 && v == 1)) r.edges.emplace_back(u, v);
            return r;
        }
        default:
            break;
    }
    bool series = e.kind() == ConstructionExpr::Kind::Series;
    Realized acc = realize_rec(e.children().front());
    for (std::size_t i = 1; i < e.children().size(); ++i) {
        Realized rhs = realize_rec(e.children()[i]);
        // Map rhs labels into acc: merged vertices keep acc's label, the rest
        // are appended in rhs label order.
        std::vector<int> map(rhs.n, -1);
        if (series) {
            map[rhs.s] = acc.t;
        } else {
            map[rhs.s] = acc.s;
            map[rhs.t] = acc.t;
        }
        int next = acc.n;
        for (int v = 0; v < rhs.n; ++v)
            if (map[v] < 0) map[v] = next++;
        for (auto [u, v] : rhs.edges) acc.edges.emplace_back(map[u], map[v]);
        acc.n = next;
        if (series) acc.t = map[rhs.t];
    }
    return acc;
}

}  // namespace

ConstructionExpr parse_construction(std::string_view text) { return Parser(text).parse(); }

PartitionedPoly eval_construction(const ConstructionExpr& e) {
    if (e.is_leaf()) return leaf_value(e);
    PartitionedPoly acc = eval_construction(e.children().front());
    for (std::size_t i = 1; i < e.children().size(); ++i) {
        PartitionedPoly rhs = eval_construction(e.children()[i]);
        acc = e.kind() == ConstructionExpr::Kind::Series ? series_compose(acc, rhs)
                                                         : parallel_compose(acc, rhs);
    }
    return acc;
}

std::pair<Graph, TerminalPair> realize_graph(const ConstructionExpr& e) {
    Realized r = realize_rec(e);
    return {Graph::from_edges(r.n, r.edges), TerminalPair{r.s, r.t}};
}

}  // namespace chromroot
