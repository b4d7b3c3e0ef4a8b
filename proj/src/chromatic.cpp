#include "chromroot/chromatic.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <vector>

namespace chromroot {

namespace {

constexpr int kMaxVertices = 64;
constexpr int kMemoMaxVertices = 12;
constexpr std::uint64_t kMaxLabelings = 40320;  // 8!

// Active-set view of a graph: vertex i is live iff bit i of verts is set,
// adjacency rows are bitmasks. Rows of dead vertices are stale and ignored.
struct Work {
    std::uint64_t verts = 0;
    std::vector<std::uint64_t> adj;

    int active_count() const { return std::popcount(verts); }
    int degree(int v) const { return std::popcount(adj[v] & verts); }

    int edge_total() const {
        int m = 0;
        for (std::uint64_t rest = verts; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            m += degree(v);
        }
        return m / 2;
    }

    void remove(int v) { verts &= ~(1ULL << v); }

    void add_edge(int u, int v) {
        adj[u] |= 1ULL << v;
        adj[v] |= 1ULL << u;
    }

    // Merge v into u. Parallel edges collapse automatically in the bitmask
    // representation; callers never merge adjacent pairs here.
    void contract(int u, int v) {
        adj[u] |= adj[v];
        for (std::uint64_t rest = adj[v] & verts; rest;) {
            int w = std::countr_zero(rest);
            rest &= rest - 1;
            adj[w] = (adj[w] & ~(1ULL << v)) | (1ULL << u);
        }
        adj[u] &= ~((1ULL << u) | (1ULL << v));
        remove(v);
    }

    std::uint64_t component_of(int start) const {
        std::uint64_t seen = 1ULL << start, frontier = seen;
        while (frontier) {
            std::uint64_t next = 0;
            for (std::uint64_t rest = frontier; rest;) {
                int v = std::countr_zero(rest);
                rest &= rest - 1;
                next |= adj[v] & verts & ~seen;
            }
            seen |= next;
            frontier = next;
        }
        return seen;
    }
};

// Canonical key of an active subgraph: vertex count plus the lexicographically
// smallest edge bitset over all labelings that respect the refined degree
// partition. The memo cutoff keeps C(k,2) <= 66 edge bits, spread over two
// 64-bit words.
struct CanonKey {
    std::array<std::uint64_t, 2> w{0, 0};
    bool operator==(const CanonKey&) const = default;
};

struct CanonKeyHash {
    std::size_t operator()(const CanonKey& k) const {
        std::uint64_t h = k.w[0] * 0x9E3779B97F4A7C15ULL;
        h ^= k.w[1] + 0x9E3779B97F4A7C15ULL + (h << 6) + (h >> 2);
        return static_cast<std::size_t>(h);
    }
};

using Memo = std::unordered_map<CanonKey, IntPoly, CanonKeyHash>;

// Iterated neighbourhood-colour refinement starting from degrees. Colour ids
// are ranks of sorted signatures, so they are independent of vertex labels.
std::vector<int> refine_colors(const std::vector<std::uint32_t>& rows, int k) {
    std::vector<int> color(k);
    for (int v = 0; v < k; ++v) color[v] = std::popcount(rows[v]);
    for (int round = 0; round < k; ++round) {
        std::vector<std::pair<std::vector<int>, int>> sig(k);
        for (int v = 0; v < k; ++v) {
            std::vector<int> s{color[v]};
            for (int u = 0; u < k; ++u)
                if (rows[v] & (1u << u)) s.push_back(color[u]);
            std::sort(s.begin() + 1, s.end());
            sig[v] = {std::move(s), v};
        }
        std::sort(sig.begin(), sig.end());
        std::vector<int> next(k);
        int classes = 0;
        for (int i = 0; i < k; ++i) {
            if (i > 0 && sig[i].first != sig[i - 1].first) ++classes;
            next[sig[i].second] = classes;
        }
        bool stable = std::equal(next.begin(), next.end(), color.begin());
        color = std::move(next);
        if (stable) break;
    }
    return color;
}

std::optional<CanonKey> canonical_key(const Work& g) {
    const int k = g.active_count();
    if (k > kMemoMaxVertices) return std::nullopt;

    std::vector<int> vertex_of;
    vertex_of.reserve(k);
    std::vector<int> index(kMaxVertices, -1);
    for (std::uint64_t rest = g.verts; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        index[v] = static_cast<int>(vertex_of.size());
        vertex_of.push_back(v);
    }
    std::vector<std::uint32_t> rows(k, 0);
    for (int i = 0; i < k; ++i)
        for (std::uint64_t rest = g.adj[vertex_of[i]] & g.verts; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            rows[i] |= 1u << index[v];
        }

    std::vector<int> color = refine_colors(rows, k);
    int num_classes = *std::max_element(color.begin(), color.end()) + 1;
    std::vector<std::vector<int>> classes(num_classes);
    for (int v = 0; v < k; ++v) classes[color[v]].push_back(v);

    std::uint64_t labelings = 1;
    for (const auto& cls : classes) {
        for (std::size_t i = 2; i <= cls.size(); ++i) {
            labelings *= i;
            if (labelings > kMaxLabelings) return std::nullopt;
        }
        if (labelings > kMaxLabelings) return std::nullopt;
    }

    // position[v] = slot of vertex v under the current within-class ordering
    auto build = [&](CanonKey* out) {
        std::vector<int> position(k);
        int slot = 0;
        for (const auto& cls : classes)
            for (int v : cls) position[v] = slot++;
        std::array<std::uint64_t, 2> w{0, 0};
        const int bit = 12;  // low 12 bits of w[0] hold the vertex count
        for (int v = 0; v < k; ++v) {
            int i = position[v];
            for (int u = v + 1; u < k; ++u)
                if (rows[v] & (1u << u)) {
                    int j = position[u];
                    int a = std::min(i, j), b = std::max(i, j);
                    int e = bit + a * (2 * k - a - 1) / 2 + (b - a - 1);
                    w[e >> 6] |= 1ULL << (e & 63);
                }
        }
        out->w = w;
        out->w[0] |= static_cast<std::uint64_t>(k);
    };

    CanonKey best;
    bool have = false;
    while (true) {
        CanonKey cand;
        build(&cand);
        if (!have || cand.w < best.w) {
            best = cand;
            have = true;
        }
        // odometer over within-class permutations
        int c = num_classes - 1;
        while (c >= 0 && !std::next_permutation(classes[c].begin(), classes[c].end())) --c;
        if (c < 0) break;
    }
    return best;
}

// One component of g minus v (v excluded), or 0 if g minus v stays connected.
// g must be connected with at least 3 active vertices.
std::uint64_t articulation_side(const Work& g, int v) {
    Work h = g;
    h.remove(v);
    int first = std::countr_zero(h.verts);
    std::uint64_t comp = h.component_of(first);
    return comp == h.verts ? 0 : comp;
}

IntPoly chrom_rec(Work g, Memo& memo, ChromaticStrategy strategy);

IntPoly chrom_connected(Work& g, Memo& memo, ChromaticStrategy strategy) {
    const int k = g.active_count();
    const int m = g.edge_total();
    if (2 * m == k * (k - 1)) return falling_factorial(k);

    // one-point join: P(G) = P(side + v) * P(rest + v) / q
    for (std::uint64_t rest = g.verts; rest;) {
        int v = std::countr_zero(rest);
        rest &= rest - 1;
        std::uint64_t side = articulation_side(g, v);
        if (side) {
            Work g1 = g, g2 = g;
            g1.verts = side | (1ULL << v);
            g2.verts = (g.verts & ~side);
            return exact_div(chrom_rec(std::move(g1), memo, strategy) *
                                 chrom_rec(std::move(g2), memo, strategy),
                             IntPoly::variable());
        }
    }

    std::optional<CanonKey> key = canonical_key(g);
    if (key) {
        auto it = memo.find(*key);
        if (it != memo.end()) return it->second;
    }

    bool dense = strategy == ChromaticStrategy::AddIdentify ||
                 (strategy == ChromaticStrategy::Auto && 4 * m > k * (k - 1));

    // Pick the pair with the most common neighbours: for contraction this
    // merges the most parallel edges, for addition it closes in on K_k.
    int best_u = -1, best_v = -1, best_common = -1;
    for (std::uint64_t ru = g.verts; ru;) {
        int u = std::countr_zero(ru);
        ru &= ru - 1;
        for (std::uint64_t rv = ru; rv;) {
            int v = std::countr_zero(rv);
            rv &= rv - 1;
            bool adj = (g.adj[u] >> v) & 1;
            if (dense == adj) continue;
            int common = std::popcount(g.adj[u] & g.adj[v] & g.verts);
            if (common > best_common) {
                best_common = common;
                best_u = u;
                best_v = v;
            }
        }
    }

    IntPoly result;
    Work contracted = g;
    contracted.contract(best_u, best_v);
    if (dense) {
        Work added = g;
        added.add_edge(best_u, best_v);
        result = chrom_rec(std::move(added), memo, strategy) +
                 chrom_rec(std::move(contracted), memo, strategy);
    } else {
        Work deleted = g;
        deleted.adj[best_u] &= ~(1ULL << best_v);
        deleted.adj[best_v] &= ~(1ULL << best_u);
        result = chrom_rec(std::move(deleted), memo, strategy) -
                 chrom_rec(std::move(contracted), memo, strategy);
    }
    if (key) memo.emplace(*key, result);
    return result;
}

IntPoly chrom_rec(Work g, Memo& memo, ChromaticStrategy strategy) {
    // Simplicial elimination: a vertex whose neighbourhood is a clique can be
    // coloured last with q - deg choices. Covers isolated and pendant
    // vertices and unwinds chordal graphs (e.g. stacked triangulations)
    // completely.
    std::vector<int> eliminated_degrees;
    bool changed = true;
    while (changed) {
        changed = false;
        for (std::uint64_t rest = g.verts; rest;) {
            int v = std::countr_zero(rest);
            rest &= rest - 1;
            std::uint64_t nv = g.adj[v] & g.verts;
            bool simplicial = true;
            for (std::uint64_t nb = nv; simplicial && nb;) {
                int w = std::countr_zero(nb);
                nb &= nb - 1;
                simplicial = (nv & ~(1ULL << w) & ~g.adj[w]) == 0;
            }
            if (simplicial) {
                eliminated_degrees.push_back(std::popcount(nv));
                g.remove(v);
                changed = true;
            }
        }
    }
    IntPoly factor = IntPoly::one();
    for (int d : eliminated_degrees) factor = factor * IntPoly{-static_cast<long>(d), 1};

    if (g.verts == 0) return factor;
    std::uint64_t comp = g.component_of(std::countr_zero(g.verts));
    if (comp != g.verts) {
        Work g1 = g, g2 = g;
        g1.verts = comp;
        g2.verts = g.verts & ~comp;
        return factor * chrom_rec(std::move(g1), memo, strategy) *
               chrom_rec(std::move(g2), memo, strategy);
    }
    return factor * chrom_connected(g, memo, strategy);
}

}  // namespace

IntPoly chromatic_polynomial(const Graph& g, ChromaticStrategy strategy) {
    if (g.zero()) return IntPoly::zero();
    const int n = g.vertex_count();
    if (n == 0) return IntPoly::one();
    if (g.edge_count() == 0) return IntPoly::variable().pow(n);
    if (2LL * g.edge_count() == 1LL * n * (n - 1)) return falling_factorial(n);
    if (n > kMaxVertices)
        throw std::invalid_argument("chromatic_polynomial: more than 64 vertices");

    Work w;
    w.adj.assign(n, 0);
    w.verts = n == 64 ? ~0ULL : (1ULL << n) - 1;
    for (auto [u, v] : g.edges()) w.add_edge(u, v);
    Memo memo;
    return chrom_rec(std::move(w), memo, strategy);
}

}  // namespace chromroot
