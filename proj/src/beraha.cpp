#include "chromroot/beraha.hpp"

#include <array>
#include <utility>
#include <vector>

#include "chromroot/catalog.hpp"
#include "chromroot/chromatic.hpp"
#include "chromroot/cyclotomic.hpp"
#include "chromroot/sturm.hpp"

namespace chromroot {

std::string BerahaVerdict::to_string() const {
    switch (kind) {
        case Kind::IntegerValue:
            return "IntegerBeraha(" + std::to_string(integer_value) + ")";
        case Kind::ExcludedByConjugate:
            return "ExcludedByConjugate";
        case Kind::ChromaticRootB10:
            return "ChromaticRootB10";
    }
    return {};
}

std::string BerahaProfile::report_line() const {
    return std::to_string(n) + "; " + min_poly.to_coeff_string() + "; counts(" +
           std::to_string(counts.negative) + "," + std::to_string(counts.unit_interval) + "," +
           std::to_string(counts.jackson) + "); " + verdict.to_string();
}

namespace {

// B_1 = 4, B_2 = 0, B_3 = 1, B_4 = 2, B_6 = 3
constexpr long integer_beraha_value(int n) {
    switch (n) {
        case 1: return 4;
        case 2: return 0;
        case 3: return 1;
        case 4: return 2;
        case 6: return 3;
        default: return -1;
    }
}

bool b10_witness_verified() {
    static const bool ok = [] {
        return is_divisible(chromatic_polynomial(b10_witness_g1()), IntPoly{5, -5, 1});
    }();
    return ok;
}

}  // namespace

IntPoly beraha_minimal_polynomial(int n) {
    if (n < 1) throw std::invalid_argument("beraha_minimal_polynomial: n must be >= 1");
    if (long v = integer_beraha_value(n); v >= 0) return IntPoly{-v, 1};
    return half_palindromic_decompose(cyclotomic(n)).shifted(2);
}

ForbiddenCounts forbidden_conjugate_count(int n) {
    IntPoly p = beraha_minimal_polynomial(n);
    ForbiddenCounts c;
    c.negative = sturm_count(p, Bound::neg_inf(), Bound(0));
    c.unit_interval = sturm_count(p, Bound(0), Bound(1));
    c.jackson = sturm_count(p, Bound(1), Bound(Rational(32, 27)), false, true);
    return c;
}

BerahaVerdict classify_beraha(int n) {
    if (n < 1) throw std::invalid_argument("classify_beraha: n must be >= 1");
    if (long v = integer_beraha_value(n); v >= 0)
        return {BerahaVerdict::Kind::IntegerValue, v};
    if (n == 10) {
        if (!b10_witness_verified())
            throw ClassificationGap(
                "embedded witness graph is not divisible by the B_10 minimal polynomial");
        return {BerahaVerdict::Kind::ChromaticRootB10, 0};
    }
    if (!forbidden_conjugate_count(n).any())
        throw ClassificationGap("no conjugate of B_" + std::to_string(n) +
                                " found in a root-free interval");
    return {BerahaVerdict::Kind::ExcludedByConjugate, 0};
}

BerahaProfile beraha_profile(int n) {
    BerahaProfile p;
    p.n = n;
    p.min_poly = beraha_minimal_polynomial(n);
    p.degree = p.min_poly.degree();
    p.counts = forbidden_conjugate_count(n);
    p.verdict = classify_beraha(n);
    return p;
}

bool is_chromatic_root_of(const Graph& g, int n) {
    return is_divisible(chromatic_polynomial(g), beraha_minimal_polynomial(n));
}

GoldenIdentityReport golden_identity_check(const Graph& g) {
    const int n = g.vertex_count();
    if (n < 4 || g.edge_count() != 3 * n - 6)
        throw NotTriangulationCandidate("need n >= 4 and exactly 3n-6 edges, got n = " +
                                        std::to_string(n) + ", |E| = " +
                                        std::to_string(g.edge_count()));
    IntPoly p = chromatic_polynomial(g);
    const GoldenInt phi = GoldenInt::phi();
    const GoldenInt phi_plus_2(2, 1);
    GoldenIdentityReport r;
    r.lhs = eval_golden(p, phi_plus_2);
    GoldenInt at_b5 = eval_golden(p, GoldenInt(1, 1));
    r.rhs = phi_plus_2 * phi.pow(static_cast<unsigned>(3 * n - 10)) * at_b5 * at_b5;
    r.holds = r.lhs == r.rhs;
    return r;
}

Graph stacked_triangulation(int vertices, std::uint64_t seed) {
    if (vertices < 4) throw std::invalid_argument("stacked_triangulation: need >= 4 vertices");
    // splitmix64: pinned across platforms so instances are reproducible
    auto next = [state = seed]() mutable {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    };

    std::vector<Graph::Edge> edges = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    for (int v = 4; v < vertices; ++v) {
        std::size_t i = next() % faces.size();
        auto [a, b, c] = faces[i];
        faces.erase(faces.begin() + static_cast<long>(i));
        edges.emplace_back(a, v);
        edges.emplace_back(b, v);
        edges.emplace_back(c, v);
        faces.push_back({a, b, v});
        faces.push_back({a, c, v});
        faces.push_back({b, c, v});
    }
    return Graph::from_edges(vertices, edges);
}

}  // namespace chromroot
