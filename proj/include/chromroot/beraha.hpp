#pragma once

#include <array>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "chromroot/golden.hpp"
#include "chromroot/graph.hpp"
#include "chromroot/intpoly.hpp"

namespace chromroot {

/// Raised when the conjugate-location argument fails to exclude an index it
/// should exclude; this always indicates an implementation bug, not a
/// mathematical discovery.
struct ClassificationGap : std::logic_error {
    explicit ClassificationGap(const std::string& what) : std::logic_error(what) {}
};

/// Raised by golden_identity_check when the edge count rules the graph out
/// as a triangulation (|E| != 3n - 6).
struct NotTriangulationCandidate : std::domain_error {
    explicit NotTriangulationCandidate(const std::string& what) : std::domain_error(what) {}
};

/// Distinct roots of a Beraha minimal polynomial inside the root-free real
/// intervals: (-inf, 0), (0, 1) and (1, 32/27].
struct ForbiddenCounts {
    long negative = 0;
    long unit_interval = 0;
    long jackson = 0;
    bool any() const { return negative > 0 || unit_interval > 0 || jackson > 0; }
    bool operator==(const ForbiddenCounts&) const = default;
};

struct BerahaVerdict {
    enum class Kind { IntegerValue, ExcludedByConjugate, ChromaticRootB10 };
    Kind kind = Kind::ExcludedByConjugate;
    long integer_value = 0;  // meaningful for IntegerValue only

    std::string to_string() const;
    bool operator==(const BerahaVerdict&) const = default;
};

/// Everything the scanner reports about index n.
struct BerahaProfile {
    int n = 0;
    IntPoly min_poly;
    int degree = 0;
    ForbiddenCounts counts;
    BerahaVerdict verdict;

    /// "n; minpoly-coeffs-ascending; counts(neg,unit,jackson); verdict"
    std::string report_line() const;
};

/// Monic minimal polynomial of B_n = 2 + 2cos(2*pi/n). Indices 1, 2, 3, 4, 6
/// (the integer values 4, 0, 1, 2, 3) are table entries; for the rest the
/// polynomial is psi_n(x - 2) where Phi_n(x) = x^(phi(n)/2) psi_n(x + 1/x).
IntPoly beraha_minimal_polynomial(int n);

/// Sturm counts of the conjugates of B_n in the three root-free intervals.
ForbiddenCounts forbidden_conjugate_count(int n);

/// The classification: n in {1,2,3,4,6} are the integer values, n = 10 is a
/// chromatic root (re-verified against the embedded witness graph), and
/// every other index has a conjugate inside a root-free interval. Throws
/// ClassificationGap if that last claim fails to check out.
BerahaVerdict classify_beraha(int n);

BerahaProfile beraha_profile(int n);

/// True iff the minimal polynomial of B_n divides P_g.
bool is_chromatic_root_of(const Graph& g, int n);

/// Both sides of P(phi+2) = (phi+2) * phi^(3n-10) * P(phi+1)^2 evaluated
/// exactly in Z[phi].
struct GoldenIdentityReport {
    bool holds = false;
    GoldenInt lhs;
    GoldenInt rhs;
};

/// Requires n >= 4 and exactly 3n - 6 edges (the triangulation edge count;
/// planarity itself is not tested). Throws NotTriangulationCandidate.
GoldenIdentityReport golden_identity_check(const Graph& g);

/// Stacked (Apollonian) triangulation: K_4 grown by repeatedly inserting a
/// vertex into a face picked by a seeded deterministic generator. Always a
/// planar triangulation, so a valid golden-identity instance.
Graph stacked_triangulation(int vertices, std::uint64_t seed);

}  // namespace chromroot
