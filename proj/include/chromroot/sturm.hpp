#pragma once

#include <stdexcept>
#include <vector>

#include "chromroot/intpoly.hpp"

namespace chromroot {

struct ZeroPolynomial : std::domain_error {
    ZeroPolynomial() : std::domain_error("operation requires a nonzero polynomial") {}
};

/// Interval endpoint: a rational number or one of the infinities.
class Bound {
   public:
    static Bound neg_inf() { return Bound(Kind::NegInf); }
    static Bound pos_inf() { return Bound(Kind::PosInf); }
    Bound(Rational value) : kind_(Kind::Finite), value_(std::move(value)) {}  // NOLINT(google-explicit-constructor)
    Bound(long value) : Bound(Rational(value)) {}                             // NOLINT(google-explicit-constructor)

    bool is_finite() const { return kind_ == Kind::Finite; }
    bool is_neg_inf() const { return kind_ == Kind::NegInf; }
    bool is_pos_inf() const { return kind_ == Kind::PosInf; }
    const Rational& value() const { return value_; }

    /// Strict order with NegInf < every rational < PosInf.
    bool operator<(const Bound& rhs) const;

   private:
    enum class Kind { NegInf, Finite, PosInf };
    explicit Bound(Kind k) : kind_(k) {}
    Kind kind_;
    Rational value_{0};
};

/// Polynomial gcd over Z via a primitive pseudo-remainder sequence; the
/// result is primitive with positive leading coefficient (1 for coprime
/// inputs, 0 only if both inputs are zero).
IntPoly poly_gcd(const IntPoly& a, const IntPoly& b);

/// p / gcd(p, p'): same distinct roots as p, each simple. Primitive with
/// positive leading coefficient.
IntPoly square_free_part(const IntPoly& p);

/// Sturm sequence of a square-free polynomial. Remainders are computed with
/// integer pseudo-divisions normalised by positive constants only, so the
/// sign pattern matches the classical rational chain.
class SturmChain {
   public:
    explicit SturmChain(IntPoly square_free);
    const std::vector<IntPoly>& sequence() const { return seq_; }
    /// Number of sign changes in the sequence at x (zeros skipped).
    int variations_at(const Bound& x) const;

   private:
    std::vector<IntPoly> seq_;
};

/// Exact count of distinct real roots of p in the interval from lo to hi
/// with the given endpoint inclusions. p is replaced by its square-free part
/// internally, so multiple roots are counted once. Throws ZeroPolynomial for
/// p = 0 and std::invalid_argument unless lo < hi.
long sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi, bool include_lo = false,
                 bool include_hi = false);

/// Distinct real roots of p over the whole line.
long count_real_roots(const IntPoly& p);

}  // namespace chromroot
