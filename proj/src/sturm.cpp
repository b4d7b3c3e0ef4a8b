#include "chromroot/sturm.hpp"

#include <utility>

namespace chromroot {

bool Bound::operator<(const Bound& rhs) const {
    if (kind_ == Kind::NegInf) return rhs.kind_ != Kind::NegInf;
    if (kind_ == Kind::PosInf) return false;
    if (rhs.kind_ == Kind::PosInf) return true;
    if (rhs.kind_ == Kind::NegInf) return false;
    return value_ < rhs.value_;
}

namespace {

// Pseudo-remainder of a by b, sign-normalised: equals c * (a mod b) for some
// positive rational c. Each reduction step multiplies the running remainder
// by lc(b); an odd number of steps with a negative lc(b) flips the sign back.
IntPoly prem_positive(const IntPoly& a, const IntPoly& b) {
    IntPoly r = a;
    const BigInt& lead = b.leading();
    long steps = 0;
    while (!r.is_zero() && r.degree() >= b.degree()) {
        IntPoly shifted_b = IntPoly::monomial(1, r.degree() - b.degree()) * b;
        r = lead * r - r.leading() * shifted_b;
        ++steps;
    }
    if (lead < 0 && (steps % 2) != 0) return -r;
    return r;
}

}  // namespace

IntPoly poly_gcd(const IntPoly& a, const IntPoly& b) {
    IntPoly x = primitive_part(a), y = primitive_part(b);
    while (!y.is_zero()) {
        IntPoly r = primitive_part(prem_positive(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    return x;
}

IntPoly square_free_part(const IntPoly& p) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (p.degree() == 0) return IntPoly::one();
    IntPoly g = poly_gcd(p, p.derivative());
    return primitive_part(exact_div(primitive_part(p), g));
}

SturmChain::SturmChain(IntPoly square_free) {
    if (square_free.is_zero()) throw ZeroPolynomial();
    seq_.push_back(std::move(square_free));
    if (seq_.front().degree() == 0) return;
    seq_.push_back(seq_.front().derivative());
    while (!seq_.back().is_zero() && seq_.back().degree() > 0) {
        IntPoly r = prem_positive(seq_[seq_.size() - 2], seq_.back());
        if (r.is_zero()) break;
        // Divide by the (positive) content to keep coefficients small.
        BigInt c = content(r);
        std::vector<BigInt> scaled;
        scaled.reserve(r.coeffs().size());
        for (const auto& v : r.coeffs()) scaled.push_back(-v / c);
        seq_.push_back(IntPoly(std::move(scaled)));
    }
}

int SturmChain::variations_at(const Bound& x) const {
    int variations = 0, prev = 0;
    for (const auto& p : seq_) {
        int s;
        if (x.is_finite()) {
            s = p.sign_at(x.value());
        } else if (p.is_zero()) {
            s = 0;
        } else {
            s = sgn(p.leading());
            if (x.is_neg_inf() && (p.degree() % 2) != 0) s = -s;
        }
        if (s == 0) continue;
        if (prev != 0 && s != prev) ++variations;
        prev = s;
    }
    return variations;
}

long sturm_count(const IntPoly& p, const Bound& lo, const Bound& hi, bool include_lo,
                 bool include_hi) {
    if (p.is_zero()) throw ZeroPolynomial();
    if (!(lo < hi)) throw std::invalid_argument("sturm_count: empty interval");
    IntPoly sf = square_free_part(p);
    if (sf.degree() == 0) return 0;
    SturmChain chain(sf);
    // V(lo) - V(hi) counts roots in the half-open interval (lo, hi].
    long count = chain.variations_at(lo) - chain.variations_at(hi);
    if (hi.is_finite() && sf.sign_at(hi.value()) == 0 && !include_hi) --count;
    if (include_lo && lo.is_finite() && sf.sign_at(lo.value()) == 0) ++count;
    return count;
}

long count_real_roots(const IntPoly& p) {
    return sturm_count(p, Bound::neg_inf(), Bound::pos_inf());
}

}  // namespace chromroot
