#pragma once

#include <sstream>
#include <string>

#include "chromroot/intpoly.hpp"

namespace chromroot {

/// Element a + b*phi of Z[phi], phi = (1+sqrt(5))/2. Products are reduced by
/// phi^2 = phi + 1, so (a+b*phi)(c+d*phi) = (ac+bd) + (ad+bc+bd)*phi.
struct GoldenInt {
    BigInt a{0};
    BigInt b{0};

    GoldenInt() = default;
    GoldenInt(BigInt a_, BigInt b_) : a(std::move(a_)), b(std::move(b_)) {}

    static GoldenInt integer(long v) { return GoldenInt(BigInt(v), 0); }
    static GoldenInt phi() { return GoldenInt(0, 1); }

    bool operator==(const GoldenInt& rhs) const { return a == rhs.a && b == rhs.b; }

    friend GoldenInt operator+(const GoldenInt& x, const GoldenInt& y) {
        return GoldenInt(x.a + y.a, x.b + y.b);
    }
    friend GoldenInt operator-(const GoldenInt& x, const GoldenInt& y) {
        return GoldenInt(x.a - y.a, x.b - y.b);
    }
    friend GoldenInt operator*(const GoldenInt& x, const GoldenInt& y) {
        return GoldenInt(x.a * y.a + x.b * y.b, x.a * y.b + x.b * y.a + x.b * y.b);
    }

    GoldenInt pow(unsigned e) const {
        GoldenInt base(*this), result = GoldenInt::integer(1);
        while (e > 0) {
            if (e & 1u) result = result * base;
            e >>= 1u;
            if (e > 0) base = base * base;
        }
        return result;
    }

    std::string to_string() const {
        std::ostringstream os;
        os << a;
        if (b >= 0)
            os << " + " << b << "*phi";
        else
            os << " - " << -b << "*phi";
        return os.str();
    }
};

/// Exact Horner evaluation of p at a point of Z[phi].
inline GoldenInt eval_golden(const IntPoly& p, const GoldenInt& x) {
    GoldenInt acc;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * x + GoldenInt(*it, 0);
    return acc;
}

}  // namespace chromroot
