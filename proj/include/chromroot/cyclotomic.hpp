#pragma once

#include <stdexcept>

#include "chromroot/intpoly.hpp"

namespace chromroot {

struct NotPalindromic : std::domain_error {
    NotPalindromic() : std::domain_error("polynomial is not palindromic") {}
};

struct OddDegree : std::domain_error {
    OddDegree() : std::domain_error("palindromic polynomial has odd degree") {}
};

/// n-th cyclotomic polynomial, computed as (x^n - 1) divided by Phi_d over
/// the proper divisors d of n. Results are cached behind a mutex; concurrent
/// callers only ever see complete entries.
IntPoly cyclotomic(int n);

/// For palindromic p of even degree 2d, returns psi of degree d with
/// p(x) = x^d * psi(x + 1/x). The result is verified by back-substitution
/// before being returned. Applied to Phi_n (n >= 3) this yields the minimal
/// polynomial of 2*cos(2*pi/n).
IntPoly half_palindromic_decompose(const IntPoly& p);

}  // namespace chromroot
