#pragma once

#include <gmpxx.h>

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace chromroot {

using BigInt = mpz_class;
using Rational = mpq_class;

struct DivisionByZero : std::domain_error {
    DivisionByZero() : std::domain_error("polynomial division by zero") {}
};

struct NonExactDivision : std::domain_error {
    explicit NonExactDivision(const std::string& what) : std::domain_error(what) {}
};

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// coeffs()[i] is the coefficient of q^i; the trailing coefficient of a
/// nonzero polynomial is never zero. The zero polynomial has an empty
/// coefficient vector and degree() == -1.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    IntPoly(std::initializer_list<long> ascending);

    static IntPoly zero() { return IntPoly(); }
    static IntPoly constant(BigInt c);
    static IntPoly one() { return constant(1); }
    static IntPoly variable();  // q
    static IntPoly monomial(BigInt c, int power);

    bool is_zero() const noexcept { return coeffs_.empty(); }
    int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<BigInt>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of q^i; zero outside the stored range.
    const BigInt& coeff(int i) const;
    const BigInt& leading() const;  // requires a nonzero polynomial
    bool is_monic() const { return !is_zero() && leading() == 1; }

    bool operator==(const IntPoly& rhs) const noexcept { return coeffs_ == rhs.coeffs_; }

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& rhs);
    IntPoly& operator-=(const IntPoly& rhs);
    friend IntPoly operator+(IntPoly lhs, const IntPoly& rhs) { return lhs += rhs; }
    friend IntPoly operator-(IntPoly lhs, const IntPoly& rhs) { return lhs -= rhs; }
    friend IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs);
    friend IntPoly operator*(const BigInt& s, const IntPoly& p);

    IntPoly derivative() const;
    BigInt eval(const BigInt& x) const;
    /// Sign of p(x) at a rational point, computed exactly (-1, 0 or +1).
    int sign_at(const Rational& x) const;
    /// p(q - c), expanded.
    IntPoly shifted(const BigInt& c) const;
    IntPoly pow(unsigned e) const;

    /// Machine form: ascending coefficients separated by single spaces
    /// ("5 -5 1" for q^2 - 5q + 5; "0" for the zero polynomial).
    std::string to_coeff_string() const;
    /// Human form, descending powers: "q^2 - 5*q + 5".
    std::string to_pretty_string(std::string_view var = "q") const;
    /// Parses the machine form. Throws std::invalid_argument on bad tokens.
    static IntPoly parse_coeff_string(std::string_view text);

   private:
    std::vector<BigInt> coeffs_;
    void trim();
};

/// q(q-1)...(q-n+1): the chromatic polynomial of the complete graph K_n.
IntPoly falling_factorial(int n);

/// Quotient r with p = d * r over the integers. Throws NonExactDivision if no
/// such r exists (including divisibility failures of individual coefficients)
/// and DivisionByZero for d = 0.
IntPoly exact_div(const IntPoly& p, const IntPoly& d);

/// True iff p = d * r for some integer polynomial r.
bool is_divisible(const IntPoly& p, const IntPoly& d);

/// gcd of the coefficients (positive; 0 for the zero polynomial).
BigInt content(const IntPoly& p);
/// p divided by its content, sign-normalised to a positive leading coefficient.
IntPoly primitive_part(const IntPoly& p);

}  // namespace chromroot
