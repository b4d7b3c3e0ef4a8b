#include "chromroot/intpoly.hpp"

#include <cctype>
#include <sstream>
#include <utility>

namespace chromroot {

void IntPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPoly::IntPoly(std::initializer_list<long> ascending) {
    coeffs_.reserve(ascending.size());
    for (long c : ascending) coeffs_.emplace_back(c);
    trim();
}

IntPoly IntPoly::constant(BigInt c) {
    IntPoly p;
    if (c != 0) p.coeffs_.push_back(std::move(c));
    return p;
}

IntPoly IntPoly::variable() { return monomial(1, 1); }

IntPoly IntPoly::monomial(BigInt c, int power) {
    IntPoly p;
    if (c != 0) {
        p.coeffs_.assign(power + 1, BigInt(0));
        p.coeffs_.back() = std::move(c);
    }
    return p;
}

const BigInt& IntPoly::coeff(int i) const {
    static const BigInt kZero(0);
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return kZero;
    return coeffs_[i];
}

const BigInt& IntPoly::leading() const {
    if (is_zero()) throw std::logic_error("leading coefficient of zero polynomial");
    return coeffs_.back();
}

IntPoly IntPoly::operator-() const {
    IntPoly r(*this);
    for (auto& c : r.coeffs_) c = -c;
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& rhs) {
    if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& lhs, const IntPoly& rhs) {
    if (lhs.is_zero() || rhs.is_zero()) return IntPoly();
    std::vector<BigInt> out(lhs.coeffs_.size() + rhs.coeffs_.size() - 1, BigInt(0));
    for (std::size_t i = 0; i < lhs.coeffs_.size(); ++i) {
        if (lhs.coeffs_[i] == 0) continue;
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out[i + j] += lhs.coeffs_[i] * rhs.coeffs_[j];
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(const BigInt& s, const IntPoly& p) {
    if (s == 0) return IntPoly();
    IntPoly r(p);
    for (auto& c : r.coeffs_) c *= s;
    return r;
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) return IntPoly();
    std::vector<BigInt> out(coeffs_.size() - 1);
    for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = BigInt(i) * coeffs_[i];
    return IntPoly(std::move(out));
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
    return acc;
}

int IntPoly::sign_at(const Rational& x) const {
    // sign of den^deg * p(num/den), an integer with the same sign as p(x)
    // because the denominator is positive.
    const BigInt& num = x.get_num();
    const BigInt& den = x.get_den();
    BigInt acc(0), den_pow(1);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * num + *it * den_pow;
        den_pow *= den;
    }
    return sgn(acc);
}

IntPoly IntPoly::shifted(const BigInt& c) const {
    // Horner in (q - c): acc <- acc*(q - c) + a_i, top coefficient first.
    IntPoly acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        std::vector<BigInt> next(acc.coeffs_.size() + 1, BigInt(0));
        for (std::size_t i = 0; i < acc.coeffs_.size(); ++i) {
            next[i + 1] += acc.coeffs_[i];
            next[i] -= c * acc.coeffs_[i];
        }
        next[0] += *it;
        acc = IntPoly(std::move(next));
    }
    return acc;
}

IntPoly IntPoly::pow(unsigned e) const {
    IntPoly base(*this), result = IntPoly::one();
    while (e > 0) {
        if (e & 1u) result = result * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return result;
}

std::string IntPoly::to_coeff_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (i) os << ' ';
        os << coeffs_[i];
    }
    return os.str();
}

std::string IntPoly::to_pretty_string(std::string_view var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& c = coeffs_[i];
        if (c == 0) continue;
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) os << '-';
            first = false;
        } else {
            os << (c < 0 ? " - " : " + ");
        }
        if (i == 0) {
            os << mag;
        } else {
            if (mag != 1) os << mag << '*';
            os << var;
            if (i > 1) os << '^' << i;
        }
    }
    return os.str();
}

IntPoly IntPoly::parse_coeff_string(std::string_view text) {
    std::vector<BigInt> coeffs;
    std::istringstream is{std::string(text)};
    std::string tok;
    while (is >> tok) {
        try {
            coeffs.emplace_back(tok);
        } catch (const std::invalid_argument&) {
            throw std::invalid_argument("bad coefficient token: '" + tok + "'");
        }
    }
    if (coeffs.empty()) throw std::invalid_argument("empty coefficient list");
    return IntPoly(std::move(coeffs));
}

IntPoly falling_factorial(int n) {
    if (n < 0) throw std::invalid_argument("falling_factorial: negative n");
    IntPoly r = IntPoly::one();
    for (int i = 0; i < n; ++i) r = r * IntPoly{-static_cast<long>(i), 1};
    return r;
}

namespace {

// Integer long division. Each quotient step divides the current leading
// coefficient by lc(d); when d | p over Z every step is exact, and any
// failed step or nonzero final remainder certifies non-divisibility.
bool try_exact_div(const IntPoly& p, const IntPoly& d, IntPoly* quotient) {
    if (p.is_zero()) {
        if (quotient) *quotient = IntPoly();
        return true;
    }
    if (p.degree() < d.degree()) return false;
    std::vector<BigInt> rem(p.coeffs().begin(), p.coeffs().end());
    const int dd = d.degree();
    const BigInt& lead = d.leading();
    std::vector<BigInt> q(p.degree() - dd + 1, BigInt(0));
    for (int k = p.degree() - dd; k >= 0; --k) {
        BigInt& top = rem[k + dd];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lead.get_mpz_t())) return false;
        BigInt qk = top / lead;
        for (int i = 0; i <= dd; ++i) rem[k + i] -= qk * d.coeff(i);
        q[k] = std::move(qk);
    }
    for (int i = 0; i < dd; ++i)
        if (rem[i] != 0) return false;
    if (quotient) *quotient = IntPoly(std::move(q));
    return true;
}

}  // namespace

IntPoly exact_div(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw DivisionByZero();
    IntPoly q;
    if (!try_exact_div(p, d, &q))
        throw NonExactDivision("non-exact division: (" + p.to_pretty_string() + ") / (" +
                               d.to_pretty_string() + ")");
    return q;
}

bool is_divisible(const IntPoly& p, const IntPoly& d) {
    if (d.is_zero()) throw DivisionByZero();
    return try_exact_div(p, d, nullptr);
}

BigInt content(const IntPoly& p) {
    BigInt g(0);
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

IntPoly primitive_part(const IntPoly& p) {
    if (p.is_zero()) return p;
    BigInt g = content(p);
    if (p.leading() < 0) g = -g;
    std::vector<BigInt> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.push_back(c / g);
    return IntPoly(std::move(out));
}

}  // namespace chromroot
