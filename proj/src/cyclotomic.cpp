#include "chromroot/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace chromroot {

namespace {

std::mutex g_cache_mutex;
std::map<int, IntPoly>& cache() {
    static std::map<int, IntPoly> c;
    return c;
}

}  // namespace

IntPoly cyclotomic(int n) {
    if (n < 1) throw std::invalid_argument("cyclotomic: n must be >= 1");
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = cache().find(n);
        if (it != cache().end()) return it->second;
    }
    // x^n - 1
    IntPoly result = IntPoly::monomial(1, n) - IntPoly::one();
    for (int d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        result = exact_div(result, cyclotomic(d));  // recursion outside the lock
    }
    {
        std::lock_guard lock(g_cache_mutex);
        cache().emplace(n, result);
    }
    return result;
}

IntPoly half_palindromic_decompose(const IntPoly& p) {
    const auto& c = p.coeffs();
    if (p.is_zero() || !std::equal(c.begin(), c.end(), c.rbegin())) throw NotPalindromic();
    if (p.degree() % 2 != 0) throw OddDegree();
    const int d = p.degree() / 2;

    // p(x)/x^d = a_d + sum_{k>=1} a_{d+k} (x^k + x^-k); the bracket equals
    // V_k(x + 1/x) with V_0 = 2, V_1 = y, V_k = y*V_{k-1} - V_{k-2}.
    IntPoly psi = IntPoly::constant(c[d]);
    IntPoly v_prev = IntPoly::constant(2);
    IntPoly v_cur = IntPoly::variable();
    const IntPoly y = IntPoly::variable();
    for (int k = 1; k <= d; ++k) {
        psi += c[d + k] * v_cur;
        IntPoly v_next = y * v_cur - v_prev;
        v_prev = std::move(v_cur);
        v_cur = std::move(v_next);
    }

    // Back-substitution: x^d * psi(x + 1/x) = sum_k psi_k (x^2+1)^k x^(d-k).
    const IntPoly x2p1 = IntPoly{1, 0, 1};
    IntPoly check, x2p1_pow = IntPoly::one();
    for (int k = 0; k <= psi.degree(); ++k) {
        check += psi.coeff(k) * (x2p1_pow * IntPoly::monomial(1, d - k));
        x2p1_pow = x2p1_pow * x2p1;
    }
    if (!(check == p)) throw std::logic_error("half_palindromic_decompose: verification failed");
    return psi;
}

}  // namespace chromroot
