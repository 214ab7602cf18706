#include "fusion/polynomial.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace fusion {

int poly_degree(const IntPoly& p) {
    for (int i = static_cast<int>(p.size()) - 1; i >= 0; --i)
        if (p[i] != 0) return i;
    return -1;
}

IntPoly poly_trim(IntPoly p) {
    p.resize(static_cast<size_t>(poly_degree(p) + 1));
    return p;
}

IntPoly poly_mul(const IntPoly& p, const IntPoly& q) {
    if (p.empty() || q.empty()) return {};
    IntPoly r(p.size() + q.size() - 1);
    for (size_t i = 0; i < p.size(); ++i) {
        if (p[i] == 0) continue;
        for (size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return poly_trim(std::move(r));
}

IntPoly poly_sub(const IntPoly& p, const IntPoly& q) {
    IntPoly r = p;
    if (q.size() > r.size()) r.resize(q.size());
    for (size_t i = 0; i < q.size(); ++i) r[i] -= q[i];
    return poly_trim(std::move(r));
}

void poly_divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot, IntPoly& rem) {
    const int dd = poly_degree(den);
    if (dd < 0 || den[dd] != 1) throw structural_error("poly_divmod_monic: divisor not monic");
    rem = poly_trim(num);
    int dn = poly_degree(rem);
    quot.assign(dn >= dd ? dn - dd + 1 : 0, 0);
    while (dn >= dd) {
        const Int c = rem[dn];
        quot[dn - dd] = c;
        for (int i = 0; i <= dd; ++i) rem[dn - dd + i] -= c * den[i];
        dn = poly_degree(rem);
    }
    rem = poly_trim(std::move(rem));
}

bool poly_divides_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot) {
    IntPoly rem;
    poly_divmod_monic(num, den, quot, rem);
    return rem.empty();
}

const IntPoly& cyclotomic_poly(long n) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<IntPoly>> cache;
    if (n < 1) throw structural_error("cyclotomic_poly: order must be positive");
    {
        std::scoped_lock lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    // (x^n - 1) divided by the cyclotomic polynomials of all proper divisors.
    IntPoly p(static_cast<size_t>(n) + 1);
    p[0] = -1;
    p[static_cast<size_t>(n)] = 1;
    for (long d = 1; d < n; ++d) {
        if (n % d != 0) continue;
        const IntPoly& f = cyclotomic_poly(d);
        IntPoly q, r;
        poly_divmod_monic(p, f, q, r);
        if (!r.empty()) throw structural_error("cyclotomic_poly: internal division failure");
        p = std::move(q);
    }
    std::scoped_lock lk(mu);
    auto [it, inserted] = cache.try_emplace(n, std::make_unique<IntPoly>(std::move(p)));
    return *it->second;
}

const IntPoly& cos_minimal_poly(long n) {
    static std::mutex mu;
    static std::map<long, std::unique_ptr<IntPoly>> cache;
    if (n < 1) throw structural_error("cos_minimal_poly: order must be positive");
    {
        std::scoped_lock lk(mu);
        auto it = cache.find(n);
        if (it != cache.end()) return *it->second;
    }
    IntPoly psi;
    if (n == 1) {
        psi = {-2, 1}; // 2cos(0) = 2
    } else if (n == 2) {
        psi = {2, 1}; // 2cos(pi) = -2
    } else {
        // Phi_n is palindromic of even degree 2k; fold it with x^j + x^-j = D_j(x + 1/x),
        // the Dickson recursion D_0 = 2, D_1 = y, D_j = y*D_{j-1} - D_{j-2}.
        const IntPoly& phi = cyclotomic_poly(n);
        const int k = poly_degree(phi) / 2;
        IntPoly djm1 = {2}, dj = {0, 1};
        psi = IntPoly{phi[static_cast<size_t>(k)]};
        for (int j = 1; j <= k; ++j) {
            const Int& c = phi[static_cast<size_t>(k + j)];
            if (c != 0) {
                IntPoly t = dj;
                for (Int& v : t) v *= c;
                psi.resize(std::max(psi.size(), t.size()));
                for (size_t i = 0; i < t.size(); ++i) psi[i] += t[i];
            }
            if (j < k) {
                IntPoly next = poly_sub(poly_mul({0, 1}, dj), djm1);
                djm1 = std::move(dj);
                dj = std::move(next);
            }
        }
        psi = poly_trim(std::move(psi));
    }
    std::scoped_lock lk(mu);
    auto [it, inserted] = cache.try_emplace(n, std::make_unique<IntPoly>(std::move(psi)));
    return *it->second;
}

IntPoly char_poly(const IntMat& A) {
    if (A.rows != A.cols) throw structural_error("char_poly: matrix not square");
    const int n = A.rows;
    // Faddeev-LeVerrier: M_1 = A, c_k = -tr(A M_k)/k ... intermediates are integral.
    IntPoly p(static_cast<size_t>(n) + 1);
    p[static_cast<size_t>(n)] = 1;
    if (n == 0) return p;
    RatMat Aq = to_rat(A);
    RatMat M = Aq;
    Rat ck = -trace(M);
    p[static_cast<size_t>(n - 1)] = ck.get_num();
    for (int k = 2; k <= n; ++k) {
        for (int i = 0; i < n; ++i) M(i, i) += ck;
        M = Aq * M;
        ck = -trace(M) / k;
        if (ck.get_den() != 1) throw structural_error("char_poly: non-integral coefficient");
        p[static_cast<size_t>(n - k)] = ck.get_num();
    }
    return p;
}

} // namespace fusion
