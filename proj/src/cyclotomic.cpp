#include "fusion/cyclotomic.hpp"

#include <fmt/format.h>

#include <map>
#include <memory>
#include <mutex>

#include "fusion/errors.hpp"

namespace fusion {

namespace {

std::mutex basis_mutex;
std::map<long, std::unique_ptr<CycBasis>> basis_cache;

std::unique_ptr<CycBasis> make_basis(long n) {
    auto b = std::make_unique<CycBasis>();
    b->n = n;
    b->phi = cyclotomic_poly(n);
    b->deg = poly_degree(b->phi);
    b->pow.reserve(static_cast<size_t>(n));
    std::vector<Int> cur(static_cast<size_t>(b->deg), 0);
    cur[0] = 1;
    for (long k = 0; k < n; ++k) {
        b->pow.push_back(cur);
        // multiply by x and reduce: the overflowing coefficient c kills itself
        // against the monic head of Phi and feeds c * (x^deg - Phi) back in
        Int head = b->deg > 0 ? cur[static_cast<size_t>(b->deg) - 1] : Int(0);
        for (int i = b->deg - 1; i > 0; --i) cur[static_cast<size_t>(i)] = cur[static_cast<size_t>(i) - 1];
        cur[0] = 0;
        if (head != 0)
            for (int i = 0; i < b->deg; ++i) cur[static_cast<size_t>(i)] -= head * b->phi[static_cast<size_t>(i)];
    }
    return b;
}

} // namespace

const CycBasis& cyc_basis(long n) {
    if (n < 1) throw structural_error("cyclotomic: modulus must be positive");
    std::lock_guard<std::mutex> lock(basis_mutex);
    auto it = basis_cache.find(n);
    if (it == basis_cache.end()) it = basis_cache.emplace(n, make_basis(n)).first;
    return *it->second;
}

namespace {

Cyc make_zero(long n) {
    Cyc c;
    c.n = n;
    c.a.assign(static_cast<size_t>(cyc_basis(n).deg), Rat(0));
    return c;
}

void add_power(Cyc& c, const Rat& coef, long k) {
    if (coef == 0) return;
    const CycBasis& b = cyc_basis(c.n);
    const std::vector<Int>& row = b.pow[static_cast<size_t>(((k % b.n) + b.n) % b.n)];
    for (int i = 0; i < b.deg; ++i)
        if (row[static_cast<size_t>(i)] != 0) c.a[static_cast<size_t>(i)] += coef * Rat(row[static_cast<size_t>(i)]);
}

} // namespace

Cyc cyc_rational(const Rat& r) {
    Cyc c;
    c.n = 1;
    c.a = {r};
    return c;
}

Cyc cyc_zeta(long n, long k) {
    Cyc c = make_zero(n);
    add_power(c, Rat(1), k);
    return c;
}

Cyc cyc_embed(const Cyc& c, long m) {
    if (m % c.n != 0) throw structural_error("cyclotomic: embedding target is not a multiple of the modulus");
    if (m == c.n) return c;
    Cyc out = make_zero(m);
    const long q = m / c.n;
    for (size_t i = 0; i < c.a.size(); ++i) add_power(out, c.a[i], static_cast<long>(i) * q);
    return out;
}

Cyc cyc_add(const Cyc& x, const Cyc& y) {
    const long m = lcm_long(x.n, y.n);
    Cyc a = cyc_embed(x, m), b = cyc_embed(y, m);
    for (size_t i = 0; i < a.a.size(); ++i) a.a[i] += b.a[i];
    return a;
}

Cyc cyc_sub(const Cyc& x, const Cyc& y) { return cyc_add(x, cyc_neg(y)); }

Cyc cyc_neg(const Cyc& x) {
    Cyc c = x;
    for (Rat& v : c.a) v = -v;
    return c;
}

Cyc cyc_scale(const Rat& r, const Cyc& x) {
    Cyc c = x;
    for (Rat& v : c.a) v *= r;
    return c;
}

Cyc cyc_mul(const Cyc& x, const Cyc& y) {
    const long m = lcm_long(x.n, y.n);
    Cyc a = cyc_embed(x, m), b = cyc_embed(y, m);
    const CycBasis& bs = cyc_basis(m);
    std::vector<Rat> conv(2 * static_cast<size_t>(bs.deg), Rat(0));
    for (size_t i = 0; i < a.a.size(); ++i) {
        if (a.a[i] == 0) continue;
        for (size_t j = 0; j < b.a.size(); ++j)
            if (b.a[j] != 0) conv[i + j] += a.a[i] * b.a[j];
    }
    Cyc out = make_zero(m);
    for (int i = 0; i < bs.deg; ++i) out.a[static_cast<size_t>(i)] = conv[static_cast<size_t>(i)];
    for (size_t i = static_cast<size_t>(bs.deg); i < conv.size(); ++i)
        add_power(out, conv[i], static_cast<long>(i));
    return out;
}

Cyc cyc_conj(const Cyc& x) {
    Cyc out = make_zero(x.n);
    for (size_t i = 0; i < x.a.size(); ++i)
        add_power(out, x.a[i], static_cast<long>(x.n) - static_cast<long>(i));
    return out;
}

bool cyc_is_zero(const Cyc& x) {
    for (const Rat& v : x.a)
        if (v != 0) return false;
    return true;
}

bool cyc_eq(const Cyc& x, const Cyc& y) { return cyc_is_zero(cyc_sub(x, y)); }

bool cyc_is_rational(const Cyc& x) {
    for (size_t i = 1; i < x.a.size(); ++i)
        if (x.a[i] != 0) return false;
    return true;
}

Rat cyc_rational_value(const Cyc& x) {
    if (!cyc_is_rational(x)) throw structural_error("cyclotomic: element is not rational");
    return x.a.empty() ? Rat(0) : x.a[0];
}

std::string cyc_to_string(const Cyc& x) {
    std::string out;
    for (size_t i = 0; i < x.a.size(); ++i) {
        if (x.a[i] == 0) continue;
        std::string term;
        if (i == 0)
            term = x.a[i].get_str();
        else if (x.a[i] == 1)
            term = "";
        else if (x.a[i] == -1)
            term = "-";
        else
            term = x.a[i].get_str() + "*";
        if (i >= 1) {
            term += fmt::format("z{}", x.n);
            if (i >= 2) term += fmt::format("^{}", i);
        }
        if (!out.empty() && term.rfind('-', 0) != 0) out += "+";
        out += term;
    }
    return out.empty() ? "0" : out;
}

} // namespace fusion
