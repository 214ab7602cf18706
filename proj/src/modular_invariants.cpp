#include "fusion/modular_invariants.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "fusion/cyclotomic.hpp"
#include "fusion/errors.hpp"

namespace fusion {

std::vector<Int> flatten(const IntMat& m) { return m.a; }

IntMat unflatten(const std::vector<Int>& v, int n) {
    if (static_cast<int>(v.size()) != n * n) throw structural_error("unflatten: length mismatch");
    IntMat m(n, n);
    m.a = v;
    return m;
}

namespace {

std::vector<long> t_classes(int l) {
    const long h = l + 2;
    std::vector<long> cls;
    for (int j = 0; j <= l; ++j) cls.push_back((static_cast<long>(j + 1) * (j + 1)) % (4 * h));
    return cls;
}

// Integer coordinates of S_hat[a][b] on the power basis of Q(zeta_{2h}).
std::vector<std::vector<std::vector<long>>> s_hat_rows(int l) {
    const long n = 2 * (l + 2);
    const CycBasis& basis = cyc_basis(n);
    std::vector<std::vector<std::vector<long>>> srow(
        static_cast<size_t>(l) + 1,
        std::vector<std::vector<long>>(static_cast<size_t>(l) + 1, std::vector<long>(static_cast<size_t>(basis.deg))));
    for (int a = 0; a <= l; ++a)
        for (int b = 0; b <= l; ++b) {
            const long e = (static_cast<long>(a + 1) * (b + 1)) % n;
            const auto& plus = basis.pow[static_cast<size_t>(e)];
            const auto& minus = basis.pow[static_cast<size_t>((n - e) % n)];
            for (int t = 0; t < basis.deg; ++t)
                srow[static_cast<size_t>(a)][static_cast<size_t>(b)][static_cast<size_t>(t)] =
                    to_long(plus[static_cast<size_t>(t)]) - to_long(minus[static_cast<size_t>(t)]);
        }
    return srow;
}

} // namespace

bool commutes_with_modular_data(const ModularInvariant& inv) {
    const int r = inv.l + 1;
    if (inv.Z.rows != r || inv.Z.cols != r) throw structural_error("invariant: matrix size must be level + 1");
    const std::vector<long> cls = t_classes(inv.l);
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (inv.Z(i, j) != 0 && cls[static_cast<size_t>(i)] != cls[static_cast<size_t>(j)]) return false;

    const ModularData md = modular_data(inv.l);
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            Cyc diff = cyc_rational(Rat(0));
            for (int i = 0; i < r; ++i) {
                if (inv.Z(i, b) != 0)
                    diff = cyc_add(diff, cyc_scale(Rat(inv.Z(i, b)),
                                                   md.S_hat[static_cast<size_t>(a)][static_cast<size_t>(i)]));
                if (inv.Z(a, i) != 0)
                    diff = cyc_sub(diff, cyc_scale(Rat(inv.Z(a, i)),
                                                   md.S_hat[static_cast<size_t>(i)][static_cast<size_t>(b)]));
            }
            if (!cyc_is_zero(diff)) return false;
        }
    return true;
}

IntMat commutant_lattice(int l) {
    if (l < 1) throw structural_error("level must be at least 1");
    const int r = l + 1;
    const std::vector<long> cls = t_classes(l);

    // The T constraint zeroes every position whose row and column land in
    // different residue classes; only the surviving positions are unknowns.
    std::vector<int> varof(static_cast<size_t>(r) * r, -1);
    std::vector<std::pair<int, int>> varpos;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            if (cls[static_cast<size_t>(i)] == cls[static_cast<size_t>(j)]) {
                varof[static_cast<size_t>(i) * r + j] = static_cast<int>(varpos.size());
                varpos.emplace_back(i, j);
            }
    const int nvars = static_cast<int>(varpos.size());

    // One equation per matrix position (a,b) and power-basis coordinate t of
    // (S_hat Z - Z S_hat)[a][b]; rows are deduplicated after normalization.
    const auto srow = s_hat_rows(l);
    const int deg = static_cast<int>(srow[0][0].size());
    std::set<std::vector<long>> unique_rows;
    std::vector<std::vector<long>> rows(static_cast<size_t>(deg));
    for (int a = 0; a < r; ++a)
        for (int b = 0; b < r; ++b) {
            for (auto& row : rows) row.assign(static_cast<size_t>(nvars), 0);
            for (int i = 0; i < r; ++i) {
                const int vib = varof[static_cast<size_t>(i) * r + b];
                if (vib >= 0)
                    for (int t = 0; t < deg; ++t)
                        rows[static_cast<size_t>(t)][static_cast<size_t>(vib)] +=
                            srow[static_cast<size_t>(a)][static_cast<size_t>(i)][static_cast<size_t>(t)];
                const int vai = varof[static_cast<size_t>(a) * r + i];
                if (vai >= 0)
                    for (int t = 0; t < deg; ++t)
                        rows[static_cast<size_t>(t)][static_cast<size_t>(vai)] -=
                            srow[static_cast<size_t>(i)][static_cast<size_t>(b)][static_cast<size_t>(t)];
            }
            for (auto& row : rows) {
                long g = 0;
                for (long x : row) g = gcd_long(g, x);
                if (g == 0) continue;
                long lead = 0;
                for (long x : row)
                    if (x != 0) {
                        lead = x;
                        break;
                    }
                const long s = lead < 0 ? -g : g;
                for (long& x : row) x /= s;
                unique_rows.insert(row);
            }
        }

    // Rational elimination picks at most nvars independent rows; the kernel
    // is then computed over integers from those originals only.
    std::vector<std::vector<Rat>> rref;
    std::vector<int> rref_pivot;
    std::vector<const std::vector<long>*> selected;
    for (const auto& row : unique_rows) {
        std::vector<Rat> work(row.begin(), row.end());
        for (size_t k = 0; k < rref.size(); ++k) {
            const Rat& c = work[static_cast<size_t>(rref_pivot[k])];
            if (c == 0) continue;
            const Rat f = c; // work[pivot] of the stored row is 1
            for (int v = 0; v < nvars; ++v)
                if (rref[k][static_cast<size_t>(v)] != 0) work[static_cast<size_t>(v)] -= f * rref[k][static_cast<size_t>(v)];
        }
        int p = -1;
        for (int v = 0; v < nvars; ++v)
            if (work[static_cast<size_t>(v)] != 0) {
                p = v;
                break;
            }
        if (p < 0) continue; // dependent row
        const Rat head = work[static_cast<size_t>(p)];
        for (int v = p; v < nvars; ++v) work[static_cast<size_t>(v)] /= head;
        for (auto& stored : rref) {
            const Rat c = stored[static_cast<size_t>(p)];
            if (c == 0) continue;
            for (int v = 0; v < nvars; ++v)
                if (work[static_cast<size_t>(v)] != 0) stored[static_cast<size_t>(v)] -= c * work[static_cast<size_t>(v)];
        }
        rref.push_back(std::move(work));
        rref_pivot.push_back(p);
        selected.push_back(&row);
        if (static_cast<int>(selected.size()) == nvars) break;
    }

    IntMat equations(static_cast<int>(selected.size()), nvars);
    for (int er = 0; er < equations.rows; ++er)
        for (int v = 0; v < nvars; ++v) equations(er, v) = (*selected[static_cast<size_t>(er)])[static_cast<size_t>(v)];

    const IntMat kernel = integer_kernel(equations);

    IntMat full(kernel.rows, r * r);
    for (int kr = 0; kr < kernel.rows; ++kr)
        for (int v = 0; v < nvars; ++v)
            full(kr, varpos[static_cast<size_t>(v)].first * r + varpos[static_cast<size_t>(v)].second) =
                kernel(kr, v);
    hnf_rows(full);
    return full;
}

bool lattice_contains(const IntMat& basis, const std::vector<Int>& v) {
    return hnf_coordinates(basis, v).has_value();
}

namespace {

struct InvariantSearch {
    const IntMat& basis;
    int n;           // flattened length
    Int bound;
    long long budget;
    std::vector<int> pivot;      // pivot column per basis row
    std::vector<Int> v;          // running combination
    std::vector<std::vector<Int>> found;

    InvariantSearch(const IntMat& b, int n_, int bound_, long long budget_)
        : basis(b), n(n_), bound(bound_), budget(budget_), v(static_cast<size_t>(n_)) {
        for (int r = 0; r < basis.rows; ++r) {
            int p = -1;
            for (int j = 0; j < basis.cols; ++j)
                if (basis(r, j) != 0) {
                    p = j;
                    break;
                }
            if (p < 0) throw structural_error("internal: zero row in a lattice basis");
            pivot.push_back(p);
        }
    }

    void spend() {
        if (--budget < 0) throw budget_error("modular invariant search: node budget exceeded");
    }

    bool position_ok(int p) const {
        const Int& x = v[static_cast<size_t>(p)];
        if (x < 0 || x > bound) return false;
        return p != 0 || x == 1;
    }

    void dfs(int r, int done) {
        spend();
        const int next_fixed = r < basis.rows ? pivot[static_cast<size_t>(r)] : n;
        for (int p = done; p < next_fixed; ++p)
            if (!position_ok(p)) return;
        if (r == basis.rows) {
            found.push_back(v);
            return;
        }
        const int p = next_fixed;
        const Int& q = basis(r, p);
        // With later rows vanishing at p, the value v[p] + x q is final; the
        // admissible x form one integer interval (q > 0 in HNF).
        Int lo = -fdiv(v[static_cast<size_t>(p)], q);
        Int hi = fdiv(bound - v[static_cast<size_t>(p)], q);
        if (p == 0) {
            // Z[0][0] is pinned to 1 rather than merely bounded.
            if ((1 - v[0]) % q != 0) return;
            lo = hi = (1 - v[0]) / q;
        }
        for (Int x = lo; x <= hi; ++x) {
            spend();
            if (x != 0)
                for (int j = p; j < n; ++j) v[static_cast<size_t>(j)] += x * basis(r, j);
            dfs(r + 1, p + 1);
            if (x != 0)
                for (int j = p; j < n; ++j) v[static_cast<size_t>(j)] -= x * basis(r, j);
        }
    }
};

} // namespace

std::vector<ModularInvariant> enumerate_invariants(int l, int entry_bound, long long node_budget) {
    if (entry_bound < 1) throw structural_error("entry bound must be at least 1");
    const IntMat basis = commutant_lattice(l);
    const int r = l + 1;
    InvariantSearch search(basis, r * r, entry_bound, node_budget);
    search.dfs(0, 0);

    std::sort(search.found.begin(), search.found.end());
    std::vector<ModularInvariant> out;
    for (const auto& v : search.found) {
        ModularInvariant inv{l, unflatten(v, r)};
        if (!commutes_with_modular_data(inv))
            throw structural_error("internal: an enumerated matrix fails re-verification");
        out.push_back(std::move(inv));
    }
    return out;
}

std::vector<int> invariant_exponents(const ModularInvariant& inv) {
    std::vector<int> out;
    for (int j = 0; j <= inv.l; ++j) {
        const long m = to_long(inv.Z(j, j));
        if (m < 0) throw structural_error("invariant has a negative diagonal entry");
        for (long t = 0; t < m; ++t) out.push_back(j);
    }
    return out;
}

ClaimReport check_claims(const ModularInvariant& inv, const ZPlusModule& mod) {
    mod.check_shape();
    const ZPlusRing ambient = sl2_fusion_ring(inv.l);
    if (mod.ring.rank != ambient.rank || mod.ring.unit_set != ambient.unit_set || mod.ring.c != ambient.c)
        throw std::invalid_argument(fmt::format("module is not over the level-{} ring of the invariant", inv.l));

    ClaimReport report;
    report.trace_ok = (trace(inv.Z) == mod.module_rank);

    std::vector<int> ze = invariant_exponents(inv);
    std::vector<int> me = module_exponents(mod, inv.l);
    std::sort(ze.begin(), ze.end());
    std::sort(me.begin(), me.end());
    report.exponents_ok = (ze == me);

    report.cstar_simple_count = 0;
    for (const Int& z : inv.Z.a) report.cstar_simple_count += z * z;
    return report;
}

ChargeConjugation charge_conjugation(int l) {
    const ZPlusRing R = sl2_fusion_ring(l);
    const std::optional<std::vector<int>> dual = find_based_structure(R);
    if (!dual) throw structural_error("internal: the fusion ring lost its based structure");

    const int r = l + 1;
    ChargeConjugation cc;
    cc.inv.l = l;
    cc.inv.Z = IntMat(r, r);
    for (int mu = 0; mu < r; ++mu) cc.inv.Z((*dual)[static_cast<size_t>(mu)], mu) = 1;
    if (!commutes_with_modular_data(cc.inv))
        throw structural_error("internal: charge conjugation fails commutation");
    cc.coincides_with_diagonal = (cc.inv.Z == IntMat::identity(r));
    return cc;
}

} // namespace fusion
