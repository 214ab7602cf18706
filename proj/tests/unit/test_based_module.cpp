#include <doctest.h>

#include <set>

#include "fusion/based_module.hpp"
#include "fusion/sl2.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

ZPlusModule regular_module(const ZPlusRing& R) {
    ZPlusModule M;
    M.ring = R;
    M.module_rank = R.rank;
    M.action = fusion_matrices(R);
    return M;
}

// rank-2 ring {1, x} with x^2 = x; no duality, but a perfectly good Z+-ring
ZPlusRing idempotent_ring() {
    ZPlusRing R;
    R.rank = 2;
    R.labels = {"1", "x"};
    R.unit_set = {0};
    R.c.assign(2, std::vector<std::vector<Int>>(2, std::vector<Int>(2, 0)));
    R.c[0][0][0] = 1;
    R.c[0][1][1] = 1;
    R.c[1][0][1] = 1;
    R.c[1][1][1] = 1;
    return R;
}

bool strongly_connected(const std::vector<IntMat>& mats, int d) {
    if (d == 0) return false;
    std::vector<std::vector<int>> adj(static_cast<size_t>(d));
    for (const IntMat& m : mats)
        for (int k = 0; k < d; ++k)
            for (int j = 0; j < d; ++j)
                if (m(k, j) > 0) adj[static_cast<size_t>(j)].push_back(k);
    auto reach = [&](bool flip) {
        std::vector<char> vis(static_cast<size_t>(d), 0);
        std::vector<int> stack = {0};
        vis[0] = 1;
        int count = 1;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int v = 0; v < d; ++v) {
                const auto& out = adj[static_cast<size_t>(flip ? v : u)];
                const int target = flip ? u : v;
                if (std::find(out.begin(), out.end(), target) == out.end()) continue;
                if (!vis[static_cast<size_t>(v)]) {
                    vis[static_cast<size_t>(v)] = 1;
                    ++count;
                    stack.push_back(v);
                }
            }
        }
        return count == d;
    };
    return reach(false) && reach(true);
}

// Brute-force irreducible modules of the level-1 ring: M_1^2 = I with
// non-negative integer entries; full scan over entries 0..2 for ranks 1 and 2.
std::set<std::vector<Int>> level1_oracle() {
    std::set<std::vector<Int>> out;
    for (int d = 1; d <= 2; ++d) {
        const int cells = d * d;
        std::vector<long> e(static_cast<size_t>(cells), 0);
        while (true) {
            IntMat m(d, d);
            for (int f = 0; f < cells; ++f) m.a[static_cast<size_t>(f)] = e[static_cast<size_t>(f)];
            if (m * m == IntMat::identity(d) && strongly_connected({m}, d))
                out.insert(oracles::smallest_relabeling({IntMat::identity(d), m}));
            int p = 0;
            while (p < cells && e[static_cast<size_t>(p)] == 2) {
                e[static_cast<size_t>(p)] = 0;
                ++p;
            }
            if (p == cells) break;
            ++e[static_cast<size_t>(p)];
        }
    }
    return out;
}

// Brute-force irreducible modules of the level-2 ring up to rank 4.  The
// relations pin M_2 = M_1^2 - I as an involutive permutation fixed by M_1 on
// both sides.  Row sums of M_1^2 are then all 2, and every row of M_1 is
// nonzero (the diagonal of M_1^2 is positive), which forces every row sum of
// M_1 to be at most 2; the scan over such rows is therefore complete for any
// entry bound >= 2.
std::set<std::vector<Int>> level2_oracle(int max_rank) {
    std::set<std::vector<Int>> out;
    for (int d = 1; d <= max_rank; ++d) {
        std::vector<std::vector<long>> rows;
        for (int i = 0; i < d; ++i) {
            std::vector<long> r(static_cast<size_t>(d), 0);
            r[static_cast<size_t>(i)] = 1;
            rows.push_back(r); // e_i
            r[static_cast<size_t>(i)] = 2;
            rows.push_back(r); // 2 e_i
            for (int j = i + 1; j < d; ++j) {
                std::vector<long> s(static_cast<size_t>(d), 0);
                s[static_cast<size_t>(i)] = s[static_cast<size_t>(j)] = 1;
                rows.push_back(s); // e_i + e_j
            }
        }
        std::vector<size_t> pick(static_cast<size_t>(d), 0);
        while (true) {
            IntMat m1(d, d);
            for (int r = 0; r < d; ++r)
                for (int c = 0; c < d; ++c) m1(r, c) = rows[pick[static_cast<size_t>(r)]][static_cast<size_t>(c)];
            IntMat m2 = m1 * m1;
            for (int i = 0; i < d; ++i) m2(i, i) -= 1;
            bool ok = true;
            for (const Int& z : m2.a) ok = ok && (z == 0 || z == 1);
            ok = ok && m2 * m2 == IntMat::identity(d);
            ok = ok && m1 * m2 == m1 && m2 * m1 == m1;
            ok = ok && strongly_connected({m1, m2}, d);
            if (ok) out.insert(oracles::smallest_relabeling({IntMat::identity(d), m1, m2}));
            size_t p = 0;
            while (p < pick.size() && pick[p] == rows.size() - 1) pick[p++] = 0;
            if (p == pick.size()) break;
            ++pick[p];
        }
    }
    return out;
}

} // namespace

TEST_CASE("regular module is valid and based") {
    const ZPlusModule M = regular_module(sl2_fusion_ring(3));
    CHECK(verify_module(M).empty());
    CHECK(is_based(M));
    CHECK(is_irreducible(M));
    CHECK(is_indecomposable(M));
}

TEST_CASE("verify_module reports broken data") {
    ZPlusModule M = regular_module(sl2_fusion_ring(2));
    M.action[1](0, 0) = -1;
    CHECK_FALSE(verify_module(M).empty());

    ZPlusModule W = regular_module(sl2_fusion_ring(2));
    W.action[2](1, 1) += 1; // M_1 M_2 no longer matches the ring product
    CHECK_FALSE(verify_module(W).empty());

    ZPlusModule U = regular_module(sl2_fusion_ring(2));
    U.action[0](0, 1) = 1; // unit must act as the identity
    CHECK_FALSE(verify_module(U).empty());
}

TEST_CASE("indecomposable without being irreducible") {
    ZPlusModule M;
    M.ring = idempotent_ring();
    M.module_rank = 2;
    IntMat mx(2, 2);
    mx(0, 1) = 1;
    mx(1, 1) = 1; // x fixes m_1 and spills onto m_0; nothing returns to m_1
    M.action = {IntMat::identity(2), mx};
    CHECK(verify_module(M).empty());
    CHECK(is_indecomposable(M));
    CHECK_FALSE(is_irreducible(M));
}

TEST_CASE("the zero module is neither irreducible nor indecomposable") {
    ZPlusModule Z;
    Z.ring = sl2_fusion_ring(1);
    Z.module_rank = 0;
    Z.action.assign(2, IntMat(0, 0));
    CHECK(verify_module(Z).empty());
    CHECK_FALSE(is_irreducible(Z));
    CHECK_FALSE(is_indecomposable(Z));
}

TEST_CASE("direct sums decompose") {
    const ZPlusModule R = regular_module(sl2_fusion_ring(2));
    const ZPlusModule S = direct_sum(R, R);
    CHECK(verify_module(S).empty());
    CHECK(S.module_rank == 6);
    CHECK_FALSE(is_indecomposable(S));
    CHECK_FALSE(is_irreducible(S));

    ZPlusModule Z;
    Z.ring = R.ring;
    Z.module_rank = 0;
    Z.action.assign(3, IntMat(0, 0));
    const ZPlusModule same = direct_sum(R, Z);
    CHECK(module_equiv(same, R).has_value());
}

TEST_CASE("module_equiv finds a relabeling and respects its contract") {
    const ZPlusModule R = regular_module(sl2_fusion_ring(2));
    std::vector<int> perm = {2, 0, 1};
    ZPlusModule B = R;
    for (int i = 0; i < 3; ++i)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                B.action[static_cast<size_t>(i)](perm[static_cast<size_t>(r)], perm[static_cast<size_t>(c)]) =
                    R.action[static_cast<size_t>(i)](r, c);
    const auto sigma = module_equiv(R, B);
    REQUIRE(sigma.has_value());
    for (int i = 0; i < 3; ++i)
        for (int r = 0; r < 3; ++r)
            for (int c = 0; c < 3; ++c)
                CHECK(B.action[static_cast<size_t>(i)]((*sigma)[static_cast<size_t>(r)],
                                                       (*sigma)[static_cast<size_t>(c)]) ==
                      R.action[static_cast<size_t>(i)](r, c));

    const ZPlusModule other = regular_module(sl2_fusion_ring(1));
    CHECK_THROWS_AS((void)module_equiv(R, other), structural_error);
}

TEST_CASE("enumeration at level 1 matches the brute-force oracle") {
    const ZPlusRing R = sl2_fusion_ring(1);
    CHECK(module_search_bound(R) == 2);
    const auto found = enumerate_irreducible_modules(R, 2, 2);
    std::set<std::vector<Int>> keys;
    for (const ZPlusModule& M : found) keys.insert(oracles::smallest_relabeling(M.action));
    CHECK(keys.size() == found.size());
    CHECK(keys == level1_oracle());
    CHECK(found.size() == 2);
}

TEST_CASE("enumeration at level 2 matches the brute-force oracle") {
    const ZPlusRing R = sl2_fusion_ring(2);
    CHECK(module_search_bound(R) == 4);
    const auto found = enumerate_irreducible_modules(R, 4, 4);
    std::set<std::vector<Int>> keys;
    for (const ZPlusModule& M : found) {
        CHECK(verify_module(M).empty());
        CHECK(is_irreducible(M));
        keys.insert(oracles::smallest_relabeling(M.action));
    }
    CHECK(keys.size() == found.size());
    CHECK(keys == level2_oracle(4));

    // one of the irreducibles is not based: V1 acts by [[0,2],[1,0]]
    int based_count = 0;
    for (const ZPlusModule& M : found) based_count += is_based(M) ? 1 : 0;
    CHECK(found.size() == 2);
    CHECK(based_count == 1);
}

TEST_CASE("enumeration respects the entry bound and the node budget") {
    const ZPlusRing R = sl2_fusion_ring(2);
    // entries capped at 1: the non-based module (an entry of 2) disappears
    const auto small = enumerate_irreducible_modules(R, 4, 1);
    CHECK(small.size() == 1);
    CHECK_THROWS_AS((void)enumerate_irreducible_modules(sl2_fusion_ring(3), 4, 4, 1), budget_error);
}

TEST_CASE("enumeration over the trivial ring") {
    ZPlusRing T;
    T.rank = 1;
    T.labels = {"1"};
    T.unit_set = {0};
    T.c.assign(1, std::vector<std::vector<Int>>(1, std::vector<Int>(1, 1)));
    const auto found = enumerate_irreducible_modules(T, 3, 3);
    CHECK(found.size() == 1);
    CHECK(found[0].module_rank == 1);
}
