#include "fusion/based_module.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <set>

#include "fusion/canonical.hpp"

namespace fusion {

void ZPlusModule::check_shape() const {
    ring.check_shape();
    if (module_rank < 0) throw structural_error("module: negative rank");
    if (static_cast<int>(action.size()) != ring.rank)
        throw structural_error("module: need one action matrix per ring basis element");
    for (const IntMat& m : action)
        if (m.rows != module_rank || m.cols != module_rank)
            throw structural_error("module: action matrix has wrong shape");
}

std::vector<std::string> verify_module(const ZPlusModule& M) {
    M.check_shape();
    std::vector<std::string> findings;
    const int r = M.ring.rank, d = M.module_rank;

    for (int i = 0; i < r; ++i)
        for (const Int& v : M.action[i].a)
            if (v < 0) {
                findings.push_back(fmt::format("negative action entry in M_{}", i));
                break;
            }

    IntMat unit(d, d);
    for (int i : M.ring.unit_set) unit = unit + M.action[i];
    if (unit != IntMat::identity(d)) findings.push_back("unit does not act as the identity");

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j) {
            IntMat rhs(d, d);
            for (int k = 0; k < r; ++k) {
                const Int& cv = M.ring.cc(i, j, k);
                if (cv == 0) continue;
                for (size_t t = 0; t < rhs.a.size(); ++t) rhs.a[t] += cv * M.action[k].a[t];
            }
            if (M.action[i] * M.action[j] != rhs)
                findings.push_back(
                    fmt::format("compatibility fails: M_{} M_{} != sum_k c[{}][{}][k] M_k", i, j, i, j));
        }
    return findings;
}

bool is_based(const ZPlusModule& M) {
    M.check_shape();
    if (!M.ring.involution)
        throw std::invalid_argument("is_based: ring carries no involution");
    const std::vector<int>& s = *M.ring.involution;
    for (int i = 0; i < M.ring.rank; ++i)
        if (M.action[s[i]] != transpose(M.action[i])) return false;
    return true;
}

namespace {

// adjacency[j] = indices k with some b_i moving m_j to m_k (directed support graph)
std::vector<std::vector<int>> support_graph(const ZPlusModule& M) {
    const int d = M.module_rank;
    std::vector<std::vector<int>> adj(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int k = 0; k < d; ++k) {
            bool hit = false;
            for (const IntMat& m : M.action)
                if (m(k, j) > 0) { hit = true; break; }
            if (hit) adj[j].push_back(k);
        }
    return adj;
}

int reach_count(const std::vector<std::vector<int>>& adj, bool reversed) {
    const int d = static_cast<int>(adj.size());
    std::vector<std::vector<int>> g(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int k : adj[j]) (reversed ? g[k] : g[j]).push_back(reversed ? j : k);
    std::vector<char> seen(static_cast<size_t>(d), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : g[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count;
}

} // namespace

bool is_indecomposable(const ZPlusModule& M) {
    M.check_shape();
    const int d = M.module_rank;
    if (d == 0) return false;
    auto adj = support_graph(M);
    // undirected connectivity
    std::vector<std::vector<int>> sym(static_cast<size_t>(d));
    for (int j = 0; j < d; ++j)
        for (int k : adj[j]) {
            sym[j].push_back(k);
            sym[k].push_back(j);
        }
    std::vector<char> seen(static_cast<size_t>(d), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w : sym[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == d;
}

bool is_irreducible(const ZPlusModule& M) {
    M.check_shape();
    const int d = M.module_rank;
    if (d == 0) return false;
    auto adj = support_graph(M);
    // a proper nonempty action-closed subset exists iff the graph is not strongly connected
    return reach_count(adj, false) == d && reach_count(adj, true) == d;
}

namespace {

bool same_ring(const ZPlusRing& A, const ZPlusRing& B) {
    return A.rank == B.rank && A.unit_set == B.unit_set && A.c == B.c;
}

} // namespace

std::optional<std::vector<int>> module_equiv(const ZPlusModule& A, const ZPlusModule& B) {
    A.check_shape();
    B.check_shape();
    if (!same_ring(A.ring, B.ring))
        throw structural_error("module_equiv: modules live over different rings");
    if (A.module_rank != B.module_rank) return std::nullopt;
    return find_isomorphism(A.action, B.action);
}

ZPlusModule direct_sum(const ZPlusModule& A, const ZPlusModule& B) {
    A.check_shape();
    B.check_shape();
    if (!same_ring(A.ring, B.ring))
        throw structural_error("direct_sum: modules live over different rings");
    ZPlusModule S;
    S.ring = A.ring;
    S.module_rank = A.module_rank + B.module_rank;
    S.based_flag = A.based_flag && B.based_flag;
    for (int i = 0; i < A.ring.rank; ++i) {
        IntMat m(S.module_rank, S.module_rank);
        for (int x = 0; x < A.module_rank; ++x)
            for (int y = 0; y < A.module_rank; ++y) m(x, y) = A.action[i](x, y);
        for (int x = 0; x < B.module_rank; ++x)
            for (int y = 0; y < B.module_rank; ++y)
                m(A.module_rank + x, A.module_rank + y) = B.action[i](x, y);
        S.action.push_back(std::move(m));
    }
    return S;
}

namespace {

// Backtracking search over action-matrix entries.  Unit matrices are pinned by
// a coloring (they are complementary 0/1 diagonal projections), the remaining
// entries are assigned in order with exact partial checks of every
// compatibility equation M_i M_j = sum_k c[i][j][k] M_k and forced-entry
// propagation whenever an equation has a single undetermined slot left.
struct ModuleSearch {
    const ZPlusRing& R;
    int r, d;
    long long me; // entry bound
    long budget;
    std::vector<char> is_unit;
    std::vector<std::vector<std::pair<int, long long>>> rhs_terms; // (i,j) -> {(k, c)}
    std::vector<std::vector<std::pair<int, int>>> rhs_occ;         // k -> {(i,j) with c != 0}
    std::vector<std::vector<long long>> val;                       // val[i][a*d+b], -1 unassigned
    std::vector<std::pair<int, int>> trail;
    std::vector<std::pair<int, int>> order; // DFS order of non-unit entries
    std::set<std::vector<Int>> seen;
    std::vector<std::pair<std::vector<Int>, ZPlusModule>> found;

    ModuleSearch(const ZPlusRing& ring, int rank, long long max_entry, long node_budget)
        : R(ring), r(ring.rank), d(rank), me(max_entry), budget(node_budget) {
        is_unit.assign(static_cast<size_t>(r), 0);
        for (int i : R.unit_set) is_unit[static_cast<size_t>(i)] = 1;
        rhs_terms.assign(static_cast<size_t>(r) * r, {});
        rhs_occ.assign(static_cast<size_t>(r), {});
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k) {
                    const Int& cv = R.cc(i, j, k);
                    if (cv == 0) continue;
                    if (!cv.fits_slong_p())
                        throw structural_error("enumeration: structure constant too large");
                    rhs_terms[static_cast<size_t>(i) * r + j].push_back({k, cv.get_si()});
                    rhs_occ[static_cast<size_t>(k)].push_back({i, j});
                }
        for (int i = 0; i < r; ++i) {
            if (is_unit[static_cast<size_t>(i)]) continue;
            for (int f = 0; f < d * d; ++f) order.push_back({i, f});
        }
    }

    long long& at(int i, int a, int b) { return val[static_cast<size_t>(i)][static_cast<size_t>(a) * d + b]; }

    // 1 ok, 0 contradiction; forced entries are appended to the queue
    bool eval_entry(int i, int j, int a, int b, std::vector<std::pair<int, int>>& queue) {
        long long lhs = 0, lhs_cap = 0;
        int lhs_unk = 0, unk_t = -1;
        bool unk_left = false, unk_both = false;
        for (int t = 0; t < d; ++t) {
            const long long af = at(i, a, t), bf = at(j, t, b);
            if (af == 0 || bf == 0) continue;
            if (af > 0 && bf > 0) {
                lhs += af * bf;
            } else {
                ++lhs_unk;
                unk_t = t;
                unk_left = af < 0 && bf > 0;
                unk_both = af < 0 && bf < 0;
                lhs_cap += unk_both ? me * me : me * (af > 0 ? af : bf);
            }
        }
        long long rhs = 0, rhs_cap = 0;
        int rhs_unk = 0, unk_k = -1;
        long long unk_c = 0;
        for (const auto& [k, cv] : rhs_terms[static_cast<size_t>(i) * r + j]) {
            const long long kv = at(k, a, b);
            if (kv < 0) {
                ++rhs_unk;
                unk_k = k;
                unk_c = cv;
                rhs_cap += cv * me;
            } else {
                rhs += cv * kv;
            }
        }
        if (lhs > rhs + rhs_cap) return false;
        if (rhs > lhs + lhs_cap) return false;
        if (lhs_unk == 0 && rhs_unk == 1) {
            const long long residue = lhs - rhs;
            if (residue % unk_c != 0) return false;
            const long long q = residue / unk_c;
            if (q < 0 || q > me) return false;
            set_value(unk_k, a * d + b, q, queue);
        } else if (rhs_unk == 0 && lhs_unk == 1 && !unk_both) {
            const long long residue = rhs - lhs;
            const long long f = unk_left ? at(j, unk_t, b) : at(i, a, unk_t);
            if (residue % f != 0) return false;
            const long long q = residue / f;
            if (q > me) return false;
            if (unk_left)
                set_value(i, a * d + unk_t, q, queue);
            else
                set_value(j, unk_t * d + b, q, queue);
        }
        return true;
    }

    void set_value(int i, int flat, long long v, std::vector<std::pair<int, int>>& queue) {
        if (--budget < 0) throw budget_error("module enumeration exceeded its node budget");
        val[static_cast<size_t>(i)][static_cast<size_t>(flat)] = v;
        trail.push_back({i, flat});
        queue.push_back({i, flat});
    }

    // propagate consequences of everything on the queue; false on contradiction
    bool drain(std::vector<std::pair<int, int>>& queue) {
        while (!queue.empty()) {
            auto [m, flat] = queue.back();
            queue.pop_back();
            const int a = flat / d, b = flat % d;
            for (int j = 0; j < r; ++j)
                for (int b2 = 0; b2 < d; ++b2)
                    if (!eval_entry(m, j, a, b2, queue)) return false;
            for (int i2 = 0; i2 < r; ++i2)
                for (int a2 = 0; a2 < d; ++a2)
                    if (!eval_entry(i2, m, a2, b, queue)) return false;
            for (const auto& [i2, j2] : rhs_occ[static_cast<size_t>(m)])
                if (!eval_entry(i2, j2, a, b, queue)) return false;
        }
        return true;
    }

    void leaf() {
        ZPlusModule M;
        M.ring = R;
        M.module_rank = d;
        for (int i = 0; i < r; ++i) {
            IntMat m(d, d);
            for (int f = 0; f < d * d; ++f)
                m.a[static_cast<size_t>(f)] = static_cast<long>(val[static_cast<size_t>(i)][static_cast<size_t>(f)]);
            M.action.push_back(std::move(m));
        }
        if (!verify_module(M).empty()) return; // int64 pruning is exact, but stay defensive
        if (!is_irreducible(M)) return;
        if (R.involution) M.based_flag = is_based(M);
        CanonicalForm cf = canonical_form(M.action);
        if (seen.insert(cf.encoding).second) found.push_back({cf.encoding, std::move(M)});
    }

    void dfs(size_t u) {
        while (u < order.size() && val[static_cast<size_t>(order[u].first)][static_cast<size_t>(order[u].second)] >= 0)
            ++u;
        if (u == order.size()) {
            leaf();
            return;
        }
        const auto [i, flat] = order[u];
        const size_t mark = trail.size();
        for (long long v = 0; v <= me; ++v) {
            std::vector<std::pair<int, int>> queue;
            set_value(i, flat, v, queue);
            if (drain(queue)) dfs(u + 1);
            while (trail.size() > mark) {
                auto [ti, tf] = trail.back();
                trail.pop_back();
                val[static_cast<size_t>(ti)][static_cast<size_t>(tf)] = -1;
            }
        }
    }

    void run_coloring(const std::vector<int>& color) {
        val.assign(static_cast<size_t>(r), std::vector<long long>(static_cast<size_t>(d) * d, -1));
        trail.clear();
        for (int u : R.unit_set)
            for (int a = 0; a < d; ++a)
                for (int b = 0; b < d; ++b) at(u, a, b) = (a == b && color[static_cast<size_t>(a)] == u) ? 1 : 0;
        // full initial sweep so unit projections interact with the equations
        std::vector<std::pair<int, int>> queue;
        bool ok = true;
        for (int i = 0; ok && i < r; ++i)
            for (int j = 0; ok && j < r; ++j)
                for (int a = 0; ok && a < d; ++a)
                    for (int b = 0; ok && b < d; ++b)
                        if (!eval_entry(i, j, a, b, queue)) ok = false;
        if (ok && drain(queue)) dfs(0);
    }
};

} // namespace

std::vector<ZPlusModule> enumerate_irreducible_modules(const ZPlusRing& R, int max_rank,
                                                       const Int& max_entry, long node_budget) {
    R.check_shape();
    if (max_entry < 0) throw structural_error("enumeration: negative entry bound");
    if (max_entry > 1'000'000) throw structural_error("enumeration: entry bound too large");
    const long long me = max_entry.get_si();

    std::vector<std::pair<std::vector<Int>, ZPlusModule>> all;
    std::set<std::vector<Int>> seen;
    for (int d = 1; d <= max_rank; ++d) {
        ModuleSearch s(R, d, me, node_budget);
        s.seen = seen;
        // every way the unit idempotents can split the basis
        const int nu = static_cast<int>(R.unit_set.size());
        std::vector<int> color(static_cast<size_t>(d), R.unit_set[0]);
        while (true) {
            s.run_coloring(color);
            int pos = 0;
            for (; pos < d; ++pos) {
                const int ci = static_cast<int>(std::find(R.unit_set.begin(), R.unit_set.end(),
                                                          color[static_cast<size_t>(pos)]) -
                                                R.unit_set.begin());
                if (ci + 1 < nu) {
                    color[static_cast<size_t>(pos)] = R.unit_set[static_cast<size_t>(ci + 1)];
                    break;
                }
                color[static_cast<size_t>(pos)] = R.unit_set[0];
            }
            if (pos == d) break;
        }
        node_budget = s.budget; // budget is shared across ranks
        seen = std::move(s.seen);
        for (auto& p : s.found) all.push_back(std::move(p));
    }
    std::sort(all.begin(), all.end(), [](const auto& x, const auto& y) {
        if (x.second.module_rank != y.second.module_rank)
            return x.second.module_rank < y.second.module_rank;
        return x.first < y.first;
    });
    std::vector<ZPlusModule> out;
    out.reserve(all.size());
    for (auto& p : all) out.push_back(std::move(p.second));
    return out;
}

} // namespace fusion
