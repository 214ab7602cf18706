#include "fusion/canonical.hpp"

#include <algorithm>
#include <numeric>

namespace fusion {

namespace {

// Entries appended when vertex v lands at position p: per matrix the diagonal
// entry, then both mixed entries against each already-placed position.  Block
// lengths depend only on p, so prefix comparison across branches is sound.
std::vector<Int> block_for(const std::vector<IntMat>& mats, const std::vector<int>& perm,
                           int p, int v) {
    std::vector<Int> b;
    b.reserve(mats.size() * (2 * static_cast<size_t>(p) + 1));
    for (const IntMat& m : mats) {
        b.push_back(m(v, v));
        for (int q = 0; q < p; ++q) {
            b.push_back(m(perm[q], v));
            b.push_back(m(v, perm[q]));
        }
    }
    return b;
}

struct Search {
    const std::vector<IntMat>& mats;
    int n;
    std::vector<int> cls; // swap-symmetry class of each vertex
    std::vector<int> perm, best_perm;
    std::vector<Int> cur, best;
    bool have_best = false;
    long long best_gen = 0; // bumped on every best replacement

    explicit Search(const std::vector<IntMat>& ms) : mats(ms), n(ms.empty() ? 0 : ms[0].rows) {
        // Vertices whose transposition is an automorphism of the whole tuple are
        // interchangeable everywhere; one representative per class suffices at
        // any branch point.  The relation is transitive: (u v) = (u w)(w v)(u w).
        cls.resize(n);
        std::iota(cls.begin(), cls.end(), 0);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) {
                if (cls[v] != v) continue;
                bool swap_ok = true;
                for (const IntMat& m : mats) {
                    if (m(u, u) != m(v, v) || m(u, v) != m(v, u)) { swap_ok = false; break; }
                    for (int w = 0; w < n && swap_ok; ++w) {
                        if (w == u || w == v) continue;
                        if (m(u, w) != m(v, w) || m(w, u) != m(w, v)) swap_ok = false;
                    }
                    if (!swap_ok) break;
                }
                if (swap_ok && cls[u] < cls[v]) cls[v] = cls[u];
            }
    }

    // The encoding is maximised lexicographically: large blocks reward placing
    // vertices adjacent to already-placed ones, so on sparse inputs the search
    // walks the structure contiguously and ties stay rare.  (Minimising would
    // favour scattering independent vertices first, where every choice ties.)
    // diff: 0 while equal to the best prefix, -1 once strictly above it.
    void dfs(int p, int diff, std::vector<char>& used) {
        if (p == n) {
            if (!have_best || diff < 0) {
                best = cur;
                best_perm = perm;
                have_best = true;
                ++best_gen;
            }
            return;
        }
        struct Cand {
            int v;
            std::vector<Int> block;
        };
        std::vector<Cand> cands;
        std::vector<int> seen_cls;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            if (std::find(seen_cls.begin(), seen_cls.end(), cls[v]) != seen_cls.end()) continue;
            seen_cls.push_back(cls[v]);
            cands.push_back({v, block_for(mats, perm, p, v)});
        }
        std::sort(cands.begin(), cands.end(),
                  [](const Cand& a, const Cand& b) { return b.block < a.block; });
        const size_t base = cur.size();
        for (const Cand& c : cands) {
            int d = diff;
            if (d == 0 && have_best) {
                // compare this block against the same segment of the best encoding
                int cmpres = 0;
                for (size_t i = 0; i < c.block.size(); ++i) {
                    const int cc = cmp(c.block[i], best[base + i]);
                    if (cc != 0) { cmpres = cc; break; }
                }
                if (cmpres < 0) break; // candidates sorted descending, the rest only shrink
                if (cmpres > 0) d = -1;
            }
            cur.insert(cur.end(), c.block.begin(), c.block.end());
            perm.push_back(c.v);
            used[c.v] = 1;
            const long long gen_before = best_gen;
            dfs(p + 1, d, used);
            used[c.v] = 0;
            perm.pop_back();
            cur.resize(base);
            // A replacement below this node makes the new best an extension of
            // cur, so the remaining siblings must compare against it afresh.
            if (best_gen != gen_before) diff = 0;
        }
    }
};

} // namespace

CanonicalForm canonical_form(const std::vector<IntMat>& mats) {
    for (const IntMat& m : mats)
        if (m.rows != m.cols || (!mats.empty() && m.rows != mats[0].rows))
            throw structural_error("canonical_form: matrices must be square and same size");
    Search s(mats);
    if (s.n == 0) return {{}, {}};
    std::vector<char> used(static_cast<size_t>(s.n), 0);
    s.dfs(0, 0, used);
    return {s.best_perm, s.best};
}

std::optional<std::vector<int>> find_isomorphism(const std::vector<IntMat>& a,
                                                 const std::vector<IntMat>& b) {
    if (a.size() != b.size()) return std::nullopt;
    if (!a.empty() && a[0].rows != b[0].rows) return std::nullopt;
    CanonicalForm ca = canonical_form(a), cb = canonical_form(b);
    if (ca.encoding != cb.encoding) return std::nullopt;
    const int n = a.empty() ? 0 : a[0].rows;
    std::vector<int> sigma(static_cast<size_t>(n));
    // position p holds ca.perm[p] in a and cb.perm[p] in b, so matching those
    // vertices matches the encodings entry for entry
    for (int p = 0; p < n; ++p) sigma[ca.perm[p]] = cb.perm[p];
    return sigma;
}

} // namespace fusion
