#include "fusion/dynkin.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <set>

#include "fusion/canonical.hpp"
#include "fusion/errors.hpp"
#include "fusion/polynomial.hpp"

namespace fusion {

bool type_admissible(const DynkinType& t) {
    switch (t.family) {
        case DynkinFamily::A: return t.rank >= 1;
        case DynkinFamily::D: return t.rank >= 4;
        case DynkinFamily::E: return t.rank >= 6 && t.rank <= 8;
        case DynkinFamily::T: return t.rank >= 1;
    }
    return false;
}

std::string type_name(const DynkinType& t) {
    static const char* fam = "ADET";
    return fmt::format("{}{}", fam[static_cast<int>(t.family)], t.rank);
}

std::optional<DynkinType> parse_type(const std::string& name) {
    if (name.size() < 2) return std::nullopt;
    DynkinType t;
    switch (name[0]) {
        case 'A': t.family = DynkinFamily::A; break;
        case 'D': t.family = DynkinFamily::D; break;
        case 'E': t.family = DynkinFamily::E; break;
        case 'T': t.family = DynkinFamily::T; break;
        default: return std::nullopt;
    }
    int r = 0;
    for (size_t i = 1; i < name.size(); ++i) {
        if (name[i] < '0' || name[i] > '9') return std::nullopt;
        r = r * 10 + (name[i] - '0');
        if (r > 1000000) return std::nullopt;
    }
    t.rank = r;
    if (!type_admissible(t)) return std::nullopt;
    return t;
}

bool type_less(const DynkinType& x, const DynkinType& y) {
    if (x.family != y.family) return static_cast<int>(x.family) < static_cast<int>(y.family);
    return x.rank < y.rank;
}

void LoopyGraph::check_shape() const {
    if (size < 1) throw structural_error("graph: size must be positive");
    if (adjacency.rows != size || adjacency.cols != size)
        throw structural_error("graph: adjacency shape does not match size");
    for (int i = 0; i < size; ++i)
        for (int j = 0; j < size; ++j) {
            if (adjacency(i, j) < 0) throw structural_error("graph: negative adjacency entry");
            if (adjacency(i, j) != adjacency(j, i)) throw structural_error("graph: adjacency not symmetric");
        }
}

bool graph_connected(const LoopyGraph& g) {
    g.check_shape();
    std::vector<char> seen(static_cast<size_t>(g.size), 0);
    std::vector<int> stack{0};
    seen[0] = 1;
    int count = 1;
    while (!stack.empty()) {
        int v = stack.back();
        stack.pop_back();
        for (int w = 0; w < g.size; ++w)
            if (w != v && g.adjacency(v, w) > 0 && !seen[w]) {
                seen[static_cast<size_t>(w)] = 1;
                ++count;
                stack.push_back(w);
            }
    }
    return count == g.size;
}

LoopyGraph build_graph(const DynkinType& t) {
    if (!type_admissible(t)) throw structural_error("inadmissible Dynkin type " + type_name(t));
    const int n = t.rank;
    LoopyGraph g;
    g.size = n;
    g.adjacency = IntMat(n, n);
    auto edge = [&](int a, int b) { g.adjacency(a, b) = g.adjacency(b, a) = 1; };
    auto path = [&](int upto) {
        for (int i = 0; i + 1 < upto; ++i) edge(i, i + 1);
    };
    switch (t.family) {
        case DynkinFamily::A: path(n); break;
        case DynkinFamily::D: // path 0..n-3 with a fork to n-2 and n-1
            path(n - 1);
            g.adjacency(n - 2, n - 1) = g.adjacency(n - 1, n - 2) = 0;
            edge(n - 3, n - 1);
            break;
        case DynkinFamily::T: // path with a loop on the last vertex
            path(n);
            g.adjacency(n - 1, n - 1) = 1;
            break;
        case DynkinFamily::E: // path 0..n-2 with an extra vertex on position 2
            path(n - 1);
            edge(2, n - 1);
            break;
    }
    return g;
}

int coxeter_number(const DynkinType& t) {
    if (!type_admissible(t)) throw structural_error("inadmissible Dynkin type " + type_name(t));
    switch (t.family) {
        case DynkinFamily::A: return t.rank + 1;
        case DynkinFamily::D: return 2 * t.rank - 2;
        case DynkinFamily::T: return 2 * t.rank + 1;
        case DynkinFamily::E: return t.rank == 6 ? 12 : t.rank == 7 ? 18 : 30;
    }
    return 0;
}

std::vector<int> spectrum_exponents(const IntMat& A, long h) {
    if (A.rows != A.cols) throw structural_error("spectrum: matrix not square");
    if (h < 2) throw structural_error("spectrum: h must be at least 2");
    IntPoly p = char_poly(A);
    std::vector<int> out;
    for (long n = 1; n <= 2 * h; ++n) {
        if ((2 * h) % n != 0) continue;
        const IntPoly& psi = cos_minimal_poly(n);
        int mult = 0;
        IntPoly q;
        while (poly_degree(p) >= poly_degree(psi) && poly_divides_monic(p, psi, q)) {
            p = q;
            ++mult;
        }
        if (mult == 0) continue;
        if (n <= 2) // roots 2 and -2 correspond to m = 0 and m = h, both out of range
            throw structural_error("spectrum: eigenvalue not of the form 2cos(pi m / h) with 0 < m < h");
        for (long j = 1; 2 * j < n; ++j) {
            if (gcd_long(j, n) != 1) continue;
            const long m = (2 * h / n) * j;
            for (int c = 0; c < mult; ++c) out.push_back(static_cast<int>(m));
        }
    }
    if (poly_degree(p) != 0)
        throw structural_error("spectrum: eigenvalue not of the form 2cos(pi m / h) with 0 < m < h");
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> coxeter_exponents(const DynkinType& t) {
    return spectrum_exponents(build_graph(t).adjacency, coxeter_number(t));
}

std::optional<DynkinType> recognize(const LoopyGraph& g) {
    g.check_shape();
    if (!graph_connected(g)) throw structural_error("recognize: graph must be connected");
    std::vector<DynkinType> candidates = {{DynkinFamily::A, g.size},
                                          {DynkinFamily::D, g.size},
                                          {DynkinFamily::E, g.size},
                                          {DynkinFamily::T, g.size}};
    for (const DynkinType& t : candidates) {
        if (!type_admissible(t)) continue;
        if (find_isomorphism({g.adjacency}, {build_graph(t).adjacency})) return t;
    }
    return std::nullopt;
}

bool spectral_radius_lt_2(const IntMat& adjacency) {
    if (adjacency.rows != adjacency.cols) throw structural_error("spectral test: matrix not square");
    const int n = adjacency.rows;
    RatMat m(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) m(i, j) = Rat(Int(i == j ? 2 : 0) - adjacency(i, j));
    // positive definite iff all elimination pivots stay positive
    for (int k = 0; k < n; ++k) {
        if (m(k, k) <= 0) return false;
        for (int i = k + 1; i < n; ++i) {
            if (m(i, k) == 0) continue;
            const Rat f = m(i, k) / m(k, k);
            for (int j = k; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return true;
}

namespace {

// Extensions of a fixed parent by one vertex: incidence subsets w (0/1) and a
// loop count in {0,1}.  With G = inverse of (2I - A_parent), which is
// entrywise non-negative, the extension keeps the spectral radius below 2
// exactly when (2 - loop) - w^T G w > 0; the quadratic form only grows as the
// support grows, so the subset search prunes exactly.
void extend_parent(const IntMat& parent, std::vector<IntMat>& children) {
    const int n = parent.rows;
    RatMat g2(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) g2(i, j) = Rat(Int(i == j ? 2 : 0) - parent(i, j));
    RatMat inv;
    if (!rat_inverse(g2, inv)) throw structural_error("extension: parent matrix singular");

    std::vector<int> support;
    std::vector<Rat> u(static_cast<size_t>(n), Rat(0)); // u = inv * w
    Rat f(0);                                           // f = w^T inv w

    auto emit = [&](int loop) {
        IntMat child(n + 1, n + 1);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) child(i, j) = parent(i, j);
        for (int s : support) child(s, n) = child(n, s) = 1;
        child(n, n) = loop;
        children.push_back(std::move(child));
    };

    auto dfs = [&](auto&& self, int next) -> void {
        if (!support.empty()) {
            if (f < 2) emit(0);
            if (f < 1) emit(1);
        }
        if (f >= 2) return; // no extension can recover
        for (int t = next; t < n; ++t) {
            Rat ft = f + 2 * u[static_cast<size_t>(t)] + inv(t, t);
            if (ft >= 2) continue;
            support.push_back(t);
            std::vector<Rat> saved = u;
            for (int i = 0; i < n; ++i) u[static_cast<size_t>(i)] += inv(i, t);
            std::swap(f, ft);
            self(self, t + 1);
            std::swap(f, ft);
            u = std::move(saved);
            support.pop_back();
        }
    };
    dfs(dfs, 0);
}

} // namespace

std::vector<LoopyGraph> enumerate_norm_lt_2(int max_size) {
    if (max_size < 1) throw structural_error("enumeration: max_size must be positive");
    std::vector<LoopyGraph> out;
    std::vector<IntMat> current; // representatives of the previous size
    for (int s = 1; s <= max_size; ++s) {
        std::map<std::vector<Int>, IntMat> reps;
        if (s == 1) {
            IntMat a1(1, 1), t1(1, 1);
            t1(0, 0) = 1;
            reps.emplace(canonical_form({a1}).encoding, a1);
            reps.emplace(canonical_form({t1}).encoding, t1);
        } else {
            std::vector<IntMat> children;
            for (const IntMat& parent : current) extend_parent(parent, children);
            for (IntMat& c : children) {
                std::vector<Int> enc = canonical_form({c}).encoding;
                reps.emplace(std::move(enc), std::move(c));
            }
        }
        current.clear();
        for (auto& [enc, adj] : reps) {
            LoopyGraph g;
            g.size = s;
            g.adjacency = adj;
            out.push_back(g);
            current.push_back(std::move(adj));
        }
    }
    return out;
}

} // namespace fusion
