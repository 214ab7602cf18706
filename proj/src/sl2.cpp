#include "fusion/sl2.hpp"

#include <fmt/format.h>

#include <algorithm>

#include "fusion/errors.hpp"

namespace fusion {

ZPlusRing sl2_fusion_ring(int l) {
    if (l < 1) throw structural_error("level must be at least 1");
    const int r = l + 1;
    std::vector<IntMat> N;
    N.push_back(IntMat::identity(r));
    IntMat path(r, r);
    for (int i = 0; i + 1 < r; ++i) path(i, i + 1) = path(i + 1, i) = 1;
    N.push_back(path);
    for (int i = 2; i < r; ++i) N.push_back(path * N[static_cast<size_t>(i) - 1] - N[static_cast<size_t>(i) - 2]);

    ZPlusRing R;
    R.rank = r;
    for (int i = 0; i < r; ++i) R.labels.push_back(fmt::format("V{}", i));
    R.unit_set = {0};
    R.c.assign(static_cast<size_t>(r),
               std::vector<std::vector<Int>>(static_cast<size_t>(r), std::vector<Int>(static_cast<size_t>(r))));
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k) R.c[static_cast<size_t>(i)][static_cast<size_t>(j)][static_cast<size_t>(k)] = N[static_cast<size_t>(i)](k, j);
    std::vector<int> identity_inv(static_cast<size_t>(r));
    for (int i = 0; i < r; ++i) identity_inv[static_cast<size_t>(i)] = i;
    R.involution = identity_inv;
    return R;
}

BraidingScalar simple_current_braiding(int l) {
    if (l < 1) throw structural_error("level must be at least 1");
    BraidingScalar b;
    b.zeta4_power = (3 * (l % 4)) % 4;
    static const char* values[4] = {"1", "i", "-1", "-i"};
    b.value = values[b.zeta4_power];
    b.tag = (l % 2 == 0) ? "plain" : "twisted";
    return b;
}

NimrepResult nimrep_from_graph(const LoopyGraph& g, int l) {
    if (l < 1) throw structural_error("level must be at least 1");
    g.check_shape();
    if (!graph_connected(g)) throw structural_error("nimrep: graph must be connected");

    const int d = g.size;
    std::vector<IntMat> p;
    p.push_back(IntMat::identity(d));
    p.push_back(g.adjacency);
    for (int i = 2; i <= l + 1; ++i)
        p.push_back(g.adjacency * p[static_cast<size_t>(i) - 1] - p[static_cast<size_t>(i) - 2]);

    NimrepResult res;
    for (int i = 0; i <= l; ++i)
        for (const Int& v : p[static_cast<size_t>(i)].a)
            if (v < 0) {
                res.reason = fmt::format("p_{} of the adjacency has a negative entry", i);
                return res;
            }
    if (!is_zero(p[static_cast<size_t>(l) + 1])) {
        res.reason = fmt::format("p_{} of the adjacency is nonzero: the graph does not match Coxeter number {}",
                                 l + 1, l + 2);
        return res;
    }
    res.accepted = true;
    res.module.ring = sl2_fusion_ring(l);
    res.module.module_rank = d;
    res.module.action.assign(p.begin(), p.end() - 1);
    res.module.based_flag = is_based(res.module);
    return res;
}

std::vector<DynkinType> classify_nimreps(int l) {
    if (l < 1) throw structural_error("level must be at least 1");
    std::vector<DynkinType> out;
    for (const LoopyGraph& g : enumerate_norm_lt_2(l + 1)) {
        if (!nimrep_from_graph(g, l).accepted) continue;
        std::optional<DynkinType> t = recognize(g);
        if (!t) throw structural_error("internal: an accepted norm-<2 graph escaped recognition");
        out.push_back(*t);
    }
    std::sort(out.begin(), out.end(), type_less);
    return out;
}

CatalogRow module_category_exists(const DynkinType& t) {
    if (!type_admissible(t)) throw structural_error("inadmissible Dynkin type " + type_name(t));
    CatalogRow row;
    row.type = t;
    row.level = coxeter_number(t) - 2;
    switch (t.family) {
        case DynkinFamily::A:
            row.exists = true;
            row.algebra_object = {0};
            break;
        case DynkinFamily::D:
            row.exists = true;
            row.algebra_object = {0, row.level};
            break;
        case DynkinFamily::T:
            row.exists = false; // the Chebyshev test passes, the category does not exist
            row.algebra_object = {0, row.level};
            break;
        case DynkinFamily::E:
            row.exists = true;
            if (t.rank == 6)
                row.algebra_object = {0, 6};
            else if (t.rank == 7)
                row.algebra_object = {0, 8, 16};
            else
                row.algebra_object = {0, 10, 18, 28};
            break;
    }
    return row;
}

namespace {

bool same_structure(const ZPlusRing& A, const ZPlusRing& B) {
    return A.rank == B.rank && A.unit_set == B.unit_set && A.c == B.c;
}

} // namespace

std::vector<int> module_exponents(const ZPlusModule& M, int l) {
    M.check_shape();
    if (!same_structure(M.ring, sl2_fusion_ring(l)))
        throw std::invalid_argument(fmt::format("module is not over the level-{} ring", l));
    std::vector<int> ms;
    try {
        ms = spectrum_exponents(M.action[1], l + 2);
    } catch (const structural_error&) {
        throw std::invalid_argument(fmt::format("not a level-{} NIM-rep: eigenvalue outside the Coxeter spectrum", l));
    }
    for (int& m : ms) m -= 1;
    return ms;
}

EssentialPaths essential_path_dims(const LoopyGraph& g, int l) {
    NimrepResult res = nimrep_from_graph(g, l);
    if (!res.accepted) throw std::invalid_argument("essential paths: " + res.reason);
    EssentialPaths ep;
    ep.W = res.module.action;
    for (const IntMat& w : ep.W) {
        Int grade = 0;
        for (const Int& v : w.a) grade += v;
        ep.total += grade;
        ep.grade_totals.push_back(std::move(grade));
    }
    return ep;
}

ModularData modular_data(int l) {
    if (l < 1) throw structural_error("level must be at least 1");
    ModularData md;
    md.l = l;
    md.h = l + 2;
    const long n = 2 * md.h;
    md.S_hat.assign(static_cast<size_t>(l) + 1, std::vector<Cyc>(static_cast<size_t>(l) + 1));
    for (int i = 0; i <= l; ++i)
        for (int j = 0; j <= l; ++j) {
            const long e = static_cast<long>(i + 1) * (j + 1);
            md.S_hat[static_cast<size_t>(i)][static_cast<size_t>(j)] =
                cyc_sub(cyc_zeta(n, e), cyc_zeta(n, -e));
        }
    for (int j = 0; j <= l; ++j)
        md.T_class.push_back((static_cast<long>(j + 1) * (j + 1)) % (4 * md.h));
    return md;
}

} // namespace fusion
