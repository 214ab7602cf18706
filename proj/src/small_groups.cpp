#include "fusion/small_groups.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

#include "fusion/errors.hpp"

namespace fusion {

void SmallGroup::check_shape() const {
    if (order < 1) throw structural_error("group order must be positive");
    if (order > 16) throw structural_error("group order above 16 is out of table scope");
    if (static_cast<int>(table.size()) != order) throw structural_error("group table has the wrong number of rows");
    for (const auto& row : table) {
        if (static_cast<int>(row.size()) != order) throw structural_error("group table row has the wrong length");
        for (int v : row)
            if (v < 0 || v >= order) throw structural_error("group table entry out of range");
    }
    if (!labels.empty() && static_cast<int>(labels.size()) != order)
        throw structural_error("group label count must match the order");
}

namespace {

int find_identity(const SmallGroup& G) {
    for (int e = 0; e < G.order; ++e) {
        bool ok = true;
        for (int g = 0; g < G.order && ok; ++g) ok = G.mul(e, g) == g && G.mul(g, e) == g;
        if (ok) return e;
    }
    return -1;
}

std::vector<int> inverses(const SmallGroup& G, int e) {
    std::vector<int> inv(static_cast<size_t>(G.order), -1);
    for (int g = 0; g < G.order; ++g)
        for (int h = 0; h < G.order; ++h)
            if (G.mul(g, h) == e && G.mul(h, g) == e) inv[static_cast<size_t>(g)] = h;
    return inv;
}

int element_order(const SmallGroup& G, int e, int g) {
    int x = g, n = 1;
    while (x != e) {
        x = G.mul(x, g);
        ++n;
        if (n > G.order) throw structural_error("group table is not a group: runaway element order");
    }
    return n;
}

SmallGroup require_group(const SmallGroup& G) {
    G.check_shape();
    const std::vector<std::string> findings = verify_group(G);
    if (!findings.empty()) throw std::invalid_argument("not a group: " + findings.front());
    return G;
}

SmallGroup cyclic_group(int n) {
    SmallGroup G;
    G.order = n;
    G.table.assign(static_cast<size_t>(n), std::vector<int>(static_cast<size_t>(n)));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) G.table[static_cast<size_t>(a)][static_cast<size_t>(b)] = (a + b) % n;
    for (int a = 0; a < n; ++a) G.labels.push_back(fmt::format("{}", a));
    return G;
}

SmallGroup dihedral8() {
    // Element r^i s^j at index i + 4j.
    SmallGroup G;
    G.order = 8;
    G.table.assign(8, std::vector<int>(8));
    for (int i1 = 0; i1 < 4; ++i1)
        for (int j1 = 0; j1 < 2; ++j1)
            for (int i2 = 0; i2 < 4; ++i2)
                for (int j2 = 0; j2 < 2; ++j2) {
                    const int i = ((j1 == 0 ? i1 + i2 : i1 - i2) % 4 + 4) % 4;
                    const int j = (j1 + j2) % 2;
                    G.table[static_cast<size_t>(i1 + 4 * j1)][static_cast<size_t>(i2 + 4 * j2)] = i + 4 * j;
                }
    G.labels = {"e", "r", "r2", "r3", "s", "rs", "r2s", "r3s"};
    return G;
}

SmallGroup quaternion8() {
    // Element (sign s, axis a) at index a + 4s, axes 1, i, j, k.
    auto axis_mul = [](int a, int b, int& sign) {
        sign = 0;
        if (a == 0) return b;
        if (b == 0) return a;
        if (a == b) {
            sign = 1;
            return 0;
        }
        const bool cyclic = (a == 1 && b == 2) || (a == 2 && b == 3) || (a == 3 && b == 1);
        sign = cyclic ? 0 : 1;
        return 6 - a - b;
    };
    SmallGroup G;
    G.order = 8;
    G.table.assign(8, std::vector<int>(8));
    for (int s1 = 0; s1 < 2; ++s1)
        for (int a1 = 0; a1 < 4; ++a1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int a2 = 0; a2 < 4; ++a2) {
                    int sign = 0;
                    const int a = axis_mul(a1, a2, sign);
                    const int s = (s1 + s2 + sign) % 2;
                    G.table[static_cast<size_t>(a1 + 4 * s1)][static_cast<size_t>(a2 + 4 * s2)] = a + 4 * s;
                }
    G.labels = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    return G;
}

SmallGroup direct_product(const SmallGroup& A, const SmallGroup& B) {
    SmallGroup G;
    G.order = A.order * B.order;
    if (G.order > 16) throw structural_error("product group order above 16 is out of table scope");
    G.table.assign(static_cast<size_t>(G.order), std::vector<int>(static_cast<size_t>(G.order)));
    auto idx = [&](int a, int b) { return a * B.order + b; };
    for (int a1 = 0; a1 < A.order; ++a1)
        for (int b1 = 0; b1 < B.order; ++b1)
            for (int a2 = 0; a2 < A.order; ++a2)
                for (int b2 = 0; b2 < B.order; ++b2)
                    G.table[static_cast<size_t>(idx(a1, b1))][static_cast<size_t>(idx(a2, b2))] =
                        idx(A.mul(a1, a2), B.mul(b1, b2));
    for (int a = 0; a < A.order; ++a)
        for (int b = 0; b < B.order; ++b)
            G.labels.push_back(fmt::format("{},{}", A.labels[static_cast<size_t>(a)], B.labels[static_cast<size_t>(b)]));
    return G;
}

SmallGroup factor_from_name(const std::string& name) {
    if (name == "D8") return dihedral8();
    if (name == "Q8") return quaternion8();
    if (name.size() >= 2 && name[0] == 'Z') {
        int n = 0;
        for (size_t i = 1; i < name.size(); ++i) {
            if (name[i] < '0' || name[i] > '9') throw structural_error("unknown group name: " + name);
            n = n * 10 + (name[i] - '0');
        }
        if (n < 1 || n > 16) throw structural_error("cyclic order out of range in group name: " + name);
        return cyclic_group(n);
    }
    throw structural_error("unknown group name: " + name);
}

SmallGroup restrict_to(const SmallGroup& G, const std::vector<int>& elements) {
    std::map<int, int> index;
    for (size_t i = 0; i < elements.size(); ++i) index[elements[i]] = static_cast<int>(i);
    SmallGroup H;
    H.order = static_cast<int>(elements.size());
    H.table.assign(elements.size(), std::vector<int>(elements.size()));
    for (size_t a = 0; a < elements.size(); ++a)
        for (size_t b = 0; b < elements.size(); ++b) {
            const auto it = index.find(G.mul(elements[a], elements[b]));
            if (it == index.end()) throw structural_error("element set is not closed under multiplication");
            H.table[a][b] = it->second;
        }
    for (int g : elements) H.labels.push_back(G.labels.empty() ? fmt::format("{}", g) : G.labels[static_cast<size_t>(g)]);
    return H;
}

std::vector<int> closure(const SmallGroup& G, std::set<int> seed) {
    std::vector<int> frontier(seed.begin(), seed.end());
    while (!frontier.empty()) {
        std::vector<int> next;
        for (int g : seed)
            for (int h : frontier) {
                for (int p : {G.mul(g, h), G.mul(h, g)})
                    if (seed.insert(p).second) next.push_back(p);
            }
        frontier = std::move(next);
    }
    return {seed.begin(), seed.end()};
}

std::vector<std::vector<int>> all_subgroups(const SmallGroup& G, int e) {
    std::set<std::vector<int>> found;
    std::vector<std::vector<int>> queue;
    const std::vector<int> trivial = closure(G, {e});
    found.insert(trivial);
    queue.push_back(trivial);
    while (!queue.empty()) {
        const std::vector<int> H = std::move(queue.back());
        queue.pop_back();
        for (int g = 0; g < G.order; ++g) {
            if (std::binary_search(H.begin(), H.end(), g)) continue;
            std::set<int> seed(H.begin(), H.end());
            seed.insert(g);
            std::vector<int> bigger = closure(G, std::move(seed));
            if (found.insert(bigger).second) queue.push_back(bigger);
        }
    }
    return {found.begin(), found.end()};
}

// Invariant-factor chains d1 | d2 | ... | dk with product n.
void factor_chains(int n, int min_d, std::vector<int>& acc, std::vector<std::vector<int>>& out) {
    if (n == 1) {
        out.push_back(acc);
        return;
    }
    for (int d = min_d; d <= n; ++d) {
        if (n % d != 0) continue;
        if (!acc.empty() && d % acc.back() != 0) continue;
        acc.push_back(d);
        factor_chains(n / d, d, acc, out);
        acc.pop_back();
    }
}

std::vector<int> chain_order_multiset(const std::vector<int>& chain) {
    std::vector<int> orders;
    std::vector<int> tuple(chain.size(), 0);
    for (;;) {
        int o = 1;
        for (size_t i = 0; i < chain.size(); ++i)
            o = static_cast<int>(lcm_long(o, chain[i] / gcd_long(chain[i], tuple[i])));
        orders.push_back(o);
        size_t i = 0;
        while (i < chain.size() && ++tuple[i] == chain[i]) tuple[i++] = 0;
        if (i == chain.size()) break;
    }
    std::sort(orders.begin(), orders.end());
    return orders;
}

std::string chain_name(const std::vector<int>& chain) {
    if (chain.empty()) return "Z1";
    std::string name;
    for (size_t i = 0; i < chain.size(); ++i) name += fmt::format("{}Z{}", i ? "x" : "", chain[i]);
    return name;
}

int count_involutions(const SmallGroup& G, int e) {
    int c = 0;
    for (int g = 0; g < G.order; ++g)
        if (g != e && G.mul(g, g) == e) ++c;
    return c;
}

std::vector<int> center_of(const SmallGroup& G) {
    std::vector<int> z;
    for (int g = 0; g < G.order; ++g) {
        bool central = true;
        for (int h = 0; h < G.order && central; ++h) central = G.mul(g, h) == G.mul(h, g);
        if (central) z.push_back(g);
    }
    return z;
}

bool has_quaternion_subgroup(const SmallGroup& G, int e) {
    for (const auto& H : all_subgroups(G, e)) {
        if (H.size() != 8) continue;
        const SmallGroup sub = restrict_to(G, H);
        const int se = find_identity(sub);
        bool abelian = true;
        for (int a = 0; a < 8 && abelian; ++a)
            for (int b = 0; b < 8 && abelian; ++b) abelian = sub.mul(a, b) == sub.mul(b, a);
        if (!abelian && count_involutions(sub, se) == 1) return true;
    }
    return false;
}

std::string iso_tag_order16_nonabelian(const SmallGroup& G, int e) {
    switch (count_involutions(G, e)) {
        case 9:
            return "D16";
        case 11:
            return "D8xZ2";
        case 5:
            return "SD16";
        case 1:
            return "Q16";
        case 3: {
            int max_order = 1;
            for (int g = 0; g < G.order; ++g) max_order = std::max(max_order, element_order(G, e, g));
            if (max_order == 8) return "M4(2)";
            return has_quaternion_subgroup(G, e) ? "Q8xZ2" : "Z4:Z4";
        }
        case 7: {
            const std::vector<int> z = center_of(G);
            if (z.size() != 4) throw structural_error("unrecognized group of order 16");
            const SmallGroup zc = restrict_to(G, z);
            const int ze = find_identity(zc);
            bool cyclic = false;
            for (int g = 0; g < 4; ++g) cyclic = cyclic || element_order(zc, ze, g) == 4;
            return cyclic ? "D8oZ4" : "(Z2xZ2):Z4";
        }
        default:
            throw structural_error("unrecognized group of order 16");
    }
}

// Schur multiplier orders for the nonabelian isomorphism types of order <= 16.
int nonabelian_multiplier(const std::string& tag) {
    static const std::map<std::string, int> table = {
        {"S3", 1},     {"D8", 2},     {"Q8", 1},      {"D10", 1},   {"D12", 2},
        {"A4", 2},     {"Dic3", 1},   {"D14", 1},     {"D16", 2},   {"SD16", 1},
        {"Q16", 1},    {"M4(2)", 1},  {"D8xZ2", 8},   {"Q8xZ2", 4}, {"D8oZ4", 4},
        {"Z4:Z4", 2},  {"(Z2xZ2):Z4", 2}};
    const auto it = table.find(tag);
    if (it == table.end()) throw structural_error("no Schur multiplier entry for " + tag);
    return it->second;
}

int multiplier_order(const std::string& tag, const std::vector<int>& chain, bool abelian) {
    if (abelian) {
        // For d1 | d2 | ... | dk the pairwise gcds collapse to the earlier
        // factor, so the multiplier order is prod_{i<j} d_i.
        int m = 1;
        for (size_t i = 0; i + 1 < chain.size(); ++i)
            for (size_t j = i + 1; j < chain.size(); ++j) m *= chain[i];
        return m;
    }
    return nonabelian_multiplier(tag);
}

struct IsoInfo {
    std::string tag;
    int multiplier = 1;
};

IsoInfo analyze(const SmallGroup& G) {
    const int e = find_identity(G);
    if (e < 0) throw structural_error("group has no identity");
    bool abelian = true;
    for (int a = 0; a < G.order && abelian; ++a)
        for (int b = 0; b < G.order && abelian; ++b) abelian = G.mul(a, b) == G.mul(b, a);

    if (abelian) {
        std::vector<int> actual;
        for (int g = 0; g < G.order; ++g) actual.push_back(element_order(G, e, g));
        std::sort(actual.begin(), actual.end());
        std::vector<std::vector<int>> chains;
        std::vector<int> acc;
        factor_chains(G.order, 2, acc, chains);
        for (const auto& chain : chains)
            if (chain_order_multiset(chain) == actual)
                return {chain_name(chain), multiplier_order("", chain, true)};
        throw structural_error("unrecognized abelian group");
    }

    std::string tag;
    switch (G.order) {
        case 6:
            tag = "S3";
            break;
        case 8:
            tag = count_involutions(G, e) == 5 ? "D8" : "Q8";
            break;
        case 10:
            tag = "D10";
            break;
        case 12: {
            const int inv = count_involutions(G, e);
            tag = inv == 7 ? "D12" : (inv == 3 ? "A4" : "Dic3");
            break;
        }
        case 14:
            tag = "D14";
            break;
        case 16:
            tag = iso_tag_order16_nonabelian(G, e);
            break;
        default:
            throw structural_error(fmt::format("no nonabelian group of order {} fits the table", G.order));
    }
    return {tag, multiplier_order(tag, {}, false)};
}

} // namespace

std::vector<std::string> verify_group(const SmallGroup& G) {
    G.check_shape();
    std::vector<std::string> findings;
    [&] {
        for (int a = 0; a < G.order; ++a)
            for (int b = 0; b < G.order; ++b)
                for (int c = 0; c < G.order; ++c)
                    if (G.mul(G.mul(a, b), c) != G.mul(a, G.mul(b, c))) {
                        findings.push_back(fmt::format("associativity fails at ({}, {}, {})", a, b, c));
                        return;
                    }
    }();
    const int e = find_identity(G);
    if (e < 0) {
        findings.push_back("no two-sided identity element");
        return findings;
    }
    for (int g = 0; g < G.order; ++g) {
        bool has_inverse = false;
        for (int h = 0; h < G.order && !has_inverse; ++h)
            has_inverse = G.mul(g, h) == e && G.mul(h, g) == e;
        if (!has_inverse) {
            findings.push_back(fmt::format("element {} has no inverse", g));
            break;
        }
    }
    return findings;
}

SmallGroup group_from_name(const std::string& name) {
    if (name.empty()) throw structural_error("empty group name");
    std::vector<std::string> parts;
    std::string cur;
    for (char ch : name) {
        if (ch == 'x') {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += ch;
        }
    }
    parts.push_back(cur);
    SmallGroup G = factor_from_name(parts.front());
    for (size_t i = 1; i < parts.size(); ++i) G = direct_product(G, factor_from_name(parts[i]));
    G.check_shape();
    return G;
}

std::vector<SubgroupClass> subgroup_classes(const SmallGroup& G) {
    require_group(G);
    const int e = find_identity(G);
    const std::vector<int> inv = inverses(G, e);
    std::vector<std::vector<int>> subgroups = all_subgroups(G, e);
    std::sort(subgroups.begin(), subgroups.end());

    std::set<std::vector<int>> unseen(subgroups.begin(), subgroups.end());
    std::vector<SubgroupClass> classes;
    for (const auto& H : subgroups) {
        if (unseen.find(H) == unseen.end()) continue;
        std::set<std::vector<int>> orbit;
        for (int g = 0; g < G.order; ++g) {
            std::vector<int> conj;
            for (int h : H) conj.push_back(G.mul(G.mul(g, h), inv[static_cast<size_t>(g)]));
            std::sort(conj.begin(), conj.end());
            orbit.insert(std::move(conj));
        }
        for (const auto& member : orbit) unseen.erase(member);

        SubgroupClass cls;
        cls.representative = *orbit.begin();
        cls.class_size = static_cast<int>(orbit.size());
        const IsoInfo info = analyze(restrict_to(G, cls.representative));
        cls.iso_tag = info.tag;
        cls.schur_multiplier_order = info.multiplier;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const SubgroupClass& a, const SubgroupClass& b) {
        if (a.representative.size() != b.representative.size())
            return a.representative.size() < b.representative.size();
        return a.representative < b.representative;
    });
    return classes;
}

std::string iso_tag(const SmallGroup& G) { return analyze(require_group(G)).tag; }

Int module_category_count(const SmallGroup& G) {
    Int total = 0;
    for (const SubgroupClass& cls : subgroup_classes(G)) {
        if (cls.schur_multiplier_order > 2)
            throw std::invalid_argument(
                fmt::format("subgroup class {} has Schur multiplier order {}, out of the validated scope",
                            cls.iso_tag, cls.schur_multiplier_order));
        total += cls.schur_multiplier_order;
    }
    return total;
}

Int fiber_functor_count(const SmallGroup& G) {
    if (G.order > 8) throw std::invalid_argument("fiber functor count is validated for groups of order up to 8");
    Int count = 1;
    for (const SubgroupClass& cls : subgroup_classes(G))
        if (cls.iso_tag == "Z2xZ2") count += 1;
    return count;
}

} // namespace fusion
