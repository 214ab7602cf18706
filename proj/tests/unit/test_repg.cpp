#include <doctest.h>

#include <functional>
#include <map>

#include "fusion/small_groups.hpp"

using namespace fusion;

namespace {

SmallGroup make_group(int order, const std::function<int(int, int)>& mul) {
    SmallGroup G;
    G.order = order;
    G.table.assign(static_cast<size_t>(order), std::vector<int>(static_cast<size_t>(order), 0));
    G.labels.resize(static_cast<size_t>(order));
    for (int g = 0; g < order; ++g) {
        G.labels[static_cast<size_t>(g)] = "g" + std::to_string(g);
        for (int h = 0; h < order; ++h) G.table[static_cast<size_t>(g)][static_cast<size_t>(h)] = mul(g, h);
    }
    return G;
}

// symmetric group on 3 letters, elements as permutation one-line encodings
SmallGroup sym3() {
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {1, 2, 0}, {2, 0, 1}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}};
    auto compose = [&](int g, int h) {
        std::vector<int> r(3);
        for (int i = 0; i < 3; ++i) r[static_cast<size_t>(i)] = perms[static_cast<size_t>(g)][static_cast<size_t>(perms[static_cast<size_t>(h)][static_cast<size_t>(i)])];
        for (size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == r) return static_cast<int>(k);
        return -1;
    };
    return make_group(6, compose);
}

// alternating group on 4 letters
SmallGroup alt4() {
    std::vector<std::vector<int>> perms;
    std::vector<int> p = {0, 1, 2, 3};
    do {
        int inversions = 0;
        for (size_t i = 0; i < 4; ++i)
            for (size_t j = i + 1; j < 4; ++j)
                if (p[i] > p[j]) ++inversions;
        if (inversions % 2 == 0) perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));
    auto compose = [perms](int g, int h) {
        std::vector<int> r(4);
        for (int i = 0; i < 4; ++i) r[static_cast<size_t>(i)] = perms[static_cast<size_t>(g)][static_cast<size_t>(perms[static_cast<size_t>(h)][static_cast<size_t>(i)])];
        for (size_t k = 0; k < perms.size(); ++k)
            if (perms[k] == r) return static_cast<int>(k);
        return -1;
    };
    return make_group(12, compose);
}

// groups <r, s | r^8 = 1, s^2 = r^e2, s r s^-1 = r^t>, elements r^i s^j
SmallGroup two_generator_16(int t, int e2) {
    auto mul = [t, e2](int g, int h) {
        const int i = g % 8, j = g / 8, k = h % 8, m = h / 8;
        int ii = i + (j == 1 ? t * k : k);
        if (j == 1 && m == 1) ii += e2;
        return ((ii % 8 + 8) % 8) + 8 * ((j + m) % 2);
    };
    return make_group(16, mul);
}

// the central product D8 o Z4 (Pauli group): elements i^a X^b Z^c
SmallGroup pauli16() {
    auto mul = [](int g, int h) {
        const int a = g % 4, b = (g / 4) % 2, c = g / 8;
        const int a2 = h % 4, b2 = (h / 4) % 2, c2 = h / 8;
        const int phase = (a + a2 + 2 * c * b2) % 4;
        return phase + 4 * ((b + b2) % 2) + 8 * ((c + c2) % 2);
    };
    return make_group(16, mul);
}

// (Z2 x Z2) : Z4 with the order-4 generator swapping the two Klein factors
SmallGroup v4_semi_z4() {
    auto mul = [](int g, int h) {
        const int x = g % 2, y = (g / 2) % 2, k = g / 4;
        int x2 = h % 2, y2 = (h / 2) % 2;
        const int m = h / 4;
        if (k % 2 == 1) std::swap(x2, y2);
        return ((x + x2) % 2) + 2 * ((y + y2) % 2) + 4 * ((k + m) % 4);
    };
    return make_group(16, mul);
}

std::map<std::string, int> class_tag_counts(const SmallGroup& G) {
    std::map<std::string, int> out;
    for (const SubgroupClass& c : subgroup_classes(G)) out[c.iso_tag] += 1;
    return out;
}

} // namespace

TEST_CASE("builtin groups verify and have the right tags") {
    for (const char* name : {"Z1", "Z2", "Z6", "Z16", "Z2xZ2", "Z2xZ8", "Z4xZ4", "D8", "Q8", "D8xZ2", "Q8xZ2"}) {
        const SmallGroup G = group_from_name(name);
        CHECK(verify_group(G).empty());
        CHECK(iso_tag(G) == name);
    }
    // factor order is normalized in the tag
    CHECK(iso_tag(group_from_name("Z4xZ2")) == "Z2xZ4");
    CHECK(iso_tag(group_from_name("Z2xZ3")) == "Z6");

    CHECK_THROWS_AS((void)group_from_name("S3-missing"), std::invalid_argument);
    CHECK_THROWS_AS((void)group_from_name("Z17"), std::invalid_argument);
    CHECK_THROWS_AS((void)group_from_name("Z4xZ8"), std::invalid_argument); // order 32
}

TEST_CASE("verify_group reports broken tables") {
    SmallGroup G = group_from_name("Z4");
    G.table[1][1] = 1; // 1*1 = 1 breaks cancellation
    CHECK_FALSE(verify_group(G).empty());

    SmallGroup H = group_from_name("Z2");
    H.table = {{0, 1}, {1, 1}}; // the non-identity element is idempotent
    CHECK_FALSE(verify_group(H).empty());
}

TEST_CASE("constructed tables get recognized") {
    CHECK(iso_tag(sym3()) == "S3");
    CHECK(iso_tag(alt4()) == "A4");
    CHECK(iso_tag(two_generator_16(7, 0)) == "D16");
    CHECK(iso_tag(two_generator_16(3, 0)) == "SD16");
    CHECK(iso_tag(two_generator_16(7, 4)) == "Q16");
    CHECK(iso_tag(two_generator_16(5, 0)) == "M4(2)");
    CHECK(iso_tag(two_generator_16(5, 4)) == "M4(2)"); // same group, s' = rs
    CHECK(iso_tag(pauli16()) == "D8oZ4");
    CHECK(iso_tag(v4_semi_z4()) == "(Z2xZ2):Z4");
    CHECK(iso_tag(two_generator_16(1, 0)) == "Z2xZ8");
    CHECK(verify_group(pauli16()).empty());
    CHECK(verify_group(v4_semi_z4()).empty());
}

TEST_CASE("subgroup classes of the dihedral group of order 8") {
    const std::vector<SubgroupClass> classes = subgroup_classes(group_from_name("D8"));
    REQUIRE(classes.size() == 8);
    std::vector<std::string> tags;
    std::vector<int> sizes, schur;
    for (const SubgroupClass& c : classes) {
        tags.push_back(c.iso_tag);
        sizes.push_back(c.class_size);
        schur.push_back(c.schur_multiplier_order);
    }
    CHECK(tags == std::vector<std::string>{"Z1", "Z2", "Z2", "Z2", "Z4", "Z2xZ2", "Z2xZ2", "D8"});
    CHECK(sizes == std::vector<int>{1, 1, 2, 2, 1, 1, 1, 1});
    CHECK(schur == std::vector<int>{1, 1, 1, 1, 1, 2, 2, 2});
}

TEST_CASE("subgroup classes of S3 and A4") {
    const auto s3 = class_tag_counts(sym3());
    CHECK(s3 == std::map<std::string, int>{{"Z1", 1}, {"Z2", 1}, {"Z3", 1}, {"S3", 1}});

    const auto a4 = class_tag_counts(alt4());
    CHECK(a4 == std::map<std::string, int>{{"Z1", 1}, {"Z2", 1}, {"Z3", 1}, {"Z2xZ2", 1}, {"A4", 1}});
}

TEST_CASE("module category counts") {
    CHECK(module_category_count(group_from_name("Z1")) == 1);
    CHECK(module_category_count(group_from_name("Z2")) == 2);
    CHECK(module_category_count(group_from_name("Z3")) == 2);
    CHECK(module_category_count(group_from_name("Z4")) == 3);
    CHECK(module_category_count(group_from_name("Z2xZ2")) == 6);
    CHECK(module_category_count(group_from_name("Q8")) == 6);
    CHECK(module_category_count(group_from_name("D8")) == 11);
    CHECK(module_category_count(sym3()) == 4);
    CHECK(module_category_count(alt4()) == 7);
    CHECK(module_category_count(group_from_name("Z2xZ8")) == 14);
    // a Klein-cubed subgroup carries a multiplier of order 8
    CHECK_THROWS_AS((void)module_category_count(group_from_name("Z2xZ2xZ2")), std::invalid_argument);
}

TEST_CASE("fiber functor counts") {
    CHECK(fiber_functor_count(group_from_name("Z1")) == 1);
    CHECK(fiber_functor_count(group_from_name("Z4")) == 1);
    CHECK(fiber_functor_count(group_from_name("Z2xZ2")) == 2);
    CHECK(fiber_functor_count(group_from_name("Q8")) == 1);
    CHECK(fiber_functor_count(group_from_name("D8")) == 3);
    CHECK(fiber_functor_count(sym3()) == 1);
    CHECK_THROWS_AS((void)fiber_functor_count(group_from_name("Z16")), std::invalid_argument);
}

TEST_CASE("schur multiplier orders on abelian groups") {
    auto order_of = [](const char* name) {
        const SmallGroup G = group_from_name(name);
        const std::vector<SubgroupClass> classes = subgroup_classes(G);
        return classes.back().schur_multiplier_order; // the full group sorts last
    };
    CHECK(order_of("Z12") == 1);
    CHECK(order_of("Z2xZ2") == 2);
    CHECK(order_of("Z2xZ4") == 2);
    CHECK(order_of("Z4xZ4") == 4);
    CHECK(order_of("Z2xZ2xZ4") == 8);
}
