#include <doctest.h>

#include <map>

#include "fusion/dynkin.hpp"
#include "oracles.hpp"

using namespace fusion;

namespace {

DynkinType T(DynkinFamily f, int n) { return {f, n}; }

std::vector<DynkinType> admissible_up_to(int max_rank) {
    std::vector<DynkinType> out;
    for (int n = 1; n <= max_rank; ++n) out.push_back(T(DynkinFamily::A, n));
    for (int n = 4; n <= max_rank; ++n) out.push_back(T(DynkinFamily::D, n));
    for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back(T(DynkinFamily::E, n));
    for (int n = 1; n <= max_rank; ++n) out.push_back(T(DynkinFamily::T, n));
    return out;
}

} // namespace

TEST_CASE("admissibility, names and ordering") {
    CHECK(type_admissible(T(DynkinFamily::A, 1)));
    CHECK_FALSE(type_admissible(T(DynkinFamily::A, 0)));
    CHECK_FALSE(type_admissible(T(DynkinFamily::D, 3)));
    CHECK(type_admissible(T(DynkinFamily::D, 4)));
    CHECK_FALSE(type_admissible(T(DynkinFamily::E, 5)));
    CHECK_FALSE(type_admissible(T(DynkinFamily::E, 9)));
    CHECK(type_admissible(T(DynkinFamily::T, 1)));

    CHECK(type_name(T(DynkinFamily::A, 11)) == "A11");
    CHECK(type_name(T(DynkinFamily::T, 5)) == "T5");
    CHECK(parse_type("D7") == T(DynkinFamily::D, 7));
    CHECK(parse_type("E6") == T(DynkinFamily::E, 6));
    CHECK_FALSE(parse_type("F4").has_value());
    CHECK_FALSE(parse_type("D3").has_value());
    CHECK_FALSE(parse_type("A").has_value());

    CHECK(type_less(T(DynkinFamily::A, 30), T(DynkinFamily::D, 4)));
    CHECK(type_less(T(DynkinFamily::D, 30), T(DynkinFamily::E, 6)));
    CHECK(type_less(T(DynkinFamily::E, 8), T(DynkinFamily::T, 1)));
    CHECK(type_less(T(DynkinFamily::A, 2), T(DynkinFamily::A, 3)));
}

TEST_CASE("graph shapes") {
    const LoopyGraph a4 = build_graph(T(DynkinFamily::A, 4));
    CHECK(a4.size == 4);
    for (int i = 0; i < 3; ++i) CHECK(a4.adjacency(i, i + 1) == 1);
    CHECK(a4.adjacency(0, 2) == 0);
    CHECK(a4.adjacency(0, 0) == 0);

    const LoopyGraph d4 = build_graph(T(DynkinFamily::D, 4));
    Int deg3 = 0;
    for (int i = 0; i < 4; ++i) {
        Int deg = 0;
        for (int j = 0; j < 4; ++j) deg += d4.adjacency(i, j);
        if (deg == 3) deg3 += 1;
    }
    CHECK(deg3 == 1); // the star center

    const LoopyGraph t3 = build_graph(T(DynkinFamily::T, 3));
    CHECK(t3.adjacency(2, 2) == 1); // loop at the far end
    CHECK(t3.adjacency(0, 0) == 0);

    const LoopyGraph e8 = build_graph(T(DynkinFamily::E, 8));
    CHECK(e8.size == 8);
    CHECK(e8.adjacency(2, 7) == 1); // branch vertex

    CHECK(graph_connected(a4));
    LoopyGraph split;
    split.size = 2;
    split.adjacency = IntMat(2, 2);
    CHECK_FALSE(graph_connected(split));
}

TEST_CASE("Coxeter numbers and exponents") {
    const std::map<std::string, std::pair<int, std::vector<int>>> table = {
        {"A1", {2, {1}}},
        {"A5", {6, {1, 2, 3, 4, 5}}},
        {"D4", {6, {1, 3, 3, 5}}},
        {"D5", {8, {1, 3, 4, 5, 7}}},
        {"D6", {10, {1, 3, 5, 5, 7, 9}}},
        {"E6", {12, {1, 4, 5, 7, 8, 11}}},
        {"E7", {18, {1, 5, 7, 9, 11, 13, 17}}},
        {"E8", {30, {1, 7, 11, 13, 17, 19, 23, 29}}},
        {"T1", {3, {1}}},
        {"T2", {5, {1, 3}}},
        {"T4", {9, {1, 3, 5, 7}}},
    };
    for (const auto& [name, data] : table) {
        const DynkinType t = *parse_type(name);
        CHECK(coxeter_number(t) == data.first);
        CHECK(coxeter_exponents(t) == data.second);
    }
}

TEST_CASE("spectrum exponents agree with the tables for every admissible type") {
    for (const DynkinType& t : admissible_up_to(8)) {
        const LoopyGraph g = build_graph(t);
        const int h = coxeter_number(t);
        CHECK(spectrum_exponents(g.adjacency, h) == coxeter_exponents(t));
    }
}

TEST_CASE("h - 1 is an exponent exactly for the loopless families") {
    for (const DynkinType& t : admissible_up_to(8)) {
        const std::vector<int> exps = coxeter_exponents(t);
        const int h = coxeter_number(t);
        const bool has = std::find(exps.begin(), exps.end(), h - 1) != exps.end();
        CHECK(has == (t.family != DynkinFamily::T));
        if (t.family == DynkinFamily::T) CHECK(exps.back() == h - 2);
    }
}

TEST_CASE("spectrum exponents reject spectra outside the Coxeter window") {
    IntMat triangle(3, 3);
    triangle(0, 1) = triangle(1, 0) = 1;
    triangle(1, 2) = triangle(2, 1) = 1;
    triangle(0, 2) = triangle(2, 0) = 1; // eigenvalue 2 = 2cos(0)
    CHECK_THROWS_AS((void)spectrum_exponents(triangle, 6), structural_error);

    const LoopyGraph a3 = build_graph(T(DynkinFamily::A, 3));
    CHECK_THROWS_AS((void)spectrum_exponents(a3.adjacency, 5), structural_error); // h of A3 is 4
}

TEST_CASE("recognition inverts build_graph, up to relabeling") {
    for (const DynkinType& t : admissible_up_to(8)) {
        const LoopyGraph g = build_graph(t);
        CHECK(recognize(g) == t);

        LoopyGraph rev; // reverse the vertex order
        rev.size = g.size;
        rev.adjacency = IntMat(g.size, g.size);
        for (int i = 0; i < g.size; ++i)
            for (int j = 0; j < g.size; ++j)
                rev.adjacency(g.size - 1 - i, g.size - 1 - j) = g.adjacency(i, j);
        CHECK(recognize(rev) == t);
    }

    LoopyGraph triangle;
    triangle.size = 3;
    triangle.adjacency = IntMat(3, 3);
    triangle.adjacency(0, 1) = triangle.adjacency(1, 0) = 1;
    triangle.adjacency(1, 2) = triangle.adjacency(2, 1) = 1;
    triangle.adjacency(0, 2) = triangle.adjacency(2, 0) = 1;
    CHECK_FALSE(recognize(triangle).has_value());
}

TEST_CASE("spectral radius test") {
    for (const DynkinType& t : admissible_up_to(8)) CHECK(spectral_radius_lt_2(build_graph(t).adjacency));

    IntMat affine(2, 2);
    affine(0, 1) = affine(1, 0) = 2; // norm exactly 2
    CHECK_FALSE(spectral_radius_lt_2(affine));

    IntMat cycle(4, 4);
    for (int i = 0; i < 4; ++i) {
        cycle(i, (i + 1) % 4) = 1;
        cycle((i + 1) % 4, i) = 1;
    }
    CHECK_FALSE(spectral_radius_lt_2(cycle));

    IntMat loop2(1, 1);
    loop2(0, 0) = 2;
    CHECK_FALSE(spectral_radius_lt_2(loop2));
}

TEST_CASE("norm-<2 enumeration finds exactly the admissible diagrams") {
    const std::vector<LoopyGraph> graphs = enumerate_norm_lt_2(8);
    std::map<int, int> by_size;
    std::vector<DynkinType> types;
    for (const LoopyGraph& g : graphs) {
        by_size[g.size] += 1;
        CHECK(graph_connected(g));
        CHECK(spectral_radius_lt_2(g.adjacency));
        const auto t = recognize(g);
        REQUIRE(t.has_value());
        types.push_back(*t);
    }
    const std::map<int, int> expected_sizes = {{1, 2}, {2, 2}, {3, 2}, {4, 3},
                                               {5, 3}, {6, 4}, {7, 4}, {8, 4}};
    CHECK(by_size == expected_sizes);

    std::sort(types.begin(), types.end(), type_less);
    std::vector<DynkinType> expected = admissible_up_to(8);
    std::sort(expected.begin(), expected.end(), type_less);
    CHECK(types == expected);

    CHECK(enumerate_norm_lt_2(4).size() == 9);
}
