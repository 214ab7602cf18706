#pragma once

#include <string>
#include <vector>

#include "fusion/numbers.hpp"

namespace fusion {

// A finite group of order at most 16, given by its multiplication table:
// table[g][h] is the index of g*h.  Labels are display names only.
struct SmallGroup {
    int order = 0;
    std::vector<std::vector<int>> table;
    std::vector<std::string> labels;

    void check_shape() const;
    int mul(int g, int h) const { return table[static_cast<size_t>(g)][static_cast<size_t>(h)]; }
};

// Axiom findings (empty means valid): associativity, a two-sided identity,
// inverses.  Closure is a shape matter and throws instead.
std::vector<std::string> verify_group(const SmallGroup& G);

// Built-in constructors addressable by name: "Z<n>", "D8", "Q8", and 'x'-joined
// products of those ("Z2xZ2", "D8xZ2").  Throws structural_error on anything
// else or when the product order exceeds 16.
SmallGroup group_from_name(const std::string& name);

// One conjugacy class of subgroups: a representative (sorted element list),
// how many conjugates it has, the isomorphism type, and the order of the
// Schur multiplier H^2(H, C*) from a fixed table for orders <= 16.
struct SubgroupClass {
    std::vector<int> representative;
    int class_size = 0;
    std::string iso_tag;
    int schur_multiplier_order = 0;
};

// All subgroups up to conjugacy, sorted by subgroup order then representative.
std::vector<SubgroupClass> subgroup_classes(const SmallGroup& G);

// Isomorphism type of the whole group, e.g. "Z4", "Z2xZ2", "D8", "Q8",
// "S3", "A4".  Defined for every group of order <= 16.
std::string iso_tag(const SmallGroup& G);

// Number of indecomposable module categories: the sum of the Schur multiplier
// orders over subgroup classes.  Valid only while every multiplier is 1 or 2
// (conjugation then acts trivially on the choices); larger multipliers throw
// std::invalid_argument.
Int module_category_count(const SmallGroup& G);

// Number of fiber functors for |G| <= 8: one for the trivial subgroup plus
// one per conjugacy class of Klein four subgroups (the square-order subgroups
// admitting a nondegenerate class).  Larger groups throw
// std::invalid_argument.
Int fiber_functor_count(const SmallGroup& G);

} // namespace fusion
