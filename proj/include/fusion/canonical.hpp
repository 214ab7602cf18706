#pragma once
#include <optional>
#include <vector>

#include "fusion/matrix.hpp"

namespace fusion {

// Canonical relabeling of a tuple of n x n integer matrices under one
// simultaneous row/column permutation.  Two tuples are equivalent iff their
// canonical encodings coincide.
struct CanonicalForm {
    std::vector<int> perm;     // perm[p] = original index placed at position p
    std::vector<Int> encoding; // deterministic entry sequence, equal across relabelings
};

CanonicalForm canonical_form(const std::vector<IntMat>& mats);

// Permutation sigma with b[k](sigma(i), sigma(j)) == a[k](i, j) for all k, i, j.
std::optional<std::vector<int>> find_isomorphism(const std::vector<IntMat>& a,
                                                 const std::vector<IntMat>& b);

} // namespace fusion
