#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fusion/matrix.hpp"

namespace fusion {

// A ring free as a Z-module with a distinguished basis b_0..b_{r-1}, structure
// constants c[i][j][k] >= 0 (b_i b_j = sum_k c[i][j][k] b_k) and a unit set I0
// with sum_{i in I0} b_i = 1.  The involution, when present, is the duality of
// a based structure.
struct ZPlusRing {
    int rank = 0;
    std::vector<std::string> labels;
    std::vector<int> unit_set;                      // sorted, distinct
    std::vector<std::vector<std::vector<Int>>> c;   // c[i][j][k], rank^3
    std::optional<std::vector<int>> involution;

    const Int& cc(int i, int j, int k) const { return c[i][j][k]; }
    void check_shape() const; // throws structural_error on malformed data
};

// Axiom findings (empty means valid): non-negativity, associativity, unit,
// involution properties when one is stored.
std::vector<std::string> verify_zplus_ring(const ZPlusRing& R);

// The unique duality making the ring based, if any: tau(b_i b_j) picks out one
// partner per index, and the partner map must be an involutive
// anti-automorphism.  Expects a ring whose verify report is clean.
std::optional<std::vector<int>> find_based_structure(const ZPlusRing& R);

// Left-multiplication matrices, N_i(k, j) = c[i][j][k].
std::vector<IntMat> fusion_matrices(const ZPlusRing& R);

// Expand b = sum_i b_i; b^2 = sum_k n_k b_k; the bound is max_k n_k.  Every
// irreducible module fits in rank and entry size below this number, which the
// module enumerator uses as its default box.
Int module_search_bound(const ZPlusRing& R);

} // namespace fusion
