#pragma once

#include <string>
#include <vector>

#include "fusion/based_module.hpp"
#include "fusion/cyclotomic.hpp"
#include "fusion/dynkin.hpp"

namespace fusion {

// The level-l fusion ring: rank l+1, generated by the weight-1 object whose
// left multiplication is the path-graph adjacency; higher matrices follow the
// Chebyshev recursion N_{i+1} = N_1 N_i - N_{i-1}.
ZPlusRing sl2_fusion_ring(int l);

// The invertible object at weight l squares to the unit; the braiding on the
// subcategory it generates is measured by one fourth root of unity.
struct BraidingScalar {
    int zeta4_power = 0; // the scalar is zeta_4 ^ zeta4_power
    std::string value;   // "1", "i", "-1" or "-i"
    std::string tag;     // "plain" for even l, "twisted" for odd l
};
BraidingScalar simple_current_braiding(int l);

// Chebyshev test of a graph at level l: M_i = p_i(A) must be entrywise
// non-negative for i <= l and p_{l+1}(A) must vanish.
struct NimrepResult {
    bool accepted = false;
    std::string reason; // rejection cause when not accepted
    ZPlusModule module; // populated when accepted
};
NimrepResult nimrep_from_graph(const LoopyGraph& g, int l);

// Every connected norm-<2 graph on at most l+1 vertices, filtered through the
// Chebyshev test and named; sorted A < D < E < T, then by rank.
std::vector<DynkinType> classify_nimreps(int l);

// Existence-table row for a diagram: the level it lives at, the algebra
// object's weight multiset, and whether the module category exists (tadpoles
// pass the NIM-rep test but have no category).
struct CatalogRow {
    DynkinType type;
    int level = 0;
    std::vector<int> algebra_object; // ascending weights
    bool exists = false;
};
CatalogRow module_category_exists(const DynkinType& t);

// Weights x in 0..l with 2cos(pi (x+1) / (l+2)) an eigenvalue of M_1, with
// multiplicity; the multiset has exactly module_rank members.
std::vector<int> module_exponents(const ZPlusModule& M, int l);

// W[i] = p_i(A) counts essential paths of grade i; totals are the graded and
// overall dimensions.
struct EssentialPaths {
    std::vector<IntMat> W;
    std::vector<Int> grade_totals;
    Int total = 0;
};
EssentialPaths essential_path_dims(const LoopyGraph& g, int l);

// Unnormalized modular data: S_hat[i][j] = z^{(i+1)(j+1)} - z^{-(i+1)(j+1)}
// with z = zeta_{2h}, and the residues (j+1)^2 mod 4h that govern the diagonal
// matrix T.  Every downstream use is blind to the dropped scalar factors.
struct ModularData {
    int l = 0;
    long h = 0;
    std::vector<std::vector<Cyc>> S_hat;
    std::vector<long> T_class;
};
ModularData modular_data(int l);

} // namespace fusion
