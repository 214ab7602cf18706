#pragma once

#include <vector>

#include "fusion/based_module.hpp"
#include "fusion/intlinalg.hpp"
#include "fusion/sl2.hpp"

namespace fusion {

// A non-negative integer matrix commuting with the level-l modular data and
// normalized by Z[0][0] = 1.  The type itself does not enforce the
// invariants; commutes_with_modular_data re-checks them from scratch.
struct ModularInvariant {
    int l = 0;
    IntMat Z; // (l+1) x (l+1)
};

// Exact re-verification, independent of the solver: the zero pattern must
// respect the T residues and S_hat Z = Z S_hat must hold in Q(zeta_{2h}).
bool commutes_with_modular_data(const ModularInvariant& inv);

// Row-HNF basis of the lattice of all integer matrices (flattened row-major
// to length (l+1)^2) that commute with the modular data.  No positivity or
// normalization is imposed here.
IntMat commutant_lattice(int l);

// Membership of a flattened integer matrix in the lattice spanned by the
// rows of a basis in row HNF.
bool lattice_contains(const IntMat& basis, const std::vector<Int>& v);

std::vector<Int> flatten(const IntMat& m);
IntMat unflatten(const std::vector<Int>& v, int n);

// All lattice members with entries in [0, entry_bound] and Z[0][0] = 1, in
// lexicographic order of the flattened matrix.  Backtracks over lattice
// coordinates in pivot order; throws budget_error when the node budget is
// exhausted rather than returning a truncated list.
std::vector<ModularInvariant> enumerate_invariants(int l, int entry_bound = 4,
                                                   long long node_budget = 50'000'000);

// The multiset with lambda repeated Z[lambda][lambda] times.
std::vector<int> invariant_exponents(const ModularInvariant& inv);

// Numeric cross-checks tying an invariant to a NIM-rep at the same level:
// Tr Z against the module rank and the two exponent multisets.  The sum of
// the squared entries counts the simple objects of the ambient category the
// invariant predicts; it is reported, not asserted against anything.
struct ClaimReport {
    bool trace_ok = false;
    bool exponents_ok = false;
    Int cstar_simple_count;
};
ClaimReport check_claims(const ModularInvariant& inv, const ZPlusModule& mod);

// The permutation invariant delta_{lambda, conj(mu)} from the duality
// involution.  All level-l simple objects are self-dual, so this is the
// identity matrix; the flag records that coincidence.
struct ChargeConjugation {
    ModularInvariant inv;
    bool coincides_with_diagonal = false;
};
ChargeConjugation charge_conjugation(int l);

} // namespace fusion
