#pragma once
#include <optional>
#include <string>
#include <vector>

#include "fusion/based_ring.hpp"

namespace fusion {

// Module over a ZPlusRing with a distinguished basis m_0..m_{d-1} and
// non-negative action b_i . m_j = sum_k M_i(k, j) m_k.  Rank 0 is the zero
// module, the neutral element of direct_sum.
struct ZPlusModule {
    ZPlusRing ring;
    int module_rank = 0;
    std::vector<IntMat> action; // one matrix per ring basis element
    bool based_flag = false;    // as stored in files; is_based computes the truth

    void check_shape() const;
};

// Axiom findings: non-negativity, unit action, compatibility with the ring.
std::vector<std::string> verify_module(const ZPlusModule& M);

// M_{ibar} == transpose(M_i) for the ring's involution.  The ring must carry
// one (precondition; throws std::invalid_argument otherwise).
bool is_based(const ZPlusModule& M);

// Connectivity of the support graph (edge j - k when some b_i moves m_j to m_k
// or back).  Rank 0 is neither indecomposable nor irreducible.
bool is_indecomposable(const ZPlusModule& M);

// No proper nonempty action-closed subset of the basis: strong connectivity of
// the directed support graph.
bool is_irreducible(const ZPlusModule& M);

// Basis relabeling sigma with B_i(sigma(k), sigma(j)) == A_i(k, j), if any.
// Both modules must live over structurally identical rings.
std::optional<std::vector<int>> module_equiv(const ZPlusModule& A, const ZPlusModule& B);

ZPlusModule direct_sum(const ZPlusModule& A, const ZPlusModule& B);

// All irreducible modules with module_rank <= max_rank and entries <= max_entry,
// one representative per equivalence class, sorted by rank then canonical form.
// Backtracking with forced-entry propagation; throws budget_error when the node
// budget runs out.
std::vector<ZPlusModule> enumerate_irreducible_modules(const ZPlusRing& R, int max_rank,
                                                       const Int& max_entry,
                                                       long node_budget = 20'000'000);

} // namespace fusion
