#include "fusion/based_ring.hpp"

#include <algorithm>
#include <fmt/format.h>

namespace fusion {

void ZPlusRing::check_shape() const {
    if (rank < 1) throw structural_error("ring: rank must be positive");
    if (!labels.empty() && static_cast<int>(labels.size()) != rank)
        throw structural_error("ring: label count does not match rank");
    if (unit_set.empty()) throw structural_error("ring: unit set is empty");
    for (int i : unit_set)
        if (i < 0 || i >= rank) throw structural_error("ring: unit set index out of range");
    if (!std::is_sorted(unit_set.begin(), unit_set.end()) ||
        std::adjacent_find(unit_set.begin(), unit_set.end()) != unit_set.end())
        throw structural_error("ring: unit set must be sorted and distinct");
    if (static_cast<int>(c.size()) != rank)
        throw structural_error("ring: structure constant tensor has wrong shape");
    for (const auto& ci : c) {
        if (static_cast<int>(ci.size()) != rank)
            throw structural_error("ring: structure constant tensor has wrong shape");
        for (const auto& cij : ci)
            if (static_cast<int>(cij.size()) != rank)
                throw structural_error("ring: structure constant tensor has wrong shape");
    }
    if (involution) {
        if (static_cast<int>(involution->size()) != rank)
            throw structural_error("ring: involution has wrong length");
        std::vector<char> seen(static_cast<size_t>(rank), 0);
        for (int v : *involution) {
            if (v < 0 || v >= rank || seen[v]) throw structural_error("ring: involution is not a permutation");
            seen[v] = 1;
        }
    }
}

std::vector<std::string> verify_zplus_ring(const ZPlusRing& R) {
    R.check_shape();
    std::vector<std::string> findings;
    const int r = R.rank;

    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (R.cc(i, j, k) < 0)
                    findings.push_back(fmt::format("negative structure constant c[{}][{}][{}]", i, j, k));

    // (b_i b_j) b_k = b_i (b_j b_k), coefficient of b_n
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                for (int n = 0; n < r; ++n) {
                    Int lhs = 0, rhs = 0;
                    for (int m = 0; m < r; ++m) {
                        lhs += R.cc(i, j, m) * R.cc(m, k, n);
                        rhs += R.cc(j, k, m) * R.cc(i, m, n);
                    }
                    if (lhs != rhs) {
                        findings.push_back(
                            fmt::format("associativity fails at (b{} b{}) b{}, coefficient of b{}", i, j, k, n));
                        goto assoc_done; // one witness is enough
                    }
                }
assoc_done:;

    for (int j = 0; j < r; ++j)
        for (int k = 0; k < r; ++k) {
            Int left = 0, right = 0;
            for (int i : R.unit_set) {
                left += R.cc(i, j, k);
                right += R.cc(j, i, k);
            }
            const Int want = (j == k) ? 1 : 0;
            if (left != want)
                findings.push_back(fmt::format("unit axiom fails: (sum I0) * b{} has coefficient {} at b{}",
                                               j, left.get_str(), k));
            if (right != want)
                findings.push_back(fmt::format("unit axiom fails: b{} * (sum I0) has coefficient {} at b{}",
                                               j, right.get_str(), k));
        }

    if (R.involution) {
        const std::vector<int>& s = *R.involution;
        for (int i = 0; i < r; ++i)
            if (s[s[i]] != i) {
                findings.push_back(fmt::format("involution is not self-inverse at index {}", i));
                break;
            }
        // anti-automorphism: c[i][j][k] == c[s(j)][s(i)][s(k)]
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j)
                for (int k = 0; k < r; ++k)
                    if (R.cc(i, j, k) != R.cc(s[j], s[i], s[k])) {
                        findings.push_back(fmt::format(
                            "involution is not an anti-automorphism at c[{}][{}][{}]", i, j, k));
                        goto invol_done;
                    }
        // tau(b_i b_j) = 1 exactly when j is the partner of i
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < r; ++j) {
                Int t = 0;
                for (int k : R.unit_set) t += R.cc(i, j, k);
                const Int want = (j == s[i]) ? 1 : 0;
                if (t != want) {
                    findings.push_back(fmt::format(
                        "duality pairing fails: tau(b{} b{}) = {}, expected {}", i, j,
                        t.get_str(), want.get_str()));
                    goto invol_done;
                }
            }
    invol_done:;
    }
    return findings;
}

std::optional<std::vector<int>> find_based_structure(const ZPlusRing& R) {
    R.check_shape();
    const int r = R.rank;
    std::vector<int> sigma(static_cast<size_t>(r), -1);
    for (int i = 0; i < r; ++i) {
        for (int j = 0; j < r; ++j) {
            Int t = 0;
            for (int k : R.unit_set) t += R.cc(i, j, k);
            if (t == 0) continue;
            if (t != 1 || sigma[i] != -1) return std::nullopt; // pairing must be 0/1 and unique
            sigma[i] = j;
        }
        if (sigma[i] < 0) return std::nullopt;
    }
    for (int i = 0; i < r; ++i)
        if (sigma[sigma[i]] != i) return std::nullopt;
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < r; ++j)
            for (int k = 0; k < r; ++k)
                if (R.cc(i, j, k) != R.cc(sigma[j], sigma[i], sigma[k])) return std::nullopt;
    return sigma;
}

std::vector<IntMat> fusion_matrices(const ZPlusRing& R) {
    R.check_shape();
    std::vector<IntMat> out;
    out.reserve(static_cast<size_t>(R.rank));
    for (int i = 0; i < R.rank; ++i) {
        IntMat m(R.rank, R.rank);
        for (int j = 0; j < R.rank; ++j)
            for (int k = 0; k < R.rank; ++k) m(k, j) = R.cc(i, j, k);
        out.push_back(std::move(m));
    }
    return out;
}

Int module_search_bound(const ZPlusRing& R) {
    R.check_shape();
    Int best = 0;
    for (int k = 0; k < R.rank; ++k) {
        Int nk = 0;
        for (int i = 0; i < R.rank; ++i)
            for (int j = 0; j < R.rank; ++j) nk += R.cc(i, j, k);
        best = std::max(best, nk);
    }
    return best;
}

} // namespace fusion
