#include "fusion/intlinalg.hpp"

#include <cstdlib>

#include "fusion/errors.hpp"
#include "fusion/numbers.hpp"

namespace fusion {

namespace {

void swap_rows(IntMat& m, int r1, int r2) {
    if (r1 == r2) return;
    for (int j = 0; j < m.cols; ++j) std::swap(m(r1, j), m(r2, j));
}

// row r1 -= q * row r2
void submul_row(IntMat& m, int r1, const Int& q, int r2) {
    if (q == 0) return;
    for (int j = 0; j < m.cols; ++j) m(r1, j) -= q * m(r2, j);
}

void negate_row(IntMat& m, int r) {
    for (int j = 0; j < m.cols; ++j) m(r, j) = -m(r, j);
}

} // namespace

void hnf_rows(IntMat& m, IntMat* transform) {
    if (transform && (transform->rows != m.rows))
        throw structural_error("hnf: transform row count must match the matrix");
    int pr = 0;
    for (int c = 0; c < m.cols && pr < m.rows; ++c) {
        // Euclidean descent in column c below row pr: repeatedly move the
        // entry of least magnitude into the pivot slot and reduce the rest.
        for (;;) {
            int best = -1;
            for (int r = pr; r < m.rows; ++r) {
                if (m(r, c) == 0) continue;
                if (best < 0 || mpz_cmpabs(m(r, c).get_mpz_t(), m(best, c).get_mpz_t()) < 0) best = r;
            }
            if (best < 0) break; // column already clear
            swap_rows(m, pr, best);
            if (transform) swap_rows(*transform, pr, best);
            bool cleared = true;
            for (int r = pr + 1; r < m.rows; ++r) {
                if (m(r, c) == 0) continue;
                Int q = fdiv(m(r, c), m(pr, c));
                submul_row(m, r, q, pr);
                if (transform) submul_row(*transform, r, q, pr);
                if (m(r, c) != 0) cleared = false;
            }
            if (cleared) break;
        }
        if (m(pr, c) == 0) continue; // no pivot in this column
        if (m(pr, c) < 0) {
            negate_row(m, pr);
            if (transform) negate_row(*transform, pr);
        }
        for (int r = 0; r < pr; ++r) {
            Int q = fdiv(m(r, c), m(pr, c));
            submul_row(m, r, q, pr);
            if (transform) submul_row(*transform, r, q, pr);
        }
        ++pr;
    }
}

int hnf_rank(const IntMat& m) {
    int rank = 0;
    for (int r = 0; r < m.rows; ++r) {
        bool zero = true;
        for (int j = 0; j < m.cols; ++j)
            if (m(r, j) != 0) {
                zero = false;
                break;
            }
        if (!zero) ++rank;
    }
    return rank;
}

IntMat integer_kernel(const IntMat& m) {
    // Row-reduce the transpose while tracking the operations in u; the rows
    // of u facing zero rows of the reduction multiply m^T to zero, i.e. they
    // span {x : m x = 0}.  u stays unimodular throughout, so the span is the
    // whole kernel, not a finite-index sublattice.
    IntMat t = transpose(m);
    IntMat u = IntMat::identity(t.rows);
    hnf_rows(t, &u);
    const int rank = hnf_rank(t);
    IntMat kernel(t.rows - rank, m.cols);
    for (int r = rank; r < t.rows; ++r)
        for (int j = 0; j < m.cols; ++j) kernel(r - rank, j) = u(r, j);
    hnf_rows(kernel);
    return kernel;
}

std::optional<std::vector<Int>> hnf_coordinates(const IntMat& basis, const std::vector<Int>& v) {
    if (static_cast<int>(v.size()) != basis.cols)
        throw structural_error("hnf coordinates: length mismatch");
    std::vector<Int> rest = v;
    std::vector<Int> coords(static_cast<size_t>(basis.rows));
    for (int r = 0; r < basis.rows; ++r) {
        int p = -1;
        for (int j = 0; j < basis.cols; ++j)
            if (basis(r, j) != 0) {
                p = j;
                break;
            }
        if (p < 0) continue; // zero row contributes nothing
        if (rest[static_cast<size_t>(p)] % basis(r, p) != 0) return std::nullopt;
        Int q = rest[static_cast<size_t>(p)] / basis(r, p);
        for (int j = 0; j < basis.cols; ++j) rest[static_cast<size_t>(j)] -= q * basis(r, j);
        coords[static_cast<size_t>(r)] = std::move(q);
    }
    for (const Int& x : rest)
        if (x != 0) return std::nullopt;
    return coords;
}

} // namespace fusion
