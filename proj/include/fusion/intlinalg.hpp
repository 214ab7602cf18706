#pragma once

#include <optional>
#include <vector>

#include "fusion/matrix.hpp"

namespace fusion {

// Row-style Hermite normal form, in place, by unimodular row operations.
// Afterwards the nonzero rows have strictly increasing pivot columns, each
// pivot is positive, entries below a pivot are zero and entries above it lie
// in [0, pivot).  Zero rows sink to the bottom.  When `transform` is given it
// must be square with m.rows rows; the same row operations are applied to it.
void hnf_rows(IntMat& m, IntMat* transform = nullptr);

// Number of nonzero rows of a matrix already in row HNF.
int hnf_rank(const IntMat& m);

// Basis of the integer kernel {x : m x = 0}, returned as the rows of a
// matrix in row HNF (0 x cols when the kernel is trivial).  The basis is
// saturated: every integer solution is an integer combination of the rows.
IntMat integer_kernel(const IntMat& m);

// Coordinates of v over the rows of a basis in row HNF, or nullopt when v is
// not an integer combination of them.
std::optional<std::vector<Int>> hnf_coordinates(const IntMat& basis, const std::vector<Int>& v);

} // namespace fusion
