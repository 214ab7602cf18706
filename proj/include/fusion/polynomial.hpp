#pragma once
#include <vector>

#include "fusion/matrix.hpp"
#include "fusion/numbers.hpp"

namespace fusion {

// Coefficient vector, lowest degree first.  The zero polynomial is {}.
using IntPoly = std::vector<Int>;

int poly_degree(const IntPoly& p); // -1 for zero
IntPoly poly_trim(IntPoly p);
IntPoly poly_mul(const IntPoly& p, const IntPoly& q);
IntPoly poly_sub(const IntPoly& p, const IntPoly& q);

// Division by a monic divisor; quotient and remainder stay integral.
void poly_divmod_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot, IntPoly& rem);

// True (and sets quot) iff den divides num exactly.  den monic.
bool poly_divides_monic(const IntPoly& num, const IntPoly& den, IntPoly& quot);

// n-th cyclotomic polynomial.  Cached; safe for concurrent callers.
const IntPoly& cyclotomic_poly(long n);

// Minimal polynomial of 2cos(2*pi/n) over Q, monic integral.  Cached.
const IntPoly& cos_minimal_poly(long n);

// Exact characteristic polynomial det(xI - A) of a square integer matrix.
IntPoly char_poly(const IntMat& A);

} // namespace fusion
