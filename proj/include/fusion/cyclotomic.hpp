#pragma once

#include <string>
#include <vector>

#include "fusion/numbers.hpp"
#include "fusion/polynomial.hpp"

namespace fusion {

// Coefficient rows of the power basis of Q(zeta_n): pow[k] is x^k reduced
// mod Phi_n, an integer vector of length deg(Phi_n).  Cached per n.
struct CycBasis {
    long n = 1;
    IntPoly phi;
    int deg = 1;
    std::vector<std::vector<Int>> pow; // pow[k], k in [0, n)
};

const CycBasis& cyc_basis(long n);

// An element of Q(zeta_n), written on the power basis 1, z, ..., z^{deg-1}
// where z = zeta_n and deg = deg(Phi_n).  The modulus n is carried along and
// binary operations promote both sides to Q(zeta_lcm) first, so elements of
// different cyclotomic fields mix freely.
struct Cyc {
    long n = 1;
    std::vector<Rat> a{Rat(0)};
};

Cyc cyc_rational(const Rat& r);
Cyc cyc_zeta(long n, long k = 1); // zeta_n^k
Cyc cyc_embed(const Cyc& c, long m); // requires n | m

Cyc cyc_add(const Cyc& x, const Cyc& y);
Cyc cyc_sub(const Cyc& x, const Cyc& y);
Cyc cyc_mul(const Cyc& x, const Cyc& y);
Cyc cyc_neg(const Cyc& x);
Cyc cyc_scale(const Rat& r, const Cyc& x);
Cyc cyc_conj(const Cyc& x); // zeta -> zeta^{-1}

bool cyc_is_zero(const Cyc& x);
bool cyc_eq(const Cyc& x, const Cyc& y);
bool cyc_is_rational(const Cyc& x);
Rat cyc_rational_value(const Cyc& x); // throws unless rational

std::string cyc_to_string(const Cyc& x);

} // namespace fusion
