#pragma once
#include <gmpxx.h>
#include <string>

#include "fusion/errors.hpp"

namespace fusion {

using Int = mpz_class;
using Rat = mpq_class;

inline long to_long(const Int& z) {
    if (!z.fits_slong_p())
        throw structural_error("integer too large for this operation: " + z.get_str());
    return z.get_si();
}

inline Int gcd(const Int& a, const Int& b) {
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int lcm(const Int& a, const Int& b) {
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Floor division and the matching remainder (sign of divisor).
inline Int fdiv(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline long gcd_long(long a, long b) {
    while (b != 0) {
        long t = a % b;
        a = b;
        b = t;
    }
    return a < 0 ? -a : a;
}

inline long lcm_long(long a, long b) { return a / gcd_long(a, b) * b; }

} // namespace fusion
