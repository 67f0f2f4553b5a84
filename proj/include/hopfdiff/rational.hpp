#pragma once

#include <gmpxx.h>

#include <string>

namespace hopfdiff {

// Exact rationals over arbitrary-precision integers. mpq_class keeps values
// canonical: gcd(|num|, den) = 1 and den > 0.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
    Rational q(num, den);
    q.canonicalize();
    return q;
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

// C(n, k), zero outside 0 <= k <= n.
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Integer(0);
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

inline std::string to_string(const Rational& q) { return q.get_str(); }

}  // namespace hopfdiff
