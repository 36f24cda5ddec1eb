#pragma once

// Arbitrary-precision integers and rationals (GMP backed).

#include <gmpxx.h>

#include <string>

#include "hankelkit/error.hpp"

namespace hankelkit {

using Integer = mpz_class;

/// Always canonical: gcd(|num|, den) = 1, den > 0, zero is 0/1.
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0) throw DivisionByZero();
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) { return make_rational(Integer(num), Integer(den)); }

inline std::string to_string(const Integer& z) { return z.get_str(); }

/// "p" for integers, "p/q" otherwise.
inline std::string to_string(const Rational& r) { return r.get_str(); }

inline Integer binomial(unsigned long n, unsigned long k) {
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), n, k);
    return r;
}

/// C(n, k) with the convention C(n, k) = 0 for k < 0 or k > n (n >= 0).
inline Integer binomial_signed(long n, long k) {
    if (n < 0 || k < 0 || k > n) return 0;
    return binomial(static_cast<unsigned long>(n), static_cast<unsigned long>(k));
}

inline Integer factorial(unsigned long n) {
    Integer r;
    mpz_fac_ui(r.get_mpz_t(), n);
    return r;
}

inline Integer pow_integer(const Integer& base, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
    return r;
}

inline Rational pow_rational(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw DivisionByZero();
        return pow_rational(Rational(1) / base, -e);
    }
    Rational r(pow_integer(base.get_num(), static_cast<unsigned long>(e)),
               pow_integer(base.get_den(), static_cast<unsigned long>(e)));
    return r;
}

inline Integer gcd(const Integer& a, const Integer& b) {
    Integer r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Integer lcm(const Integer& a, const Integer& b) {
    Integer r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

}  // namespace hankelkit
