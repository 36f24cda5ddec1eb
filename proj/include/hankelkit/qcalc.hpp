#pragma once

/**
 * @file qcalc.hpp
 * @brief q-integers, q-factorials, Gaussian binomials, q-Pochhammer symbols
 *        and the bracket falling factorial.
 *
 * Every primitive takes an optional base (QBase). The base is any nonzero
 * field element: q itself, q^2, or a rational constant when an identity is
 * checked with the indeterminate standing for another parameter.
 *
 * Gaussian binomials are computed with the q-Pascal rule, so no division by
 * (q;q)_k is needed and constant bases such as 2 or 1/2 work too. Rows for the
 * default base are cached per thread.
 */

#include <vector>

#include "hankelkit/field_elem.hpp"

namespace hankelkit {

/// The base of a q-symbol: (x; Q)_n, [n]_Q, ... . Defaults to q.
struct QBase {
    FieldElem base = FieldElem::q();

    QBase() = default;
    explicit QBase(FieldElem b) : base(std::move(b)) {}

    static QBase q_to(long k) { return QBase(q_power(k)); }
    bool is_default() const { return base == FieldElem::q(); }

    FieldElem power(long k) const { return pow_int(base, k); }
};

/// [n] = 1 + Q + ... + Q^(n-1); [0] = 0.
inline FieldElem q_int(long n, const QBase& Q = {}) {
    if (n < 0) throw UsageError("q_int: negative argument");
    if (Q.is_default()) {
        if (n == 0) return {};
        return FieldElem::from_poly(QPoly(std::vector<Rational>(static_cast<std::size_t>(n), Rational(1))));
    }
    FieldElem acc;
    FieldElem p(1);
    for (long j = 0; j < n; ++j) {
        acc += p;
        p *= Q.base;
    }
    return acc;
}

inline FieldElem q_factorial(long n, const QBase& Q = {}) {
    if (n < 0) throw UsageError("q_factorial: negative argument");
    FieldElem r(1);
    for (long j = 1; j <= n; ++j) r *= q_int(j, Q);
    return r;
}

namespace detail {

inline std::vector<FieldElem> q_pascal_row(long n, const QBase& Q) {
    std::vector<FieldElem> row{FieldElem(1)};
    std::vector<FieldElem> powers{FieldElem(1)};
    for (long m = 1; m <= n; ++m) {
        powers.push_back(powers.back() * Q.base);
        std::vector<FieldElem> next(static_cast<std::size_t>(m) + 1);
        next[0] = FieldElem(1);
        next[static_cast<std::size_t>(m)] = FieldElem(1);
        // [m k] = [m-1 k-1] + Q^k [m-1 k]
        for (long k = 1; k < m; ++k) {
            const auto ks = static_cast<std::size_t>(k);
            next[ks] = row[ks - 1] + powers[ks] * row[ks];
        }
        row = std::move(next);
    }
    return row;
}

inline const std::vector<FieldElem>& default_q_pascal_row(long n) {
    thread_local std::vector<std::vector<FieldElem>> cache;
    while (static_cast<long>(cache.size()) <= n) {
        const long m = static_cast<long>(cache.size());
        if (m == 0) {
            cache.push_back({FieldElem(1)});
            continue;
        }
        const auto& prev = cache.back();
        std::vector<FieldElem> next(static_cast<std::size_t>(m) + 1);
        next[0] = FieldElem(1);
        next[static_cast<std::size_t>(m)] = FieldElem(1);
        for (long k = 1; k < m; ++k) {
            const auto ks = static_cast<std::size_t>(k);
            next[ks] = prev[ks - 1] + q_power(k) * prev[ks];
        }
        cache.push_back(std::move(next));
    }
    return cache[static_cast<std::size_t>(n)];
}

}  // namespace detail

/// Gaussian binomial [n k]_Q; zero for k < 0 or k > n. Negative n is rejected.
inline FieldElem q_binomial(long n, long k, const QBase& Q = {}) {
    if (n < 0) throw UnsupportedNegativeUpper(n);
    if (k < 0 || k > n) return {};
    if (Q.is_default()) return detail::default_q_pascal_row(n)[static_cast<std::size_t>(k)];
    return detail::q_pascal_row(n, Q)[static_cast<std::size_t>(k)];
}

/// (x; Q)_n = prod_{j<n} (1 - Q^j x).
inline FieldElem q_pochhammer(const FieldElem& x, const QBase& Q, long n) {
    if (n < 0) throw UsageError("q_pochhammer: negative length");
    FieldElem r(1);
    FieldElem qj(1);
    for (long j = 0; j < n; ++j) {
        r *= FieldElem(1) - qj * x;
        if (r.is_zero()) return r;
        qj *= Q.base;
    }
    return r;
}

/// <x>_n = prod_{j<n} (x - [j]).
inline FieldElem bracket_falling(const Rational& x, long n, const QBase& Q = {}) {
    if (n < 0) throw UsageError("bracket_falling: negative length");
    FieldElem r(1);
    const FieldElem xf(x);
    for (long j = 0; j < n; ++j) r *= xf - q_int(j, Q);
    return r;
}

}  // namespace hankelkit
