#pragma once

/**
 * @file closed_forms.hpp
 * @brief Closed-form Hankel determinants and recurrence data for the
 *        q-hypergeometric moments c(n; a, b, Q) = (b; Q)_n / (a; Q)_n, their
 *        classical limit u(n; a, b, c), and a registry of named special cases.
 *
 * Every evaluator here is a direct transcription of a product formula; none of
 * them computes a determinant. The registry pairs each formula with the moment
 * sequence whose Hankel matrix it claims to evaluate (oracle_sequence), so the
 * two can be compared by an independent determinant engine.
 */

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hankelkit/hankel.hpp"
#include "hankelkit/qcalc.hpp"
#include "hankelkit/sequences.hpp"

namespace hankelkit {

/// The (a, b, Q) of c(n; a, b, Q).
struct ThmParams {
    FieldElem a;
    FieldElem b;
    QBase Q;

    std::string describe() const { return "a=" + render(a) + " b=" + render(b) + " Q=" + render(Q.base); }
};

namespace detail {

inline FieldElem checked_div(const FieldElem& num, const FieldElem& den, const char* what) {
    if (den.is_zero()) throw PoleInFormula(what);
    return num / den;
}

inline Rational checked_div(const Rational& num, const Rational& den, const char* what) {
    if (den == 0) throw PoleInFormula(what);
    return num / den;
}

inline long choose2(long n) { return n * (n - 1) / 2; }
inline long choose3(long n) { return n * (n - 1) * (n - 2) / 6; }

inline FieldElem sign_power(long e) { return (e % 2 == 0) ? FieldElem(1) : FieldElem(-1); }

}  // namespace detail

/// c(n; a, b, Q) with PoleInFormula when (a; Q)_n vanishes.
inline FieldElem c_moment(long n, const FieldElem& a, const FieldElem& b, const QBase& Q) {
    return detail::checked_div(q_pochhammer(b, Q, n), q_pochhammer(a, Q, n), "(a; Q)_n = 0");
}

/// u(n; a, b, c) = prod_{j<n} (b + j c) / (a + j c).
inline Rational u_moment(long n, const Rational& a, const Rational& b, const Rational& c) {
    Rational r = 1;
    for (long j = 0; j < n; ++j) r *= detail::checked_div(b + j * c, a + j * c, "a + j c = 0");
    return r;
}

/// T(k) of the zero-s recurrence whose even column 0 is c(n; a, b, Q).
inline FieldElem thm1_T(long k, const ThmParams& p) {
    const QBase& Q = p.Q;
    const FieldElem one(1);
    if (k % 2 == 0) {
        const long n = k / 2;
        // n = 0: the factor (1 - Q^-1 a) cancels.
        if (n == 0) return detail::checked_div(one - p.b, one - p.a, "T(0): 1 - a = 0");
        const FieldElem num = Q.power(n) * (one - Q.power(n) * p.b) * (one - Q.power(n - 1) * p.a);
        const FieldElem den = (one - Q.power(2 * n - 1) * p.a) * (one - Q.power(2 * n) * p.a);
        return detail::checked_div(num, den, "T(2n)");
    }
    const long n = (k - 1) / 2;
    const FieldElem num = Q.power(n) * (one - Q.power(n + 1)) * (p.b - Q.power(n) * p.a);
    const FieldElem den = (one - Q.power(2 * n + 1) * p.a) * (one - Q.power(2 * n) * p.a);
    return detail::checked_div(num, den, "T(2n+1)");
}

/// A(n, k) of the zero-s triangle in closed form; zero unless n = k (mod 2) and 0 <= k <= n.
inline FieldElem thm1_A(long n, long k, const ThmParams& p) {
    if (k < 0 || k > n || (n - k) % 2 != 0) return {};
    const QBase& Q = p.Q;
    if (n % 2 == 0) {
        const long N = n / 2, K = k / 2;
        return q_binomial(N, K, Q) * c_moment(N - K, Q.power(2 * K) * p.a, Q.power(K) * p.b, Q);
    }
    const long N = (n - 1) / 2, K = (k - 1) / 2;
    return q_binomial(N, K, Q) * c_moment(N - K, Q.power(2 * K + 1) * p.a, Q.power(K + 1) * p.b, Q);
}

inline TSeq thm1_T_seq(const ThmParams& p) {
    return TSeq([p](std::size_t k) { return thm1_T(static_cast<long>(k), p); });
}

/// det(c(i + j + m; a, b, Q))_{i,j<n} in closed form.
inline FieldElem thm2_det(long n, long m, const ThmParams& p) {
    if (n < 1 || m < 0) throw UsageError("thm2_det: need n >= 1, m >= 0");
    const QBase& Q = p.Q;
    FieldElem d = Q.power(2 * detail::choose3(n));
    for (long k = 1; k < n; ++k) {
        FieldElem num = q_pochhammer(p.b, Q, k) * q_pochhammer(Q.base, Q, k);
        for (long j = 0; j < k; ++j) num *= p.b - Q.power(j) * p.a;
        const FieldElem den = q_pochhammer(Q.power(k - 1) * p.a, Q, k) * q_pochhammer(p.a, Q, 2 * k);
        d *= detail::checked_div(num, den, "d(n, 0)");
    }
    if (m == 0) return d;
    d *= Q.power(m * detail::choose2(n));
    for (long j = 0; j < m; ++j)
        d *= detail::checked_div(q_pochhammer(Q.power(j) * p.b, Q, n), q_pochhammer(Q.power(n - 1 + j) * p.a, Q, n),
                                 "d(n, m) shift factor");
    return d;
}

/// T(k) for the classical moments u(n; a, b, c).
inline Rational cor1_T(long k, const Rational& a, const Rational& b, const Rational& c) {
    if (k % 2 == 0) {
        const long n = k / 2;
        if (n == 0) return detail::checked_div(b, a, "T(0): a = 0");
        return detail::checked_div((a + (n - 1) * c) * (b + n * c), (a + 2 * n * c) * (a + (2 * n - 1) * c), "T(2n)");
    }
    const long n = (k - 1) / 2;
    return detail::checked_div((n + 1) * c * (a - b + n * c), (a + 2 * n * c) * (a + (2 * n + 1) * c), "T(2n+1)");
}

inline Rational cor1_A(long n, long k, const Rational& a, const Rational& b, const Rational& c) {
    if (k < 0 || k > n || (n - k) % 2 != 0) return 0;
    if (n % 2 == 0) {
        const long N = n / 2, K = k / 2;
        return Rational(binomial_signed(N, K)) * u_moment(N - K, a + 2 * K * c, b + K * c, c);
    }
    const long N = (n - 1) / 2, K = (k - 1) / 2;
    return Rational(binomial_signed(N, K)) * u_moment(N - K, a + (2 * K + 1) * c, b + (K + 1) * c, c);
}

/// det(u(i + j + m; a, b, c))_{i,j<n} in closed form.
inline Rational cor2_det(long n, long m, const Rational& a, const Rational& b, const Rational& c) {
    if (n < 1 || m < 0) throw UsageError("cor2_det: need n >= 1, m >= 0");
    Rational d = 1;
    for (long k = 1; k < n; ++k) {
        Rational num = Rational(factorial(static_cast<unsigned long>(k))) * pow_rational(c, k);
        for (long j = 0; j < k; ++j) num *= (b + j * c) * (a - b + j * c);
        Rational den = 1;
        for (long j = 0; j < k; ++j) den *= a + (j + k - 1) * c;
        for (long j = 0; j < 2 * k; ++j) den *= a + j * c;
        d *= detail::checked_div(num, den, "D(n, 0)");
    }
    for (long j = 0; j < m; ++j)
        for (long i = 0; i < n; ++i)
            d *= detail::checked_div(b + (j + i) * c, a + (i + n + j - 1) * c, "D(n, m) shift factor");
    return d;
}

// ---------------------------------------------------------------------------
// Registry

enum class FormulaId {
    CatalanShift,
    QPochRows,
    QFactorial,
    BracketFalling,
    Carlitz,
    QHilbert,
    RecipBracket,
    CBq0,
    CBqm,
    CentralBinomial,
    OddBinomialRel,
    Andrews0,
    Andrewsm,
};

inline const std::vector<FormulaId>& all_formulas() {
    static const std::vector<FormulaId> ids{
        FormulaId::CatalanShift, FormulaId::QPochRows,       FormulaId::QFactorial,     FormulaId::BracketFalling,
        FormulaId::Carlitz,      FormulaId::QHilbert,        FormulaId::RecipBracket,   FormulaId::CBq0,
        FormulaId::CBqm,         FormulaId::CentralBinomial, FormulaId::OddBinomialRel, FormulaId::Andrews0,
        FormulaId::Andrewsm};
    return ids;
}

inline std::string to_string(FormulaId id) {
    switch (id) {
        case FormulaId::CatalanShift: return "CatalanShift";
        case FormulaId::QPochRows: return "QPochRows";
        case FormulaId::QFactorial: return "QFactorial";
        case FormulaId::BracketFalling: return "BracketFalling";
        case FormulaId::Carlitz: return "Carlitz";
        case FormulaId::QHilbert: return "QHilbert";
        case FormulaId::RecipBracket: return "RecipBracket";
        case FormulaId::CBq0: return "CBq0";
        case FormulaId::CBqm: return "CBqm";
        case FormulaId::CentralBinomial: return "CentralBinomial";
        case FormulaId::OddBinomialRel: return "OddBinomialRel";
        case FormulaId::Andrews0: return "Andrews0";
        case FormulaId::Andrewsm: return "Andrewsm";
    }
    return "?";
}

inline FormulaId parse_formula_id(std::string_view name) {
    for (FormulaId id : all_formulas())
        if (to_string(id) == name) return id;
    throw UsageError("unknown formula id '" + std::string(name) + "'");
}

inline bool formula_needs_x(FormulaId id) { return id == FormulaId::QPochRows || id == FormulaId::BracketFalling; }

/// Formulas defined only for m = 0.
inline bool formula_fixed_m0(FormulaId id) { return id == FormulaId::CBq0 || id == FormulaId::Andrews0; }

namespace detail {

inline FieldElem q_int_ratio_product(long j, long offset) {
    // prod_{i=1}^{j} [offset + j + i] / [j + i]
    FieldElem r(1);
    for (long i = 1; i <= j; ++i) r *= q_int(offset + j + i) / q_int(j + i);
    return r;
}

inline Rational int_ratio_product(long j, long offset) {
    // prod_{i=1}^{j} (offset + j + i) / (j + i)
    Rational r = 1;
    for (long i = 1; i <= j; ++i) r *= make_rational(offset + j + i, j + i);
    return r;
}

inline FieldElem one_plus_q_power(long k) { return FieldElem(1) + q_power(k); }

inline FieldElem cbq0(long n) {
    FieldElem den(1);
    for (long j = 1; j <= 2 * n - 2; ++j) den *= pow_int(one_plus_q_power(j), 2 * n - 1 - j);
    return q_power(n * (n - 1) * (4 * n - 5) / 6) / den;
}

inline FieldElem andrews0(long n) {
    FieldElem den = pow_int(one_plus_q_power(1), n - 1);
    for (long j = 0; j <= 2 * n - 3; ++j) den *= pow_int(one_plus_q_power(j + 2), 2 * n - 2 - j);
    return q_power(n * (n - 1) * (4 * n - 5) / 6) / den;
}

inline Rational central_binomial_det(long n, long m) {
    Rational r = pow_rational(Rational(2), n - 1 + m);
    for (long j = 0; j < m; ++j) r *= int_ratio_product(j, 2 * n - 1);
    return r;
}

}  // namespace detail

/// d(n, m; q^2, q, q^2) through the unsimplified shift product (q^{2j+1}; q^2)_n / (q^{2n+2j}; q^2)_n.
inline FieldElem cbqm_via_pochhammer(long n, long m) {
    const QBase Q2 = QBase::q_to(2);
    FieldElem r = q_power(2 * m * detail::choose2(n));
    for (long j = 0; j < m; ++j)
        r *= q_pochhammer(q_power(2 * j + 1), Q2, n) / q_pochhammer(q_power(2 * n + 2 * j), Q2, n);
    return r * detail::cbq0(n);
}

/// Value of a registry formula at (n, m, x).
inline FieldElem closed_form(FormulaId id, long n, long m, const std::optional<Rational>& x = std::nullopt) {
    using namespace detail;
    if (n < 1) throw UsageError("closed_form: n must be >= 1");
    if (m < 0) throw UsageError("closed_form: m must be >= 0");
    if (formula_needs_x(id) && !x) throw MissingParameter("x");
    if (formula_fixed_m0(id) && m != 0) throw UsageError(to_string(id) + " is defined for m = 0 only");

    switch (id) {
        case FormulaId::CatalanShift: {
            Rational r = 1;
            for (long j = 1; j <= m - 1; ++j) r *= int_ratio_product(j, 2 * n);
            return r;
        }
        case FormulaId::QPochRows: {
            const FieldElem xf(*x);
            FieldElem r = q_power(2 * choose3(n) + m * choose2(n)) * pow_int(xf, choose2(n));
            for (long k = 0; k < n; ++k)
                r *= q_pochhammer(xf, QBase{}, k + m) * q_pochhammer(FieldElem::q(), QBase{}, k);
            return r;
        }
        case FormulaId::QFactorial: {
            FieldElem r = q_power(2 * choose3(n) + (m + 1) * choose2(n));
            for (long k = 0; k < n; ++k) r *= q_factorial(k + m) * q_factorial(k);
            return r;
        }
        case FormulaId::BracketFalling: {
            FieldElem r = sign_power(choose2(n)) * q_power(2 * choose3(n) + m * choose2(n));
            for (long j = 0; j < n; ++j) r *= q_factorial(j) * bracket_falling(*x, j + m);
            return r;
        }
        case FormulaId::Carlitz: {
            FieldElem r = sign_power(choose2(n)) * q_power(n * (n - 1) * (n - 1) / 2);
            for (long k = 0; k < n; ++k) {
                // The k = 0 denominator [-1 0] is read as the empty product 1.
                const FieldElem den = (k == 0) ? FieldElem(1) : q_binomial(2 * k - 1, k);
                r *= q_binomial(m + k, 2 * k) / den;
            }
            return r;
        }
        case FormulaId::QHilbert: {
            FieldElem r = q_power(m * choose2(n) + n * (n - 1) * (2 * n - 1) / 6);
            for (long j = 0; j < m; ++j) {
                const FieldElem f = q_factorial(j + n);
                r *= f * f / (q_factorial(j) * q_factorial(2 * n + j));
            }
            for (long j = 0; j < n; ++j) r *= pow_int(q_factorial(j), 3) / q_factorial(n + j);
            return r;
        }
        case FormulaId::RecipBracket: {
            FieldElem r = sign_power(choose2(n)) * q_power(n * (n - 1) * (n - 1) / 2);
            for (long j = 0; j <= n + m - 2; ++j) r *= q_int(j) / q_int(n + j);
            return r;
        }
        case FormulaId::CBq0: return cbq0(n);
        case FormulaId::CBqm: {
            FieldElem r = q_power(2 * m * choose2(n));
            for (long j = 0; j < m; ++j)
                r *= q_int_ratio_product(j, 2 * n - 1) / q_pochhammer(-q_power(j + 1), QBase{}, 2 * n - 1);
            return r * cbq0(n);
        }
        case FormulaId::CentralBinomial: return central_binomial_det(n, m);
        case FormulaId::OddBinomialRel:
            return FieldElem(central_binomial_det(n, m + 1) / pow_rational(Rational(2), n));
        case FormulaId::Andrews0: return andrews0(n);
        case FormulaId::Andrewsm: {
            FieldElem r = q_power(2 * m * choose2(n));
            for (long j = 0; j < m; ++j)
                r *= q_int_ratio_product(j, 2 * n) / q_pochhammer(-q_power(j + 1), QBase{}, 2 * n);
            return r * andrews0(n);
        }
    }
    throw UsageError("unknown formula");
}

/// The moment sequence and Hankel shift whose determinant a registry formula evaluates.
struct OracleMatrixSpec {
    MomentSeq seq;
    std::size_t shift;
};

inline OracleMatrixSpec oracle_sequence(FormulaId id, long m, const std::optional<Rational>& x = std::nullopt) {
    if (formula_needs_x(id) && !x) throw MissingParameter("x");
    const auto shift = static_cast<std::size_t>(m);
    switch (id) {
        case FormulaId::CatalanShift: return {MomentSeq::catalan(), shift};
        case FormulaId::QPochRows: return {MomentSeq::cseq(FieldElem(0), FieldElem(*x)), shift};
        case FormulaId::QFactorial:
            return {MomentSeq::generated("[n]!", [](std::size_t n) { return q_factorial(static_cast<long>(n)); }),
                    shift};
        case FormulaId::BracketFalling:
            return {MomentSeq::generated("<x>_n",
                                         [xv = *x](std::size_t n) { return bracket_falling(xv, static_cast<long>(n)); }),
                    shift};
        case FormulaId::Carlitz:
            return {MomentSeq::generated("[n+m m]",
                                         [m](std::size_t n) { return q_binomial(static_cast<long>(n) + m, m); }),
                    0};
        case FormulaId::QHilbert:
            return {MomentSeq::generated("1/[n+1]",
                                         [](std::size_t n) { return q_int(static_cast<long>(n) + 1).inverse(); }),
                    shift};
        case FormulaId::RecipBracket:
            return {MomentSeq::generated("1/[n]",
                                         [](std::size_t n) {
                                             if (n == 0) throw PoleInSequence(0);
                                             return q_int(static_cast<long>(n)).inverse();
                                         }),
                    shift};
        case FormulaId::CBq0: return {MomentSeq::cseq(q_power(2), FieldElem::q(), QBase::q_to(2)), 0};
        case FormulaId::CBqm: return {MomentSeq::cseq(q_power(2), FieldElem::q(), QBase::q_to(2)), shift};
        case FormulaId::CentralBinomial: return {MomentSeq::central_binomial(), shift};
        case FormulaId::OddBinomialRel:
            return {MomentSeq::generated("C(2n+1,n)",
                                         [](std::size_t n) { return FieldElem(Rational(binomial(2 * n + 1, n))); }),
                    shift};
        case FormulaId::Andrews0: return {MomentSeq::andrews_q_catalan(), 0};
        case FormulaId::Andrewsm: return {MomentSeq::andrews_q_catalan(), shift};
    }
    throw UsageError("unknown formula");
}

/// Brute-force determinant of the matrix a registry formula claims to evaluate.
inline FieldElem oracle_determinant(FormulaId id, long n, long m, const std::optional<Rational>& x = std::nullopt,
                                    DetEngine engine = DetEngine::Bareiss) {
    if (n < 1) throw UsageError("oracle_determinant: n must be >= 1");
    const auto spec = oracle_sequence(id, m, x);
    return det_exact(hankel_matrix(spec.seq, static_cast<std::size_t>(n), spec.shift), engine);
}

}  // namespace hankelkit
