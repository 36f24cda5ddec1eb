#pragma once

/**
 * @file identities.hpp
 * @brief Summation identities over the recurrence triangles, as exact residual checks.
 *
 * Each check_* evaluates both sides independently and reports lhs - rhs; an
 * identity holds exactly when the canonical residual is zero.
 */

#include <string>
#include <vector>

#include "hankelkit/closed_forms.hpp"
#include "hankelkit/triangle.hpp"

namespace hankelkit {

struct IdentityReport {
    std::string id;
    std::string params;
    FieldElem lhs;
    FieldElem rhs;
    FieldElem residual;
    bool holds = false;
};

inline IdentityReport make_report(std::string id, std::string params, FieldElem lhs, FieldElem rhs) {
    IdentityReport r{std::move(id), std::move(params), std::move(lhs), std::move(rhs), {}, false};
    r.residual = r.lhs - r.rhs;
    r.holds = r.residual.is_zero();
    return r;
}

/// sum_k (-1)^k a(n, k) = [n = 0].
inline IdentityReport check_alt_sum(const Triangle& tri, std::size_t n) {
    FieldElem lhs;
    const auto& row = tri.row(n);
    for (std::size_t k = 0; k < row.size(); ++k) lhs += (k % 2 == 0) ? row[k] : -row[k];
    return make_report("alt-sum", "n=" + std::to_string(n), lhs, FieldElem(n == 0 ? 1 : 0));
}

/// sum_k a(n, k) = C(2n, n).
inline IdentityReport check_row_sum(const Triangle& tri, std::size_t n) {
    FieldElem lhs;
    for (const auto& v : tri.row(n)) lhs += v;
    return make_report("row-sum", "n=" + std::to_string(n), lhs, FieldElem(Rational(binomial(2 * n, n))));
}

/// sum_k (-1)^k A(2n, 2k) prod_{j<k} T(2j) = [n = 0], with A from the zero-s recurrence.
inline IdentityReport check_weighted_alt_sum(const TSeq& T, std::size_t n) {
    const Triangle A = build_zero_s_triangle(T, 2 * n);
    FieldElem lhs;
    FieldElem weight(1);
    for (std::size_t k = 0; k <= n; ++k) {
        if (k > 0) weight *= T(2 * k - 2);
        const FieldElem term = A.at(2 * n, static_cast<long>(2 * k)) * weight;
        lhs += (k % 2 == 0) ? term : -term;
    }
    return make_report("weighted-alt-sum", "n=" + std::to_string(n), lhs, FieldElem(n == 0 ? 1 : 0));
}

namespace detail {

// sum_k s^k Q^{C(k,2)} [n k] (1 - Q^{2k} a) / (Q^k a; Q)_{n+1}, s = -1 or 1.
inline FieldElem gauss_sum(const FieldElem& a, long n, const QBase& Q, bool alternating) {
    FieldElem sum;
    for (long k = 0; k <= n; ++k) {
        FieldElem term = Q.power(choose2(k)) * q_binomial(n, k, Q) * (FieldElem(1) - Q.power(2 * k) * a);
        term = checked_div(term, q_pochhammer(Q.power(k) * a, Q, n + 1), "(Q^k a; Q)_{n+1}");
        sum += (alternating && k % 2 == 1) ? -term : term;
    }
    return sum;
}

inline std::string a_params(const FieldElem& a, long n, const QBase& Q) {
    return "a=" + render(a) + " Q=" + render(Q.base) + " n=" + std::to_string(n);
}

}  // namespace detail

/// sum_k (-1)^k Q^{C(k,2)} [n k] (1 - Q^{2k} a) / (Q^k a; Q)_{n+1} = [n = 0].
inline IdentityReport check_eq47(const FieldElem& a, long n, const QBase& Q = {}) {
    return make_report("alt-gauss-sum", detail::a_params(a, n, Q), detail::gauss_sum(a, n, Q, true),
                       FieldElem(n == 0 ? 1 : 0));
}

/// sum_k Q^{C(k,2)} [n k] (1 - Q^{2k} a) / (Q^k a; Q)_{n+1} = (-1; Q)_n / (Q a; Q^2)_n.
inline IdentityReport check_eq48(const FieldElem& a, long n, const QBase& Q = {}) {
    const QBase Q2(Q.base * Q.base);
    const FieldElem rhs =
        detail::checked_div(q_pochhammer(FieldElem(-1), Q, n), q_pochhammer(Q.base * a, Q2, n), "(Q a; Q^2)_n");
    return make_report("gauss-sum", detail::a_params(a, n, Q), detail::gauss_sum(a, n, Q, false), rhs);
}

/// sum_k A(2n, 2k) prod_{j<k} T(2j) = (b; Q)_n (-1; Q)_n / (a; Q^2)_n, A and T in closed form.
inline IdentityReport check_eq49(const ThmParams& p, long n) {
    FieldElem lhs;
    FieldElem weight(1);
    for (long k = 0; k <= n; ++k) {
        if (k > 0) weight *= thm1_T(2 * k - 2, p);
        lhs += thm1_A(2 * n, 2 * k, p) * weight;
    }
    const QBase Q2(p.Q.base * p.Q.base);
    const FieldElem rhs = detail::checked_div(q_pochhammer(p.b, p.Q, n) * q_pochhammer(FieldElem(-1), p.Q, n),
                                              q_pochhammer(p.a, Q2, n), "(a; Q^2)_n");
    return make_report("weighted-sum", p.describe() + " n=" + std::to_string(n), lhs, rhs);
}

/// The weighted sum at (q^4, q, q^2), a q-analogue of the row sum C(2n, n). Its
/// general right side is compared with the expanded sum
///   sum_k [2k+1]/[n+k+1] [2n n-k] (1 + q^{2k+1})/(1 + q^{n+k+1}) q^{k^2-k} / ((-q; q)_{n-k} (-q; q)_{n+k}),
/// with 2 / (1 + q^{2n}) [2n n] / prod_{j=1}^n (1 + q^j)^2, and with 2 / (1 + q^{2n}) A(2n, 0; q^2, q, q^2).
inline std::vector<IdentityReport> check_weighted_sum_q4(long n) {
    const ThmParams p{q_power(4), FieldElem::q(), QBase::q_to(2)};
    const IdentityReport general = check_eq49(p, n);
    const FieldElem one(1);
    const FieldElem minus_q = -FieldElem::q();
    FieldElem expanded;
    for (long k = 0; k <= n; ++k) {
        FieldElem t = q_int(2 * k + 1) / q_int(n + k + 1) * q_binomial(2 * n, n - k);
        t *= (one + q_power(2 * k + 1)) / (one + q_power(n + k + 1)) * q_power(k * k - k);
        expanded += t / (q_pochhammer(minus_q, QBase{}, n - k) * q_pochhammer(minus_q, QBase{}, n + k));
    }
    const FieldElem lead = FieldElem(2) / (FieldElem(1) + q_power(2 * n));
    FieldElem prod(1);
    for (long j = 1; j <= n; ++j) prod *= pow_int(FieldElem(1) + q_power(j), 2);
    const FieldElem via_binomial = lead * q_binomial(2 * n, n) / prod;
    const FieldElem via_A = lead * thm1_A(2 * n, 0, ThmParams{q_power(2), FieldElem::q(), QBase::q_to(2)});
    const std::string params = "n=" + std::to_string(n);
    return {general, make_report("weighted-sum-q4/expanded", params, general.rhs, expanded),
            make_report("weighted-sum-q4/binomial", params, general.rhs, via_binomial),
            make_report("weighted-sum-q4/A", params, general.rhs, via_A)};
}

/// General right side at (q^2, q, q^2) against prod_{j<n} (1 + q^{2j}) / (1 + q^{2j+1}).
inline std::vector<IdentityReport> check_weighted_sum_q2(long n) {
    const ThmParams p{q_power(2), FieldElem::q(), QBase::q_to(2)};
    const IdentityReport general = check_eq49(p, n);
    FieldElem prod(1);
    for (long j = 0; j < n; ++j) prod *= (FieldElem(1) + q_power(2 * j)) / (FieldElem(1) + q_power(2 * j + 1));
    return {general, make_report("weighted-sum-q2/product", "n=" + std::to_string(n), general.rhs, prod)};
}

/// Residuals of the two recurrence steps the closed-form A and T must satisfy:
///   A(2n+2, 2k) - A(2n+1, 2k-1) - T(2k) A(2n+1, 2k+1)
///   A(2n+1, 2k+1) - A(2n, 2k) - T(2k+1) A(2n, 2k+2)
inline std::vector<IdentityReport> check_thm1_steps(const ThmParams& p, long n, long k) {
    const std::string params = p.describe() + " n=" + std::to_string(n) + " k=" + std::to_string(k);
    const FieldElem even = thm1_A(2 * n + 2, 2 * k, p) - thm1_A(2 * n + 1, 2 * k - 1, p) -
                           thm1_T(2 * k, p) * thm1_A(2 * n + 1, 2 * k + 1, p);
    const FieldElem odd = thm1_A(2 * n + 1, 2 * k + 1, p) - thm1_A(2 * n, 2 * k, p) -
                          thm1_T(2 * k + 1, p) * thm1_A(2 * n, 2 * k + 2, p);
    return {make_report("recurrence-even-step", params, even, {}), make_report("recurrence-odd-step", params, odd, {})};
}

/// The alternating weighted sum with closed-form A, T equals (b; Q)_n times the
/// alternating Gauss sum at a / Q. Needs a != Q: at a = Q the k = 0 Gauss term
/// is 0/0 even though the left side is regular.
inline IdentityReport check_alt_sum_reduction(const ThmParams& p, long n) {
    FieldElem lhs;
    FieldElem weight(1);
    for (long k = 0; k <= n; ++k) {
        if (k > 0) weight *= thm1_T(2 * k - 2, p);
        const FieldElem term = thm1_A(2 * n, 2 * k, p) * weight;
        lhs += (k % 2 == 0) ? term : -term;
    }
    const FieldElem rhs = q_pochhammer(p.b, p.Q, n) * detail::gauss_sum(p.a / p.Q.base, n, p.Q, true);
    return make_report("alt-sum-reduction", p.describe() + " n=" + std::to_string(n), lhs, rhs);
}

}  // namespace hankelkit
