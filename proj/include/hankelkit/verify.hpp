#pragma once

/**
 * @file verify.hpp
 * @brief Closed form against brute force, over parameter grids, as reports.
 *
 * A suite is expanded into an ordered list of cases before anything runs.
 * Every case is isolated (its exceptions become a record) and the records
 * keep that order regardless of how many worker threads evaluate them, so two
 * runs of the same spec produce byte-identical reports. Wall time is recorded
 * only on request for the same reason.
 */

#include <algorithm>
#include <array>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "hankelkit/closed_forms.hpp"
#include "hankelkit/identities.hpp"

namespace hankelkit {

// ---------------------------------------------------------------------------
// Parameter samples

enum class SampleKind { QPowerPairs, RationalPairs };

namespace detail {

/// True when the closed-form T, A and determinant are defined at p for all n <= n_max, m <= m_max.
inline bool pole_free(const ThmParams& p, long n_max, long m_max) {
    if (p.a == p.b || p.a.is_one()) return false;
    try {
        for (long k = 0; k <= 2 * n_max + 1; ++k) (void)thm1_T(k, p);
        for (long n = 1; n <= n_max; ++n)
            for (long m = 0; m <= m_max; ++m) (void)thm2_det(n, m, p);
        (void)c_moment(2 * n_max + m_max, p.a, p.b, p.Q);
    } catch (const MathError&) {
        return false;
    }
    return true;
}

inline std::vector<ThmParams> q_power_candidates() {
    std::vector<ThmParams> out{{q_power(4), q_power(1), QBase::q_to(2)},
                               {q_power(2), q_power(1), QBase::q_to(2)},
                               {q_power(1), q_power(2), QBase{}},
                               {q_power(1), q_power(3), QBase{}},
                               {q_power(1), q_power(4), QBase{}}};
    for (long i = 1; i <= 6; ++i)
        for (long j = 1; j <= 6; ++j) {
            if (i == 1 && j >= 2 && j <= 4) continue;
            out.push_back({q_power(i), q_power(j), QBase{}});
        }
    return out;
}

inline std::vector<Rational> small_rationals() {
    std::vector<Rational> vals;
    for (long num = -7; num <= 7; ++num)
        for (long den = 1; den <= 7; ++den) {
            const Rational r = make_rational(num, den);
            if (std::find(vals.begin(), vals.end(), r) == vals.end()) vals.push_back(r);
        }
    return vals;
}

inline std::vector<ThmParams> rational_candidates() {
    const auto vals = small_rationals();
    std::vector<ThmParams> out;
    for (const auto& a : vals)
        for (const auto& b : vals) out.push_back({FieldElem(a), FieldElem(b), QBase{}});
    return out;
}

}  // namespace detail

/// Deterministic pole-screened samples. Seed 0 takes the documented enumeration
/// in order; any other seed shuffles it first (mt19937_64, Fisher-Yates).
///
/// q-power pairs: (q^4, q; q^2), (q^2, q; q^2), (q, q^2), (q, q^3), (q, q^4),
/// then (q^i, q^j) with base q for 1 <= i, j <= 6 in lexicographic order.
/// Rational pairs: a, b over the distinct values n/d, -7 <= n <= 7, 1 <= d <= 7,
/// base q, lexicographic in (n, d) of a then b.
inline std::vector<ThmParams> sample_parameters(SampleKind kind, std::size_t count, std::uint64_t seed = 0,
                                                long n_max = 5, long m_max = 3) {
    if (count == 0) throw UsageError("sample_parameters: count must be positive");
    auto candidates = kind == SampleKind::QPowerPairs ? detail::q_power_candidates() : detail::rational_candidates();
    if (seed != 0) {
        std::mt19937_64 rng(seed);
        for (std::size_t i = candidates.size(); i > 1; --i) {
            std::uniform_int_distribution<std::size_t> pick(0, i - 1);
            std::swap(candidates[i - 1], candidates[pick(rng)]);
        }
    }
    std::vector<ThmParams> out;
    for (const auto& p : candidates) {
        if (out.size() == count) break;
        if (detail::pole_free(p, n_max, m_max)) out.push_back(p);
    }
    if (out.size() < count) throw InsufficientSamples(count, out.size());
    return out;
}

// ---------------------------------------------------------------------------
// Suites

struct SuiteSpec {
    std::string id;
    long n_max = 5;
    long m_max = 3;
    std::vector<ThmParams> params;
    std::vector<std::array<Rational, 3>> triples;
    std::vector<Rational> xs;
    DetEngine engine = DetEngine::Bareiss;
    std::uint64_t seed = 0;
    bool timings = false;
};

enum class CaseStatus { Pass, Fail, ExpectedFailure, Anomaly, Error };

inline std::string to_string(CaseStatus s) {
    switch (s) {
        case CaseStatus::Pass: return "pass";
        case CaseStatus::Fail: return "fail";
        case CaseStatus::ExpectedFailure: return "expected-failure";
        case CaseStatus::Anomaly: return "anomaly";
        case CaseStatus::Error: return "error";
    }
    return "?";
}

struct CaseRecord {
    std::string check;
    std::string params;
    long n = -1;  // -1: not applicable
    long m = -1;
    std::string expected;
    std::string actual;
    CaseStatus status = CaseStatus::Error;
    std::string message;
    double wall_ms = 0;
};

struct SuiteSummary {
    std::size_t total = 0, passed = 0, failed = 0, expected_failures = 0, anomalies = 0, errors = 0;
};

struct SuiteReport {
    std::string suite;
    std::uint64_t seed = 0;
    std::string engine;
    bool timings = false;
    std::vector<CaseRecord> records;
    SuiteSummary summary;

    /// Only genuine failures, errors and anomalies count against a suite.
    bool ok() const { return summary.failed == 0 && summary.errors == 0 && summary.anomalies == 0; }

    std::vector<const CaseRecord*> expected_failures() const {
        std::vector<const CaseRecord*> out;
        for (const auto& r : records)
            if (r.status == CaseStatus::ExpectedFailure) out.push_back(&r);
        return out;
    }
};

/// expected vs actual; holds iff canonical forms agree.
struct Comparison {
    FieldElem expected;
    FieldElem actual;
};

struct Case {
    std::string check;
    std::string params;
    long n = -1;
    long m = -1;
    std::function<Comparison()> run;
    bool expect_failure = false;
    std::string note;  // shown for expected failures
};

namespace detail {

inline const char* engine_name(DetEngine e) { return e == DetEngine::Gauss ? "gauss" : "bareiss"; }

inline std::string triple_string(const std::array<Rational, 3>& t) {
    return "a=" + t[0].get_str() + " b=" + t[1].get_str() + " c=" + t[2].get_str();
}

inline Comparison from_report(const IdentityReport& r) { return {r.rhs, r.lhs}; }

inline void add_identity(std::vector<Case>& cases, std::string check, std::string params, long n,
                         std::function<IdentityReport()> f) {
    cases.push_back({std::move(check), std::move(params), n, -1, [f] { return from_report(f()); }});
}

inline FieldElem det_of(const MomentSeq& s, long n, long m, DetEngine e) {
    return det_exact(hankel_matrix(s, static_cast<std::size_t>(n), static_cast<std::size_t>(m)), e);
}

// --- catalan-basics -------------------------------------------------------

inline void catalan_basics(const SuiteSpec& spec, std::vector<Case>& cases) {
    for (long n = 1; n <= std::max(spec.n_max, 8L); ++n)
        for (DetEngine e : {DetEngine::Gauss, DetEngine::Bareiss})
            cases.push_back({std::string("catalan-det/") + engine_name(e), "", n, 0, [n, e] {
                                 return Comparison{FieldElem(1), det_of(MomentSeq::catalan(), n, 0, e)};
                             }});
    for (long n = 1; n <= std::max(spec.n_max, 5L); ++n)
        for (long m = 0; m <= std::max(spec.m_max, 5L); ++m)
            cases.push_back({"CatalanShift", "", n, m, [n, m, e = spec.engine] {
                                 return Comparison{oracle_determinant(FormulaId::CatalanShift, n, m, std::nullopt, e),
                                                   closed_form(FormulaId::CatalanShift, n, m)};
                             }});
}

// --- tables ---------------------------------------------------------------

inline std::vector<std::vector<long>> ballot_rows() {
    return {{1}, {0, 1}, {1, 0, 1}, {0, 2, 0, 1}, {2, 0, 3, 0, 1}, {0, 5, 0, 4, 0, 1}, {5, 0, 9, 0, 5, 0, 1},
            {0, 14, 0, 14, 0, 6, 0, 1}};
}
inline std::vector<std::vector<long>> catalan_rows() {
    return {{1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}, {14, 28, 20, 7, 1}};
}
inline std::vector<std::vector<long>> central_binomial_rows() {
    return {{1}, {2, 1}, {6, 4, 1}, {20, 15, 6, 1}, {70, 56, 28, 8, 1}};
}

inline FieldElem table_mismatch_count(const Triangle& tri, const std::vector<std::vector<long>>& rows) {
    long bad = 0;
    if (tri.size() != rows.size()) return FieldElem(-1);
    for (std::size_t n = 0; n < rows.size(); ++n)
        for (std::size_t k = 0; k < rows[n].size(); ++k)
            if (tri.at(n, static_cast<long>(k)) != FieldElem(rows[n][k])) ++bad;
    return FieldElem(bad);
}

inline JacobiParams catalan_jacobi() {
    return JacobiParams([](std::size_t k) { return FieldElem(k == 0 ? 1 : 2); }, [](std::size_t) { return FieldElem(1); });
}
inline JacobiParams central_binomial_jacobi() {
    return JacobiParams([](std::size_t) { return FieldElem(2); },
                        [](std::size_t k) { return FieldElem(k == 0 ? 2 : 1); });
}

inline void tables(const SuiteSpec&, std::vector<Case>& cases) {
    cases.push_back({"table/ballot", "T=1 rows=8", -1, -1, [] {
                         return Comparison{FieldElem(0), table_mismatch_count(build_zero_s_triangle(TSeq::constant(FieldElem(1)), 7),
                                                                              ballot_rows())};
                     }});
    cases.push_back({"table/catalan", "s=1,2,2,.. t=1 rows=5", -1, -1, [] {
                         return Comparison{FieldElem(0), table_mismatch_count(build_triangle(catalan_jacobi(), 4), catalan_rows())};
                     }});
    cases.push_back({"table/central-binomial", "s=2 t=2,1,1,.. rows=5", -1, -1, [] {
                         return Comparison{FieldElem(0), table_mismatch_count(build_triangle(central_binomial_jacobi(), 4),
                                                                              central_binomial_rows())};
                     }});
    // The tables rebuilt from Jacobi parameters recovered from the moments alone.
    cases.push_back({"table/catalan-from-moments", "depth=5", -1, -1, [] {
                         return Comparison{FieldElem(0),
                                           table_mismatch_count(build_triangle(jacobi_from_moments(MomentSeq::catalan(), 5), 4),
                                                                catalan_rows())};
                     }});
    cases.push_back({"table/central-binomial-from-moments", "depth=5", -1, -1, [] {
                         return Comparison{FieldElem(0), table_mismatch_count(
                                                             build_triangle(jacobi_from_moments(MomentSeq::central_binomial(), 5), 4),
                                                             central_binomial_rows())};
                     }});
    // Binomial closed forms of the same triangles.
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            cases.push_back({"ballot-binomial", "k=" + std::to_string(k), n, -1, [n, k] {
                                 const Triangle A = build_zero_s_triangle(TSeq::constant(FieldElem(1)), 2 * n);
                                 const Rational expect(binomial_signed(2 * n, n - k) - binomial_signed(2 * n, n - k - 1));
                                 return Comparison{FieldElem(expect), A.at(2 * n, 2 * k)};
                             }});
            cases.push_back({"central-binomial-entry", "k=" + std::to_string(k), n, -1, [n, k] {
                                 const Triangle a = build_triangle(central_binomial_jacobi(), n);
                                 return Comparison{FieldElem(Rational(binomial_signed(2 * n, n - k))), a.at(n, k)};
                             }});
        }
    // Cross-sum law and contraction on the two classical triangles.
    for (long n = 0; n <= 8; ++n)
        for (long m = 0; m + n <= 8; ++m)
            for (int which = 0; which < 2; ++which)
                cases.push_back({which == 0 ? "cross-sum/catalan" : "cross-sum/central-binomial", "", n, m, [n, m, which] {
                                     const JacobiParams jp = which == 0 ? catalan_jacobi() : central_binomial_jacobi();
                                     const Triangle tri = build_triangle(jp, static_cast<std::size_t>(n + m));
                                     return Comparison{tri.at(n + m, 0), cross_sum(tri, jp, n, m)};
                                 }});
    for (long n = 0; n <= 8; ++n)
        cases.push_back({"contraction/T=1", "", n, -1, [n] {
                             const TSeq T = TSeq::constant(FieldElem(1));
                             const Triangle a = build_triangle(contract(T), n);
                             const Triangle A = build_zero_s_triangle(T, 2 * n);
                             long bad = 0;
                             for (long k = 0; k <= n; ++k)
                                 if (a.at(n, k) != A.at(2 * n, 2 * k)) ++bad;
                             return Comparison{FieldElem(0), FieldElem(bad)};
                         }});
}

// --- thm1 -----------------------------------------------------------------

/// The samples plus each q-power sample with the other base (q <-> q^2), when pole free.
inline std::vector<ThmParams> with_swapped_bases(const SuiteSpec& spec) {
    std::vector<ThmParams> out = spec.params;
    for (const auto& p : spec.params) {
        if (p.a.is_constant()) continue;
        const QBase other = p.Q.is_default() ? QBase::q_to(2) : QBase{};
        const ThmParams swapped{p.a, p.b, other};
        if (pole_free(swapped, spec.n_max, spec.m_max)) out.push_back(swapped);
    }
    return out;
}

inline void thm1(const SuiteSpec& spec, std::vector<Case>& cases) {
    for (const auto& p : with_swapped_bases(spec)) {
        for (long n = 0; n <= spec.n_max; ++n)
            for (long k = 0; k <= spec.n_max; ++k)
                for (int step = 0; step < 2; ++step)
                    cases.push_back({step == 0 ? "recurrence-even-step" : "recurrence-odd-step", p.describe(), n, k,
                                     [p, n, k, step] {
                                         return Comparison{FieldElem(0),
                                                           check_thm1_steps(p, n, k)[static_cast<std::size_t>(step)].lhs};
                                     }});
        const long rows = 2 * spec.n_max;
        cases.push_back({"closed-A-vs-recurrence", p.describe(), spec.n_max, -1, [p, rows] {
                             const Triangle A = build_zero_s_triangle(thm1_T_seq(p), static_cast<std::size_t>(rows));
                             long bad = 0;
                             for (long r = 0; r <= rows; ++r)
                                 for (long k = 0; k <= r; ++k)
                                     if (A.at(r, k) != thm1_A(r, k, p)) ++bad;
                             return Comparison{FieldElem(0), FieldElem(bad)};
                         }});
        for (long n = 0; n <= spec.n_max; ++n)
            cases.push_back({"A(2n,0)=c(n)", p.describe(), n, -1,
                             [p, n] { return Comparison{c_moment(n, p.a, p.b, p.Q), thm1_A(2 * n, 0, p)}; }});
    }
}

// --- thm2-grid ------------------------------------------------------------

inline FieldElem two_by_two(const FieldElem& a, const FieldElem& b, const QBase& Q) {
    const FieldElem one(1);
    return (one - b) * (one - Q.base) * (b - a) / ((one - a) * (one - a) * (one - Q.base * a));
}

inline void thm2_grid(const SuiteSpec& spec, std::vector<Case>& cases) {
    for (const auto& p : spec.params) {
        for (long n = 1; n <= spec.n_max; ++n)
            for (long m = 0; m <= spec.m_max; ++m)
                cases.push_back({"thm2", p.describe(), n, m, [p, n, m, e = spec.engine] {
                                     return Comparison{det_of(MomentSeq::cseq(p.a, p.b, p.Q), n, m, e), thm2_det(n, m, p)};
                                 }});
        cases.push_back({"thm2/2x2-value", p.describe(), 2, 0,
                         [p] { return Comparison{two_by_two(p.a, p.b, p.Q), thm2_det(2, 0, p)}; }});
    }
    // a kept as the indeterminate, b and the base rational constants.
    for (const Rational& Qc : {Rational(2), Rational(3), make_rational(1, 2)})
        for (const Rational& bc : {make_rational(1, 3), Rational(5), make_rational(-2, 7)}) {
            const ThmParams p{FieldElem::q(), FieldElem(bc), QBase(FieldElem(Qc))};
            cases.push_back({"thm2/2x2-value-symbolic-a", p.describe(), 2, 0, [p, e = spec.engine] {
                                 return Comparison{two_by_two(p.a, p.b, p.Q), det_of(MomentSeq::cseq(p.a, p.b, p.Q), 2, 0, e)};
                             }});
            for (long n = 1; n <= std::min(spec.n_max, 4L); ++n)
                for (long m = 0; m <= std::min(spec.m_max, 2L); ++m)
                    cases.push_back({"thm2/symbolic-a", p.describe(), n, m, [p, n, m, e = spec.engine] {
                                         return Comparison{det_of(MomentSeq::cseq(p.a, p.b, p.Q), n, m, e), thm2_det(n, m, p)};
                                     }});
        }
}

// --- cor2-grid ------------------------------------------------------------

inline void cor2_grid(const SuiteSpec& spec, std::vector<Case>& cases) {
    for (const auto& t : spec.triples)
        for (long n = 1; n <= spec.n_max; ++n)
            for (long m = 0; m <= spec.m_max; ++m)
                cases.push_back({"cor2", triple_string(t), n, m, [t, n, m, e = spec.engine] {
                                     return Comparison{det_of(MomentSeq::useq(t[0], t[1], t[2]), n, m, e),
                                                       FieldElem(cor2_det(n, m, t[0], t[1], t[2]))};
                                 }});
    const std::array<Rational, 3> cat{4, 1, 2};
    for (long n = 1; n <= 6; ++n) {
        const long e2 = choose2(n);
        Case literal{"u(4,1,2)-det=1/4^C(n,2)", triple_string(cat), n, 0, [n, e2, e = spec.engine] {
                         return Comparison{FieldElem(1 / pow_rational(Rational(4), e2)), det_of(MomentSeq::useq(4, 1, 2), n, 0, e)};
                     }};
        if (n >= 2) {
            literal.expect_failure = true;
            literal.note = "the determinant is 16^-C(n,2): t(k) = 1/16 for the moments C_n/4^n";
        }
        cases.push_back(std::move(literal));
        cases.push_back({"u(4,1,2)-det=1/16^C(n,2)", triple_string(cat), n, 0, [n, e2, e = spec.engine] {
                             return Comparison{FieldElem(1 / pow_rational(Rational(16), e2)),
                                               det_of(MomentSeq::useq(4, 1, 2), n, 0, e)};
                         }});
    }
    for (long k = 0; k <= 16; ++k)
        cases.push_back({"cor1-T(4,1,2)=1/4", "", k, -1,
                         [k] { return Comparison{FieldElem(make_rational(1, 4)), FieldElem(cor1_T(k, 4, 1, 2))}; }});
    for (long n = 0; n <= 5; ++n)
        for (long k = 0; k <= n; ++k)
            cases.push_back({"cor1-A(4,1,2)", "k=" + std::to_string(k), n, -1, [n, k] {
                                 const Rational expect = make_rational(2 * k + 1, n + k + 1) *
                                                         Rational(binomial_signed(2 * n, n - k)) /
                                                         pow_rational(Rational(4), n - k);
                                 return Comparison{FieldElem(expect), FieldElem(cor1_A(2 * n, 2 * k, 4, 1, 2))};
                             }});
}

// --- registry -------------------------------------------------------------

inline void registry(const SuiteSpec& spec, std::vector<Case>& cases) {
    for (FormulaId id : all_formulas()) {
        if (id == FormulaId::RecipBracket) continue;
        std::vector<std::optional<Rational>> xs{std::nullopt};
        if (formula_needs_x(id)) {
            xs.clear();
            for (const auto& x : spec.xs) xs.emplace_back(x);
        }
        const long m_top = formula_fixed_m0(id) ? 0 : spec.m_max;
        for (const auto& x : xs)
            for (long n = 1; n <= spec.n_max; ++n)
                for (long m = 0; m <= m_top; ++m) {
                    const std::string params = x ? "x=" + x->get_str() : "";
                    if (id == FormulaId::OddBinomialRel) {
                        // Both sides brute force: det(C(2i+2j+2m+1, .)) = det(C(2i+2j+2m+2, .)) / 2^n.
                        cases.push_back({"OddBinomialRel/relation", params, n, m, [n, m, e = spec.engine] {
                                             const FieldElem even = det_of(MomentSeq::central_binomial(), n, m + 1, e);
                                             return Comparison{even / FieldElem(pow_rational(Rational(2), n)),
                                                               oracle_determinant(FormulaId::OddBinomialRel, n, m, std::nullopt, e)};
                                         }});
                    }
                    cases.push_back({to_string(id), params, n, m, [id, n, m, x, e = spec.engine] {
                                         return Comparison{oracle_determinant(id, n, m, x, e), closed_form(id, n, m, x)};
                                     }});
                }
    }
    for (long n = 1; n <= spec.n_max; ++n)
        for (long m = 0; m <= spec.m_max; ++m)
            cases.push_back({"CBqm/pochhammer-form", "", n, m, [n, m] {
                                 return Comparison{cbqm_via_pochhammer(n, m), closed_form(FormulaId::CBqm, n, m)};
                             }});
    for (long n = 1; n <= spec.n_max; ++n)
        cases.push_back({"CBq0=thm2(q^2,q;q^2)", "", n, 0, [n] {
                             return Comparison{thm2_det(n, 0, ThmParams{q_power(2), FieldElem::q(), QBase::q_to(2)}),
                                               closed_form(FormulaId::CBq0, n, 0)};
                         }});
}

// --- eq36-as-printed ------------------------------------------------------

inline void eq36(const SuiteSpec& spec, std::vector<Case>& cases) {
    const long n_top = std::min(spec.n_max, 4L);
    for (long n = 1; n <= n_top; ++n)
        for (long m = 0; m <= spec.m_max; ++m) {
            Case c{"RecipBracket/as-printed", "", n, m, [n, m, e = spec.engine] {
                       return Comparison{oracle_determinant(FormulaId::RecipBracket, n, m, std::nullopt, e),
                                         closed_form(FormulaId::RecipBracket, n, m)};
                   }};
            c.expect_failure = true;
            c.note = m == 0 ? "the m = 0 matrix has the entry 1/[0]"
                            : "the printed product contains [0] = 0 at j = 0, the determinant does not vanish";
            cases.push_back(std::move(c));
        }
    for (long n = 1; n <= n_top; ++n)
        for (long m = 1; m <= spec.m_max; ++m)
            cases.push_back({"RecipBracket/oracle=QHilbert(n,m-1)", "", n, m, [n, m, e = spec.engine] {
                                 return Comparison{closed_form(FormulaId::QHilbert, n, m - 1),
                                                   oracle_determinant(FormulaId::RecipBracket, n, m, std::nullopt, e)};
                             }});
}

// --- identities -----------------------------------------------------------

inline void identities(const SuiteSpec& spec, std::vector<Case>& cases) {
    for (long n = 0; n <= 8; ++n) {
        add_identity(cases, "alt-sum", "catalan triangle", n,
                     [n] { return check_alt_sum(build_triangle(catalan_jacobi(), n), n); });
        add_identity(cases, "row-sum", "catalan triangle", n,
                     [n] { return check_row_sum(build_triangle(catalan_jacobi(), n), n); });
        add_identity(cases, "weighted-alt-sum", "T=1", n,
                     [n] { return check_weighted_alt_sum(TSeq::constant(FieldElem(1)), n); });
    }
    for (const auto& p : spec.params)
        for (long n = 0; n <= spec.n_max; ++n) {
            add_identity(cases, "weighted-alt-sum", p.describe(), n,
                         [p, n] { return check_weighted_alt_sum(thm1_T_seq(p), n); });
            add_identity(cases, "weighted-sum", p.describe(), n, [p, n] { return check_eq49(p, n); });
            if (p.a != p.Q.base)
                add_identity(cases, "alt-sum-reduction", p.describe(), n,
                             [p, n] { return check_alt_sum_reduction(p, n); });
        }
    // a as a q-element, and a = q against constant bases.
    std::vector<std::pair<FieldElem, QBase>> gauss_samples{{FieldElem::q(), QBase{}},
                                                           {q_power(3), QBase{}},
                                                           {FieldElem(make_rational(1, 3)), QBase{}},
                                                           {q_power(2), QBase::q_to(2)}};
    for (const Rational& Qc : {Rational(2), Rational(3), make_rational(1, 2)})
        gauss_samples.push_back({FieldElem::q(), QBase(FieldElem(Qc))});
    for (const auto& [a, Q] : gauss_samples)
        for (long n = 0; n <= spec.n_max; ++n) {
            add_identity(cases, "alt-gauss-sum", a_params(a, n, Q), n, [a, Q, n] { return check_eq47(a, n, Q); });
            add_identity(cases, "gauss-sum", a_params(a, n, Q), n, [a, Q, n] { return check_eq48(a, n, Q); });
        }
    // n = 1 by hand: the two terms are 1/(1 - Q a) and -+1/(1 - Q a).
    for (const auto& [a, Q] : gauss_samples) {
        cases.push_back({"alt-gauss-sum/n=1-terms", a_params(a, 1, Q), 1, -1, [a, Q] {
                             const FieldElem k0 = (FieldElem(1) - a) / q_pochhammer(a, Q, 2);
                             const FieldElem k1 = (FieldElem(1) - Q.power(2) * a) / q_pochhammer(Q.base * a, Q, 2);
                             const FieldElem expect = FieldElem(1) / (FieldElem(1) - Q.base * a);
                             return Comparison{expect + (-expect), k0 - k1};
                         }});
        cases.push_back({"gauss-sum/n=1=2/(1-Qa)", a_params(a, 1, Q), 1, -1, [a, Q] {
                             return Comparison{FieldElem(2) / (FieldElem(1) - Q.base * a), check_eq48(a, 1, Q).lhs};
                         }});
    }
    for (long n = 0; n <= spec.n_max; ++n) {
        cases.push_back({"weighted-sum-q4", "", n, -1, [n] { return from_report(check_weighted_sum_q4(n)[0]); }});
        for (std::size_t i = 1; i < 4; ++i)
            cases.push_back({i == 1 ? "weighted-sum-q4/expanded" : i == 2 ? "weighted-sum-q4/binomial" : "weighted-sum-q4/A",
                             "", n, -1, [n, i] { return from_report(check_weighted_sum_q4(n)[i]); }});
        cases.push_back({"weighted-sum-q2", "", n, -1, [n] { return from_report(check_weighted_sum_q2(n)[0]); }});
        cases.push_back({"weighted-sum-q2/product", "", n, -1, [n] { return from_report(check_weighted_sum_q2(n)[1]); }});
    }
}

// --- roundtrip ------------------------------------------------------------

inline std::vector<JacobiParams> random_jacobi(std::size_t count, std::size_t length, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<long> num(-3, 3), den(1, 3);
    auto draw = [&](bool nonzero) {
        for (;;) {
            const long p = num(rng), d = den(rng);
            if (!nonzero || p != 0) return FieldElem(make_rational(p, d));
        }
    };
    std::vector<JacobiParams> out;
    for (std::size_t i = 0; i < count; ++i) {
        std::vector<FieldElem> s, t;
        for (std::size_t k = 0; k < length; ++k) {
            s.push_back(draw(false));
            t.push_back(draw(true));
        }
        out.push_back(JacobiParams::from_tables(std::move(s), std::move(t)));
    }
    return out;
}

inline std::vector<std::pair<std::string, MomentSeq>> factor_sequences() {
    return {{"catalan", MomentSeq::catalan()},
            {"central-binomial", MomentSeq::central_binomial()},
            {"c:q^4,q,q^2", MomentSeq::cseq(q_power(4), FieldElem::q(), QBase::q_to(2))},
            {"c:q^2,q,q^2", MomentSeq::cseq(q_power(2), FieldElem::q(), QBase::q_to(2))}};
}

inline void roundtrip(const SuiteSpec& spec, std::vector<Case>& cases) {
    constexpr std::size_t depth = 8;
    const auto jps = random_jacobi(20, depth, spec.seed == 0 ? 20260101 : spec.seed);
    for (std::size_t i = 0; i < jps.size(); ++i) {
        const JacobiParams jp = jps[i];
        cases.push_back({"roundtrip/random", "sample=" + std::to_string(i), static_cast<long>(depth), -1, [jp] {
                             const auto moments = moments_from_jacobi(jp, 2 * depth - 1);
                             const auto rec = jacobi_from_moments(MomentSeq::explicit_values(moments), depth);
                             const auto again = moments_from_jacobi(rec, 2 * depth - 1);
                             const auto col = build_triangle(rec, depth - 1).column0();
                             long bad = 0;
                             for (std::size_t k = 0; k < moments.size(); ++k) {
                                 if (again[k] != moments[k]) ++bad;
                                 if (k < col.size() && col[k] != moments[k]) ++bad;
                             }
                             for (std::size_t k = 0; k + 1 < depth; ++k)
                                 if (rec.s(k) != jp.s(k) || rec.t(k) != jp.t(k)) ++bad;
                             return Comparison{FieldElem(0), FieldElem(bad)};
                         }});
    }
    cases.push_back({"jacobi/catalan", "depth=5", 5, -1, [] {
                         const auto jp = jacobi_from_moments(MomentSeq::catalan(), 5);
                         long bad = 0;
                         for (std::size_t k = 0; k < 4; ++k) {
                             if (jp.s(k) != FieldElem(k == 0 ? 1 : 2)) ++bad;
                             if (jp.t(k) != FieldElem(1)) ++bad;
                         }
                         return Comparison{FieldElem(0), FieldElem(bad)};
                     }});
    cases.push_back({"jacobi/central-binomial", "depth=5", 5, -1, [] {
                         const auto jp = jacobi_from_moments(MomentSeq::central_binomial(), 5);
                         long bad = 0;
                         for (std::size_t k = 0; k < 4; ++k) {
                             if (jp.s(k) != FieldElem(2)) ++bad;
                             if (jp.t(k) != FieldElem(k == 0 ? 2 : 1)) ++bad;
                         }
                         return Comparison{FieldElem(0), FieldElem(bad)};
                     }});
    for (const auto& [name, seq] : factor_sequences())
        for (long n = 1; n <= 6; ++n) {
            cases.push_back({"ldlt-product", name, n, -1, [seq = seq, n] {
                                 const auto H = hankel_matrix(seq, static_cast<std::size_t>(n));
                                 const auto f = ldlt(H);
                                 const auto D = SquareMatrix<FieldElem>::generate(
                                     static_cast<std::size_t>(n), [&](std::size_t i, std::size_t j) { return i == j ? f.D[i] : FieldElem(); });
                                 return Comparison{FieldElem(1), FieldElem(f.A * D * f.A.transpose() == H ? 1 : 0)};
                             }});
            cases.push_back({"lemma-det", name, n, -1, [seq = seq, n, e = spec.engine] {
                                 return Comparison{det_of(seq, n, 0, e),
                                                   det_via_lemma(jacobi_from_moments(seq, static_cast<std::size_t>(n)),
                                                                 static_cast<std::size_t>(n))};
                             }});
        }
    for (const auto& [name, seq] : factor_sequences())
        for (std::size_t d = 1; d <= depth; ++d)
            cases.push_back({"roundtrip/moments", name, static_cast<long>(d), -1, [seq = seq, d] {
                                 const auto terms = seq.terms_upto(d);
                                 const auto col = build_triangle(jacobi_from_moments(seq, d), d - 1).column0();
                                 return Comparison{FieldElem(1), FieldElem(col == terms ? 1 : 0)};
                             }});
}

// --- q-bridges ------------------------------------------------------------

inline void q_bridges(const SuiteSpec& spec, std::vector<Case>& cases) {
    const long n_top = std::min(spec.n_max, 4L);
    for (long n = 1; n <= n_top; ++n)
        for (long m = 0; m <= spec.m_max; ++m) {
            const long scale = n * (n - 1) + n * m;
            cases.push_back({"q->1/Andrewsm->CatalanShift", "", n, m, [n, m, scale] {
                                 const Rational v = specialize(closed_form(FormulaId::Andrewsm, n, m), 1);
                                 return Comparison{closed_form(FormulaId::CatalanShift, n, m),
                                                   FieldElem(v * pow_rational(Rational(4), scale))};
                             }});
            cases.push_back({"q->1/CBqm->CentralBinomial", "", n, m, [n, m, scale] {
                                 const Rational v = specialize(closed_form(FormulaId::CBqm, n, m), 1);
                                 return Comparison{closed_form(FormulaId::CentralBinomial, n, m),
                                                   FieldElem(v * pow_rational(Rational(4), scale))};
                             }});
            cases.push_back({"q->1/thm2(q^4,q;q^2)->cor2(4,1,2)", "", n, m, [n, m] {
                                 const ThmParams p{q_power(4), FieldElem::q(), QBase::q_to(2)};
                                 return Comparison{FieldElem(cor2_det(n, m, 4, 1, 2)), FieldElem(specialize(thm2_det(n, m, p), 1))};
                             }});
        }
    for (long n = 1; n <= n_top; ++n) {
        const long scale = n * (n - 1);
        cases.push_back({"q->1/Andrews0->Catalan", "", n, 0, [n, scale] {
                             return Comparison{FieldElem(1), FieldElem(specialize(closed_form(FormulaId::Andrews0, n, 0), 1) *
                                                                       pow_rational(Rational(4), scale))};
                         }});
        cases.push_back({"q->1/CBq0->CentralBinomial", "", n, 0, [n, scale] {
                             return Comparison{closed_form(FormulaId::CentralBinomial, n, 0),
                                               FieldElem(specialize(closed_form(FormulaId::CBq0, n, 0), 1) *
                                                         pow_rational(Rational(4), scale))};
                         }});
    }
    for (long n = 0; n <= 10; ++n) {
        cases.push_back({"q->1/term c(q^4,q;q^2)->u(4,1,2)", "", n, -1, [n] {
                             const auto c = MomentSeq::cseq(q_power(4), FieldElem::q(), QBase::q_to(2)).term(static_cast<std::size_t>(n));
                             return Comparison{FieldElem(u_moment(n, 4, 1, 2)), FieldElem(specialize(c, 1))};
                         }});
        cases.push_back({"q->1/term 4^n c(q^2,q;q^2)->C(2n,n)", "", n, -1, [n] {
                             const auto c = MomentSeq::cseq(q_power(2), FieldElem::q(), QBase::q_to(2)).term(static_cast<std::size_t>(n));
                             return Comparison{FieldElem(Rational(binomial(2 * n, n))),
                                               FieldElem(specialize(c, 1) * pow_rational(Rational(4), n))};
                         }});
    }
}

// --- engines --------------------------------------------------------------

inline FieldElem random_field_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<long> coef(-3, 3), deg(0, 2);
    auto poly = [&] {
        std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
        for (auto& x : c) x = coef(rng);
        return QPoly(std::move(c));
    };
    QPoly den;
    do den = poly();
    while (den.is_zero());
    return FieldElem::from_polys(poly(), den);
}

inline void engines(const SuiteSpec& spec, std::vector<Case>& cases) {
    std::mt19937_64 rng(spec.seed == 0 ? 12 : spec.seed);
    std::uniform_int_distribution<long> size(1, 5), num(-9, 9), den(1, 4);
    for (int i = 0; i < 50; ++i) {
        const auto n = static_cast<std::size_t>(size(rng));
        SquareMatrix<Rational> M(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) M(r, c) = make_rational(num(rng), den(rng));
        cases.push_back({"engines/rational", "sample=" + std::to_string(i), static_cast<long>(n), -1, [M] {
                             return Comparison{FieldElem(det_exact(M, DetEngine::Gauss)), FieldElem(det_exact(M, DetEngine::Bareiss))};
                         }});
    }
    for (int i = 0; i < 50; ++i) {
        const auto n = static_cast<std::size_t>(size(rng));
        SquareMatrix<FieldElem> M(n);
        for (std::size_t r = 0; r < n; ++r)
            for (std::size_t c = 0; c < n; ++c) M(r, c) = random_field_elem(rng);
        cases.push_back({"engines/rational-function", "sample=" + std::to_string(i), static_cast<long>(n), -1, [M] {
                             return Comparison{det_exact(M, DetEngine::Gauss), det_exact(M, DetEngine::Bareiss)};
                         }});
    }
    // A singular one for each domain.
    cases.push_back({"engines/singular", "", 3, -1, [] {
                         const auto M = SquareMatrix<FieldElem>::generate(
                             3, [](std::size_t i, std::size_t j) { return q_power(static_cast<long>(i + j)); });
                         return Comparison{det_exact(M, DetEngine::Gauss), det_exact(M, DetEngine::Bareiss)};
                     }});
}

using SuiteBuilder = void (*)(const SuiteSpec&, std::vector<Case>&);

inline const std::vector<std::pair<std::string, SuiteBuilder>>& suite_table() {
    static const std::vector<std::pair<std::string, SuiteBuilder>> t{
        {"catalan-basics", catalan_basics}, {"tables", tables},       {"thm1", thm1},
        {"thm2-grid", thm2_grid},           {"cor2-grid", cor2_grid}, {"registry", registry},
        {"eq36-as-printed", eq36},          {"identities", identities}, {"roundtrip", roundtrip},
        {"q-bridges", q_bridges},           {"engines", engines}};
    return t;
}

inline CaseRecord evaluate(const Case& c, bool timings) {
    CaseRecord r{c.check, c.params, c.n, c.m, "", "", CaseStatus::Error, "", 0};
    const auto t0 = std::chrono::steady_clock::now();
    bool holds = false;
    bool errored = false;
    try {
        const Comparison cmp = c.run();
        r.expected = render(cmp.expected);
        r.actual = render(cmp.actual);
        holds = cmp.expected == cmp.actual;
    } catch (const std::exception& e) {
        errored = true;
        r.message = e.what();
    }
    if (timings) r.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    if (c.expect_failure) {
        r.status = holds ? CaseStatus::Anomaly : CaseStatus::ExpectedFailure;
        r.message = r.message.empty() ? c.note : c.note + " (" + r.message + ")";
        if (holds) r.message = "expected failure holds: " + c.note;
    } else if (errored) {
        r.status = CaseStatus::Error;
    } else {
        r.status = holds ? CaseStatus::Pass : CaseStatus::Fail;
    }
    return r;
}

inline std::size_t thread_budget() {
    const char* v = std::getenv("HANKELKIT_THREADS");
    if (!v) return 0;
    char* end = nullptr;
    const unsigned long n = std::strtoul(v, &end, 10);
    return (end && *end == '\0') ? static_cast<std::size_t>(n) : 0;
}

}  // namespace detail

inline std::vector<std::string> suite_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, _] : detail::suite_table()) ids.push_back(id);
    ids.push_back("all");
    return ids;
}

/// Spec with the default sample set: the five q-power pairs, two screened
/// rational pairs, the three classical triples and x in {2, 3, 5/2}.
inline SuiteSpec default_suite_spec(const std::string& id, std::uint64_t seed = 0) {
    SuiteSpec s;
    s.id = id;
    s.seed = seed;
    s.params = sample_parameters(SampleKind::QPowerPairs, 5, 0, s.n_max, s.m_max);
    for (auto& p : sample_parameters(SampleKind::RationalPairs, 2, seed == 0 ? 1 : seed, s.n_max, s.m_max))
        s.params.push_back(std::move(p));
    s.triples = {{Rational(4), Rational(1), Rational(2)},
                 {Rational(3), Rational(1), Rational(1)},
                 {Rational(5), Rational(2), Rational(3)}};
    s.xs = {Rational(2), Rational(3), make_rational(5, 2)};
    return s;
}

inline std::vector<Case> expand_suite(const SuiteSpec& spec) {
    if (spec.n_max < 1) throw UsageError("suite n_max must be >= 1");
    if (spec.m_max < 0) throw UsageError("suite m_max must be >= 0");
    std::vector<Case> cases;
    bool found = false;
    for (const auto& [id, build] : detail::suite_table()) {
        if (spec.id == "all" || spec.id == id) {
            found = true;
            std::vector<Case> part;
            build(spec, part);
            for (auto& c : part) {
                if (spec.id == "all") c.check = id + ":" + c.check;
                cases.push_back(std::move(c));
            }
        }
    }
    if (!found) throw UsageError("unknown suite '" + spec.id + "'");
    return cases;
}

inline SuiteReport run_suite(const SuiteSpec& spec) {
    const auto cases = expand_suite(spec);
    SuiteReport rep;
    rep.suite = spec.id;
    rep.seed = spec.seed;
    rep.engine = detail::engine_name(spec.engine);
    rep.timings = spec.timings;
    rep.records.resize(cases.size());

    const std::size_t threads = std::min(detail::thread_budget(), cases.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < cases.size(); ++i) rep.records[i] = detail::evaluate(cases[i], spec.timings);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::thread> pool;
        for (std::size_t t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = next++; i < cases.size(); i = next++)
                    rep.records[i] = detail::evaluate(cases[i], spec.timings);
            });
        for (auto& th : pool) th.join();
    }

    for (const auto& r : rep.records) {
        ++rep.summary.total;
        switch (r.status) {
            case CaseStatus::Pass: ++rep.summary.passed; break;
            case CaseStatus::Fail: ++rep.summary.failed; break;
            case CaseStatus::ExpectedFailure: ++rep.summary.expected_failures; break;
            case CaseStatus::Anomaly: ++rep.summary.anomalies; break;
            case CaseStatus::Error: ++rep.summary.errors; break;
        }
    }
    return rep;
}

// ---------------------------------------------------------------------------
// Report output

inline nlohmann::ordered_json to_json(const SuiteReport& rep) {
    nlohmann::ordered_json j;
    j["suite"] = rep.suite;
    j["seed"] = rep.seed;
    j["engine"] = rep.engine;
    j["summary"] = {{"total", rep.summary.total},
                    {"passed", rep.summary.passed},
                    {"failed", rep.summary.failed},
                    {"expected_failures", rep.summary.expected_failures},
                    {"anomalies", rep.summary.anomalies},
                    {"errors", rep.summary.errors}};
    auto records = nlohmann::ordered_json::array();
    auto xfails = nlohmann::ordered_json::array();
    for (std::size_t i = 0; i < rep.records.size(); ++i) {
        const auto& r = rep.records[i];
        nlohmann::ordered_json o{{"check", r.check}, {"params", r.params}};
        o["n"] = r.n >= 0 ? nlohmann::ordered_json(r.n) : nlohmann::ordered_json(nullptr);
        o["m"] = r.m >= 0 ? nlohmann::ordered_json(r.m) : nlohmann::ordered_json(nullptr);
        o["expected"] = r.expected;
        o["actual"] = r.actual;
        o["holds"] = r.status == CaseStatus::Pass || r.status == CaseStatus::Anomaly;
        o["status"] = to_string(r.status);
        o["message"] = r.message;
        if (rep.timings) o["wall_ms"] = r.wall_ms;
        if (r.status == CaseStatus::ExpectedFailure) xfails.push_back(i);
        records.push_back(std::move(o));
    }
    j["expected_failures"] = std::move(xfails);
    j["records"] = std::move(records);
    return j;
}

namespace detail {

inline std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + "\"";
}

inline std::string opt_index(long v) { return v >= 0 ? std::to_string(v) : ""; }

}  // namespace detail

inline std::string to_csv(const SuiteReport& rep) {
    std::ostringstream os;
    os << "check,params,n,m,expected,actual,status,message";
    if (rep.timings) os << ",wall_ms";
    os << '\n';
    for (const auto& r : rep.records) {
        os << detail::csv_cell(r.check) << ',' << detail::csv_cell(r.params) << ',' << detail::opt_index(r.n) << ','
           << detail::opt_index(r.m) << ',' << detail::csv_cell(r.expected) << ',' << detail::csv_cell(r.actual) << ','
           << to_string(r.status) << ',' << detail::csv_cell(r.message);
        if (rep.timings) os << ',' << r.wall_ms;
        os << '\n';
    }
    return os.str();
}

inline std::string to_pretty(const SuiteReport& rep) {
    std::ostringstream os;
    os << "suite " << rep.suite << " (engine " << rep.engine << ", seed " << rep.seed << ")\n";
    for (const auto& r : rep.records) {
        if (r.status == CaseStatus::Pass) continue;
        os << "  [" << to_string(r.status) << "] " << r.check;
        if (!r.params.empty()) os << " " << r.params;
        if (r.n >= 0) os << " n=" << r.n;
        if (r.m >= 0) os << " m=" << r.m;
        if (!r.expected.empty() || !r.actual.empty()) os << ": expected " << r.expected << ", got " << r.actual;
        if (!r.message.empty()) os << " -- " << r.message;
        os << '\n';
    }
    const auto& s = rep.summary;
    os << s.total << " cases: " << s.passed << " passed, " << s.failed << " failed, " << s.expected_failures
       << " expected failures, " << s.anomalies << " anomalies, " << s.errors << " errors\n";
    return os.str();
}

}  // namespace hankelkit
