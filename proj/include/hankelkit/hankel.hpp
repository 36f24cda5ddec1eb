#pragma once

/**
 * @file hankel.hpp
 * @brief Hankel matrices, exact determinants, and the moment LDL^t factorization.
 *
 * Two independent determinant engines:
 *
 *   - Gauss:   elimination over the field with a division per step and
 *              canonical reduction of every entry (row swaps tracked in the sign).
 *   - Bareiss: fraction-free elimination. Each row is first multiplied by the
 *              least common denominator of its entries, the resulting integer
 *              (or Z[q]) matrix is eliminated with exact divisions by the previous
 *              pivot, and the row factors are divided back out at the end.
 *
 * ldlt() eliminates in natural order (no pivoting) so that for a moment matrix
 * H_n the unit lower factor is the recurrence triangle a(i, j) and the diagonal
 * is D_k = prod_{j<k} t(j).
 */

#include <vector>

#include "hankelkit/matrix.hpp"
#include "hankelkit/sequences.hpp"
#include "hankelkit/triangle.hpp"

namespace hankelkit {

enum class DetEngine { Gauss, Bareiss };

inline Integer divexact(const Integer& a, const Integer& b) {
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Determinant over a field by Gaussian elimination with row swaps.
template <class F>
F det_gauss(SquareMatrix<F> m) {
    const std::size_t n = m.size();
    F det(1);
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t p = k;
        while (p < n && m(p, k) == F(0)) ++p;
        if (p == n) return F(0);
        if (p != k) {
            m.swap_rows(p, k);
            det = -det;
        }
        const F pivot = m(k, k);
        det *= pivot;
        for (std::size_t i = k + 1; i < n; ++i) {
            if (m(i, k) == F(0)) continue;
            const F f = m(i, k) / pivot;
            for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
        }
    }
    return det;
}

/// Determinant over an integral domain by fraction-free (Bareiss) elimination.
/// R must provide divexact(R, R) for divisions known to be exact.
template <class R>
R det_bareiss(SquareMatrix<R> m) {
    const std::size_t n = m.size();
    if (n == 0) return R(1);
    R prev(1);
    bool negate = false;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m(k, k) == R(0)) {
            std::size_t p = k + 1;
            while (p < n && m(p, k) == R(0)) ++p;
            if (p == n) return R(0);
            m.swap_rows(p, k);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                R v = m(i, j) * m(k, k) - m(i, k) * m(k, j);
                m(i, j) = divexact(v, prev);
            }
            m(i, k) = R(0);
        }
        prev = m(k, k);
    }
    R d = m(n - 1, n - 1);
    return negate ? R(-d) : d;
}

inline Rational det_exact(const SquareMatrix<Rational>& M, DetEngine engine = DetEngine::Bareiss) {
    if (engine == DetEngine::Gauss) return det_gauss(M);
    const std::size_t n = M.size();
    SquareMatrix<Integer> Z(n);
    Integer scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        Integer l = 1;
        for (std::size_t j = 0; j < n; ++j) l = lcm(l, Integer(M(i, j).get_den()));
        for (std::size_t j = 0; j < n; ++j) Z(i, j) = M(i, j).get_num() * divexact(l, M(i, j).get_den());
        scale *= l;
    }
    return make_rational(det_bareiss(std::move(Z)), scale);
}

inline FieldElem det_exact(const SquareMatrix<FieldElem>& M, DetEngine engine = DetEngine::Bareiss) {
    if (engine == DetEngine::Gauss) return det_gauss(M);
    const std::size_t n = M.size();
    SquareMatrix<ZPoly> Z(n);
    ZPoly poly_scale = ZPoly::constant(1);
    Integer int_scale = 1;
    for (std::size_t i = 0; i < n; ++i) {
        ZPoly L = ZPoly::constant(1);
        Integer S = 1;
        for (std::size_t j = 0; j < n; ++j) {
            const FieldElem& e = M(i, j);
            if (e.is_zero()) continue;
            L = lcm(L, e.primitive_denominator());
            S = lcm(S, Integer(e.scale().get_den()));
        }
        for (std::size_t j = 0; j < n; ++j) {
            const FieldElem& e = M(i, j);
            if (e.is_zero()) continue;
            const Integer c = e.scale().get_num() * divexact(S, Integer(e.scale().get_den()));
            Z(i, j) = e.primitive_numerator() * divexact(L, e.primitive_denominator()) * c;
        }
        poly_scale *= L;
        int_scale *= S;
    }
    ZPoly d = det_bareiss(std::move(Z));
    if (d.is_zero()) return {};
    return FieldElem::from_zpolys(d, poly_scale) * FieldElem(make_rational(Integer(1), int_scale));
}

/// H[i][j] = c(i + j + m), i, j < n.
inline SquareMatrix<FieldElem> hankel_matrix(const MomentSeq& seq, std::size_t n, std::size_t m = 0) {
    if (n == 0) throw UsageError("hankel_matrix: n must be positive");
    const auto c = seq.terms_range(m, 2 * n - 1);
    return SquareMatrix<FieldElem>::generate(n, [&](std::size_t i, std::size_t j) { return c[i + j]; });
}

template <class F>
struct LdltFactors {
    SquareMatrix<F> A;  // unit lower triangular
    std::vector<F> D;
};

/// H = A diag(D) A^t without pivoting; SingularLeadingMinor(k) if pivot D[k] must be divided by and is 0.
template <class F>
LdltFactors<F> ldlt(const SquareMatrix<F>& H) {
    const std::size_t n = H.size();
    SquareMatrix<F> A(n);
    std::vector<F> D(n);
    for (std::size_t i = 0; i < n; ++i) A(i, i) = F(1);
    for (std::size_t j = 0; j < n; ++j) {
        F d = H(j, j);
        for (std::size_t k = 0; k < j; ++k) d -= A(j, k) * A(j, k) * D[k];
        D[j] = d;
        if (j + 1 == n) break;
        if (d == F(0)) throw SingularLeadingMinor(j + 1);
        for (std::size_t i = j + 1; i < n; ++i) {
            F v = H(i, j);
            for (std::size_t k = 0; k < j; ++k) v -= A(i, k) * A(j, k) * D[k];
            A(i, j) = v / d;
        }
    }
    return {std::move(A), std::move(D)};
}

/// Recovers (s, t) from the first 2*depth - 1 moments via ldlt(H_depth).
///
/// Returns s(0..depth-2), t(0..depth-2):  t(k) = D[k+1] / D[k],
/// s(k) = a(k+1, k) - a(k, k-1) with a(0, -1) = 0.
inline JacobiParams jacobi_from_moments(const MomentSeq& seq, std::size_t depth) {
    if (depth == 0) throw UsageError("jacobi_from_moments: depth must be positive");
    const auto c = seq.terms_upto(2 * depth - 1);
    if (!c[0].is_one()) throw NotNormalized();
    const auto H = SquareMatrix<FieldElem>::generate(depth, [&](std::size_t i, std::size_t j) { return c[i + j]; });
    const auto f = ldlt(H);
    std::vector<FieldElem> s, t;
    for (std::size_t k = 0; k + 1 < depth; ++k) {
        if (f.D[k].is_zero()) throw SingularLeadingMinor(k + 1);
        t.push_back(f.D[k + 1] / f.D[k]);
        FieldElem below = f.A(k + 1, k);
        if (k > 0) below -= f.A(k, k - 1);
        s.push_back(std::move(below));
    }
    return JacobiParams::from_tables(std::move(s), std::move(t));
}

/// prod_{i=1}^{n-1} prod_{k<i} t(k).
inline FieldElem det_via_lemma(const JacobiParams& jp, std::size_t n) {
    if (n == 0) throw UsageError("det_via_lemma: n must be positive");
    FieldElem result(1);
    FieldElem partial(1);
    for (std::size_t i = 1; i < n; ++i) {
        partial *= jp.t(i - 1);
        result *= partial;
    }
    return result;
}

}  // namespace hankelkit
