#include <random>

#include <gtest/gtest.h>

#include "hankelkit/hankel.hpp"

using namespace hankelkit;

namespace {

const FieldElem one(1);
const FieldElem q = FieldElem::q();

SquareMatrix<FieldElem> mat(std::size_t n, std::initializer_list<long> v) {
    std::vector<FieldElem> e;
    for (long x : v) e.emplace_back(x);
    return SquareMatrix<FieldElem>(n, std::move(e));
}

std::vector<std::pair<const char*, MomentSeq>> factor_sequences() {
    return {{"catalan", MomentSeq::catalan()},
            {"central-binomial", MomentSeq::central_binomial()},
            {"c(q^4,q,q^2)", MomentSeq::cseq(q_power(4), q, QBase::q_to(2))},
            {"c(q^2,q,q^2)", MomentSeq::cseq(q_power(2), q, QBase::q_to(2))}};
}

}  // namespace

TEST(Hankel, Matrices) {
    EXPECT_EQ(hankel_matrix(MomentSeq::catalan(), 2), mat(2, {1, 1, 1, 2}));
    EXPECT_EQ(hankel_matrix(MomentSeq::catalan(), 2, 2), mat(2, {2, 5, 5, 14}));
    EXPECT_EQ(hankel_matrix(MomentSeq::central_binomial(), 3), mat(3, {1, 2, 6, 2, 6, 20, 6, 20, 70}));
}

TEST(Hankel, Determinants) {
    for (DetEngine e : {DetEngine::Gauss, DetEngine::Bareiss}) {
        EXPECT_EQ(det_exact(mat(2, {1, 1, 1, 2}), e), one);
        EXPECT_EQ(det_exact(mat(2, {2, 5, 5, 14}), e), FieldElem(3));
        EXPECT_EQ(det_exact(SquareMatrix<FieldElem>::identity(5), e), one);
        EXPECT_EQ(det_exact(mat(2, {0, 1, 1, 0}), e), FieldElem(-1));
        EXPECT_EQ(det_exact(mat(2, {1, 2, 2, 4}), e), FieldElem(0));
    }
}

TEST(Hankel, CatalanDeterminantIsOne) {
    for (std::size_t n = 1; n <= 10; ++n)
        EXPECT_EQ(det_exact(hankel_matrix(MomentSeq::catalan(), n), DetEngine::Gauss), one) << n;
}

TEST(Hankel, EnginesAgree) {
    std::mt19937_64 rng(31);
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2), size(1, 6);
    for (int i = 0; i < 40; ++i) {
        const std::size_t n = static_cast<std::size_t>(size(rng));
        const auto R = SquareMatrix<Rational>::generate(n, [&](std::size_t, std::size_t) {
            return make_rational(coef(rng), std::abs(coef(rng)) + 1);
        });
        EXPECT_EQ(det_exact(R, DetEngine::Gauss), det_exact(R, DetEngine::Bareiss));
    }
    for (int i = 0; i < 25; ++i) {
        const std::size_t n = static_cast<std::size_t>(size(rng)) % 5 + 1;
        const auto M = SquareMatrix<FieldElem>::generate(n, [&](std::size_t, std::size_t) {
            std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& x : c) x = coef(rng);
            return FieldElem::from_poly(QPoly(std::move(c))) / (one + q * FieldElem(std::abs(coef(rng))));
        });
        EXPECT_EQ(det_exact(M, DetEngine::Gauss), det_exact(M, DetEngine::Bareiss));
    }
}

TEST(Hankel, LdltExamples) {
    const auto cat = ldlt(hankel_matrix(MomentSeq::catalan(), 3));
    EXPECT_EQ(cat.A, mat(3, {1, 0, 0, 1, 1, 0, 2, 3, 1}));
    EXPECT_EQ(cat.D, (std::vector<FieldElem>{1, 1, 1}));

    const auto id = ldlt(SquareMatrix<FieldElem>::identity(4));
    EXPECT_EQ(id.A, SquareMatrix<FieldElem>::identity(4));
    EXPECT_EQ(id.D, (std::vector<FieldElem>{1, 1, 1, 1}));

    EXPECT_EQ(ldlt(hankel_matrix(MomentSeq::central_binomial(), 3)).D, (std::vector<FieldElem>{1, 2, 2}));
}

TEST(Hankel, LdltSingularMinor) { EXPECT_THROW(ldlt(mat(3, {0, 1, 0, 1, 0, 0, 0, 0, 1})), SingularLeadingMinor); }

TEST(Hankel, LdltReassembles) {
    for (const auto& [name, seq] : factor_sequences())
        for (std::size_t n = 1; n <= 6; ++n) {
            const auto H = hankel_matrix(seq, n);
            const auto f = ldlt(H);
            auto D = SquareMatrix<FieldElem>(n);
            for (std::size_t i = 0; i < n; ++i) D(i, i) = f.D[i];
            EXPECT_EQ(f.A * D * f.A.transpose(), H) << name << " n=" << n;
        }
}

TEST(Hankel, JacobiCatalan) {
    const auto jp = jacobi_from_moments(MomentSeq::catalan(), 5);
    EXPECT_EQ(jp.length(), 4u);
    EXPECT_EQ(jp.s_values(4), (std::vector<FieldElem>{1, 2, 2, 2}));
    EXPECT_EQ(jp.t_values(4), (std::vector<FieldElem>{1, 1, 1, 1}));
}

TEST(Hankel, JacobiCentralBinomial) {
    const auto jp = jacobi_from_moments(MomentSeq::central_binomial(), 5);
    EXPECT_EQ(jp.s_values(4), (std::vector<FieldElem>{2, 2, 2, 2}));
    EXPECT_EQ(jp.t_values(4), (std::vector<FieldElem>{2, 1, 1, 1}));
}

TEST(Hankel, JacobiZeroTIsAllowed) {
    const auto jp = jacobi_from_moments(MomentSeq::explicit_values({one, FieldElem(0), FieldElem(0)}), 2);
    EXPECT_EQ(jp.t(0), FieldElem(0));
}

TEST(Hankel, JacobiNeedsNormalizedMoments) {
    EXPECT_THROW(jacobi_from_moments(MomentSeq::shifted(MomentSeq::catalan(), 2), 3), NotNormalized);
    EXPECT_THROW(jacobi_from_moments(MomentSeq::explicit_values({one, FieldElem(0), FieldElem(0), FieldElem(0), FieldElem(0)}), 3),
                 SingularLeadingMinor);
}

TEST(Hankel, Lemma) {
    const JacobiParams ones([](std::size_t) { return one; }, [](std::size_t) { return one; });
    for (std::size_t n = 1; n <= 7; ++n) EXPECT_EQ(det_via_lemma(ones, n), one);
    const JacobiParams cb([](std::size_t) { return FieldElem(2); }, [](std::size_t k) { return FieldElem(k ? 1 : 2); });
    EXPECT_EQ(det_via_lemma(cb, 3), FieldElem(4));
    EXPECT_EQ(det_via_lemma(cb, 1), one);
}

TEST(Hankel, LemmaMatchesDeterminant) {
    for (const auto& [name, seq] : factor_sequences())
        for (std::size_t n = 1; n <= 6; ++n)
            EXPECT_EQ(det_exact(hankel_matrix(seq, n)), det_via_lemma(jacobi_from_moments(seq, n), n))
                << name << " n=" << n;
}

TEST(Hankel, RoundTrip) {
    for (const auto& [name, seq] : factor_sequences())
        for (std::size_t d = 2; d <= 8; ++d) {
            const auto jp = jacobi_from_moments(seq, d);
            EXPECT_EQ(build_triangle(jp, d - 1).column0(), seq.terms_upto(d)) << name << " d=" << d;
            EXPECT_EQ(moments_from_jacobi(jp, 2 * d - 1), seq.terms_upto(2 * d - 1)) << name << " d=" << d;
        }
}

TEST(Hankel, AndrewsRoundTrip) {
    const auto seq = MomentSeq::andrews_q_catalan();
    const auto jp = jacobi_from_moments(seq, 3);
    EXPECT_EQ(moments_from_jacobi(jp, 5), seq.terms_upto(5));
}
