#include <gtest/gtest.h>

#include "hankelkit/closed_forms.hpp"
#include "hankelkit/triangle.hpp"

using namespace hankelkit;

namespace {

const FieldElem one(1);
const FieldElem q = FieldElem::q();

std::vector<std::vector<FieldElem>> rows_of(std::initializer_list<std::initializer_list<long>> rows) {
    std::vector<std::vector<FieldElem>> out;
    for (const auto& r : rows) {
        out.emplace_back();
        for (long v : r) out.back().emplace_back(v);
    }
    return out;
}

JacobiParams catalan_jp() {
    return JacobiParams([](std::size_t k) { return FieldElem(k == 0 ? 1 : 2); }, [](std::size_t) { return FieldElem(1); });
}

JacobiParams central_jp() {
    return JacobiParams([](std::size_t) { return FieldElem(2); }, [](std::size_t k) { return FieldElem(k == 0 ? 2 : 1); });
}

}  // namespace

TEST(Triangle, CatalanRows) {
    EXPECT_EQ(build_triangle(catalan_jp(), 4).rows(),
              rows_of({{1}, {1, 1}, {2, 3, 1}, {5, 9, 5, 1}, {14, 28, 20, 7, 1}}));
}

TEST(Triangle, CentralBinomialRows) {
    EXPECT_EQ(build_triangle(central_jp(), 4).rows(),
              rows_of({{1}, {2, 1}, {6, 4, 1}, {20, 15, 6, 1}, {70, 56, 28, 8, 1}}));
}

TEST(Triangle, ShiftOnly) {
    const JacobiParams zero([](std::size_t) { return FieldElem(0); }, [](std::size_t) { return FieldElem(0); });
    const Triangle tri = build_triangle(zero, 5);
    for (std::size_t n = 0; n <= 5; ++n)
        for (long k = 0; k <= long(n); ++k) EXPECT_EQ(tri.at(n, k), FieldElem(k == long(n) ? 1 : 0));
}

TEST(Triangle, BallotRows) {
    EXPECT_EQ(build_zero_s_triangle(TSeq::constant(one), 7).rows(),
              rows_of({{1},
                       {0, 1},
                       {1, 0, 1},
                       {0, 2, 0, 1},
                       {2, 0, 3, 0, 1},
                       {0, 5, 0, 4, 0, 1},
                       {5, 0, 9, 0, 5, 0, 1},
                       {0, 14, 0, 14, 0, 6, 0, 1}}));
}

TEST(Triangle, ZeroSWithClosedFormT) {
    const ThmParams p{q_power(2), q, QBase::q_to(2)};
    const Triangle A = build_zero_s_triangle(thm1_T_seq(p), 10);
    for (long n = 0; n <= 5; ++n) EXPECT_EQ(A.at(2 * n, 0), c_moment(n, p.a, p.b, p.Q)) << n;
}

TEST(Triangle, OutOfRangeIsZero) {
    const Triangle tri = build_triangle(catalan_jp(), 3);
    EXPECT_EQ(tri.at(2, -1), FieldElem(0));
    EXPECT_EQ(tri.at(2, 3), FieldElem(0));
    EXPECT_EQ(tri.column0(), (std::vector<FieldElem>{1, 1, 2, 5}));
}

TEST(Triangle, Contract) {
    const JacobiParams c = contract(TSeq::constant(one));
    EXPECT_EQ(c.s(0), one);
    for (std::size_t k = 1; k < 6; ++k) EXPECT_EQ(c.s(k), FieldElem(2));
    for (std::size_t k = 0; k < 6; ++k) EXPECT_EQ(c.t(k), one);

    const JacobiParams quarter = contract(TSeq::constant(FieldElem(make_rational(1, 4))));
    EXPECT_EQ(quarter.s(0), FieldElem(make_rational(1, 4)));
    EXPECT_EQ(quarter.s(3), FieldElem(make_rational(1, 2)));
    EXPECT_EQ(quarter.t(0), FieldElem(make_rational(1, 16)));
    EXPECT_EQ(quarter.t(4), FieldElem(make_rational(1, 16)));
}

TEST(Triangle, ContractClosedFormClassicalLimit) {
    const JacobiParams c = contract(thm1_T_seq(ThmParams{q_power(2), q, QBase::q_to(2)}));
    for (std::size_t k = 0; k < 5; ++k) EXPECT_EQ(specialize(c.s(k), 1), make_rational(1, 2)) << k;
    EXPECT_EQ(specialize(c.t(0), 1), make_rational(1, 8));
    for (std::size_t k = 1; k < 5; ++k) EXPECT_EQ(specialize(c.t(k), 1), make_rational(1, 16)) << k;
}

TEST(Triangle, Rescale) {
    const JacobiParams base = JacobiParams::from_tables(
        {FieldElem(make_rational(1, 2)), FieldElem(make_rational(1, 2)), FieldElem(make_rational(1, 2))},
        {FieldElem(make_rational(1, 8)), FieldElem(make_rational(1, 16)), FieldElem(make_rational(1, 16))});
    const JacobiParams r = rescale(base, FieldElem(4));
    EXPECT_EQ(r.s_values(3), (std::vector<FieldElem>{2, 2, 2}));
    EXPECT_EQ(r.t_values(3), (std::vector<FieldElem>{2, 1, 1}));
    EXPECT_EQ(rescale(base, one).s_values(3), base.s_values(3));
    EXPECT_EQ(rescale(base, FieldElem(0)).t_values(3), (std::vector<FieldElem>{0, 0, 0}));
}

TEST(Triangle, RescaleMomentLaw) {
    const JacobiParams jp([](std::size_t k) { return q_int(long(k) + 1); },
                          [](std::size_t k) { return q_power(long(k)) + one; });
    const FieldElem x = (one + q) / FieldElem(3);
    const auto base = build_triangle(jp, 6).column0();
    const auto scaled = build_triangle(rescale(jp, x), 6).column0();
    for (std::size_t n = 0; n < base.size(); ++n) EXPECT_EQ(scaled[n], pow_int(x, long(n)) * base[n]);
}

TEST(Triangle, CrossSum) {
    const Triangle cat = build_triangle(catalan_jp(), 8);
    for (std::size_t m = 0; m <= 4; ++m) EXPECT_EQ(cross_sum(cat, catalan_jp(), 0, m), cat.at(m, 0));
    EXPECT_EQ(cross_sum(cat, catalan_jp(), 2, 2), FieldElem(14));
    const Triangle cb = build_triangle(central_jp(), 8);
    EXPECT_EQ(cross_sum(cb, central_jp(), 1, 2), FieldElem(20));
}

TEST(Triangle, FactorizationConsistency) {
    const JacobiParams jp([](std::size_t k) { return q_power(long(k)) - FieldElem(2); },
                          [](std::size_t k) { return q_int(long(k) + 2); });
    const Triangle tri = build_triangle(jp, 8);
    for (std::size_t i = 0; i <= 8; ++i)
        for (std::size_t j = 0; i + j <= 8; ++j) EXPECT_EQ(cross_sum(tri, jp, i, j), tri.at(i + j, 0));
}

TEST(Triangle, ContractionConsistency) {
    const TSeq T([](std::size_t k) { return (one + q_power(long(k))) / q_int(long(k) + 2); });
    for (std::size_t n = 0; n <= 8; ++n) {
        const Triangle a = build_triangle(contract(T), n);
        const Triangle A = build_zero_s_triangle(T, 2 * n);
        for (long k = 0; k <= long(n); ++k) EXPECT_EQ(a.at(n, k), A.at(2 * n, 2 * k));
    }
}

TEST(Triangle, CatalanClosedForms) {
    const Triangle A = build_zero_s_triangle(TSeq::constant(one), 16);
    const Triangle cb = build_triangle(central_jp(), 8);
    for (long n = 0; n <= 8; ++n)
        for (long k = 0; k <= n; ++k) {
            const Integer b1 = binomial(2 * n, n - k);
            const Integer b0 = k + 1 <= n ? binomial(2 * n, n - k - 1) : Integer(0);
            EXPECT_EQ(A.at(2 * n, 2 * k), FieldElem(Rational(b1 - b0)));
            EXPECT_EQ(cb.at(n, k), FieldElem(Rational(b1)));
        }
}

TEST(Triangle, TableLengthIsEnforced) {
    const JacobiParams short_jp = JacobiParams::from_tables({one}, {one});
    EXPECT_NO_THROW(build_triangle(short_jp, 1));
    EXPECT_THROW(build_triangle(short_jp, 3), UsageError);
}
