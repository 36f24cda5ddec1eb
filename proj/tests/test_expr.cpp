#include <random>

#include <gtest/gtest.h>

#include "hankelkit/expr.hpp"

using namespace hankelkit;

TEST(Expr, Monomial) { EXPECT_EQ(parse_field_expr("q^2"), FieldElem::monomial(1, 2)); }

TEST(Expr, Ratio) {
    const FieldElem one(1), q = FieldElem::q();
    EXPECT_EQ(parse_field_expr("(1-q)/(1+q)"), (one - q) / (one + q));
}

TEST(Expr, RationalCoefficient) {
    EXPECT_EQ(parse_field_expr("3/4 * q + 1"), FieldElem::from_poly(QPoly{1, make_rational(3, 4)}));
}

TEST(Expr, NegativeExponentAndUnaryMinus) {
    EXPECT_EQ(parse_field_expr("q^-2"), pow_int(FieldElem::q(), -2));
    EXPECT_EQ(parse_field_expr("-q + 2"), FieldElem(2) - FieldElem::q());
    EXPECT_EQ(parse_field_expr(" ( 1 + q ) ^ 2 "), parse_field_expr("1 + 2*q + q^2"));
}

TEST(Expr, Errors) {
    EXPECT_THROW(parse_field_expr("q +"), ParseError);
    EXPECT_THROW(parse_field_expr("(1 + q"), ParseError);
    EXPECT_THROW(parse_field_expr("x"), ParseError);
    EXPECT_THROW(parse_field_expr("1/0"), ParseError);
    EXPECT_THROW(parse_field_expr(""), ParseError);
    try {
        parse_field_expr("1 + $");
        FAIL();
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 4u);
    }
}

TEST(Expr, Render) {
    EXPECT_EQ(render(FieldElem::from_poly(QPoly{1, make_rational(-3, 4), 1})), "q^2 - 3/4*q + 1");
    EXPECT_EQ(render(FieldElem(0)), "0");
    const FieldElem x = parse_field_expr("(1-q^3)/(1-q^2)");
    EXPECT_EQ(render(x), "(q^2 + q + 1) / (q + 1)");
}

TEST(Expr, RenderParseRoundTrip) {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> coef(-4, 4), deg(0, 3), den(1, 3);
    for (int i = 0; i < 200; ++i) {
        auto poly = [&] {
            std::vector<Rational> c(static_cast<std::size_t>(deg(rng)) + 1);
            for (auto& v : c) v = make_rational(coef(rng), den(rng));
            return QPoly(std::move(c));
        };
        QPoly d;
        do d = poly();
        while (d.is_zero());
        const FieldElem x = FieldElem::from_polys(poly(), d);
        EXPECT_EQ(parse_field_expr(render(x)), x) << render(x);
    }
}
