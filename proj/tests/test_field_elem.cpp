#include <random>

#include <gtest/gtest.h>

#include "hankelkit/expr.hpp"
#include "hankelkit/qcalc.hpp"

using namespace hankelkit;

namespace {

FieldElem random_elem(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> coef(-3, 3), deg(0, 2);
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

const FieldElem q = FieldElem::q();
const FieldElem one(1);

}  // namespace

TEST(FieldElem, TelescopingRatioReduces) {
    const FieldElem x = (one - q * q) / (one - q) + FieldElem(0);
    EXPECT_EQ(x, one + q);
    EXPECT_TRUE(x.denominator() == QPoly{1});
}

TEST(FieldElem, MultiplicativeIdentity) {
    const FieldElem x = (one + q) / (FieldElem(3) - q * q);
    EXPECT_EQ(x * one, x);
}

TEST(FieldElem, QuotientOfQIntegers) {
    const FieldElem a = (one - pow_int(q, 3)) / (one - q);
    const FieldElem b = (one - pow_int(q, 2)) / (one - q);
    const FieldElem expected = FieldElem::from_polys(QPoly{1, 1, 1}, QPoly{1, 1});
    EXPECT_EQ(a / b, expected);
    // Independent check: (1 + q + q^2) = (a / b) (1 + q).
    EXPECT_EQ((a / b) * (one + q), FieldElem::from_poly(QPoly{1, 1, 1}));
}

TEST(FieldElem, DivisionByZeroThrows) { EXPECT_THROW(q / FieldElem(0), DivisionByZero); }

TEST(FieldElem, PowInt) {
    EXPECT_EQ(pow_int(q, 3), FieldElem::monomial(1, 3));
    EXPECT_EQ(pow_int(one + q, 0), one);
    EXPECT_EQ(pow_int(one / (one + q), -2), (one + q) * (one + q));
    EXPECT_THROW(pow_int(FieldElem(0), -1), DivisionByZero);
}

TEST(FieldElem, Specialize) {
    EXPECT_EQ(specialize(q_int(3), 1), 3);
    EXPECT_EQ(specialize(one + q, 1), 2);
    const FieldElem c1 = (one - q) / (one - pow_int(q, 4));
    EXPECT_EQ(specialize(c1, 1), make_rational(1, 4));
    EXPECT_THROW(specialize(one / (one - q), 1), PoleAtPoint);
}

TEST(FieldElem, CanonicalDenominator) {
    const FieldElem x = FieldElem::from_polys(QPoly{2, 2}, QPoly{make_rational(-3, 2), make_rational(-1, 2)});
    const QPoly d = x.denominator();
    EXPECT_GT(d.leading(), 0);
    for (const auto& c : d.coeffs()) EXPECT_EQ(c.get_den(), 1);
    EXPECT_EQ(content(x.primitive_denominator()), 1);
}

TEST(FieldElem, FieldAxioms) {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 150; ++i) {
        const FieldElem x = random_elem(rng), y = random_elem(rng), z = random_elem(rng);
        EXPECT_EQ((x + y) + z, x + (y + z));
        EXPECT_EQ(x * (y + z), x * y + x * z);
        EXPECT_EQ(x * y, y * x);
        EXPECT_EQ(x - x, FieldElem(0));
        if (!x.is_zero()) EXPECT_EQ(x * x.inverse(), one);
    }
}

TEST(FieldElem, CanonicalFormIsIdempotent) {
    std::mt19937_64 rng(99);
    for (int i = 0; i < 100; ++i) {
        const FieldElem x = random_elem(rng);
        const FieldElem again = FieldElem::from_polys(x.numerator(), x.denominator());
        EXPECT_EQ(again, x);
        EXPECT_EQ(again.numerator(), x.numerator());
        EXPECT_EQ(again.denominator(), x.denominator());
    }
}

TEST(FieldElem, SpecializeIsMultiplicative) {
    std::mt19937_64 rng(5);
    const Rational points[] = {Rational(2), make_rational(-1, 3), Rational(5)};
    for (int i = 0; i < 100; ++i) {
        const FieldElem x = random_elem(rng), y = random_elem(rng);
        for (const auto& p : points) {
            try {
                const Rational sx = specialize(x, p), sy = specialize(y, p);
                EXPECT_EQ(specialize(x * y, p), sx * sy);
                EXPECT_EQ(specialize(x + y, p), sx + sy);
            } catch (const PoleAtPoint&) {
            }
        }
    }
}
