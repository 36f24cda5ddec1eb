#include <gtest/gtest.h>

#include "hankelkit/closed_forms.hpp"
#include "hankelkit/sequences.hpp"

using namespace hankelkit;

namespace {
const FieldElem one(1);
const FieldElem q = FieldElem::q();

std::vector<FieldElem> ints(std::initializer_list<long> v) {
    std::vector<FieldElem> r;
    for (long x : v) r.emplace_back(x);
    return r;
}
}  // namespace

TEST(Sequences, CatalanTerms) {
    EXPECT_EQ(MomentSeq::catalan().terms_upto(8), ints({1, 1, 2, 5, 14, 42, 132, 429}));
    EXPECT_EQ(MomentSeq::catalan().terms_upto(1), ints({1}));
}

TEST(Sequences, USeqTerm) {
    EXPECT_EQ(MomentSeq::useq(4, 1, 2).term(2), FieldElem(make_rational(1, 8)));
}

TEST(Sequences, CSeqTerm) {
    const auto s = MomentSeq::cseq(q_power(2), q, QBase::q_to(2));
    EXPECT_EQ(s.term(1), one / (one + q));
    EXPECT_EQ(s.term(0), one);
}

TEST(Sequences, ScaledAndShifted) {
    const auto cat = MomentSeq::catalan();
    const auto scaled = MomentSeq::scaled(cat, FieldElem(4));
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(scaled.term(n), pow_int(FieldElem(4), long(n)) * cat.term(n));
    EXPECT_EQ(MomentSeq::shifted(cat, 2).terms_upto(3), ints({2, 5, 14}));
    EXPECT_EQ(cat.terms_range(3, 2), ints({5, 14}));
}

TEST(Sequences, CentralBinomial) {
    EXPECT_EQ(MomentSeq::central_binomial().terms_upto(4), ints({1, 2, 6, 20}));
}

TEST(Sequences, ClassicalLimitOfQForm) {
    const auto qs = MomentSeq::cseq(q_power(4), q, QBase::q_to(2));
    const auto us = MomentSeq::useq(4, 1, 2);
    for (std::size_t n = 0; n <= 10; ++n) EXPECT_EQ(FieldElem(specialize(qs.term(n), 1)), us.term(n)) << n;
}

TEST(Sequences, CentralBinomialFromQForm) {
    const auto qs = MomentSeq::cseq(q_power(2), q, QBase::q_to(2));
    const auto cb = MomentSeq::central_binomial();
    for (std::size_t n = 0; n <= 8; ++n)
        EXPECT_EQ(FieldElem(pow_rational(Rational(4), long(n)) * specialize(qs.term(n), 1)), cb.term(n)) << n;
}

TEST(Sequences, AndrewsIsProductForm) {
    const auto a = MomentSeq::andrews_q_catalan();
    const auto c = MomentSeq::cseq(q_power(4), q, QBase::q_to(2));
    EXPECT_EQ(a.terms_upto(6), c.terms_upto(6));
}

TEST(Sequences, ExplicitBeyondEndThrows) {
    const auto e = MomentSeq::explicit_values(ints({1, 2}));
    EXPECT_EQ(e.term(1), FieldElem(2));
    EXPECT_THROW(e.term(2), UsageError);
}

TEST(Sequences, PoleInSequence) {
    // (a; q)_n with a = 1 vanishes from n = 1 on.
    const auto s = MomentSeq::cseq(one, q);
    EXPECT_EQ(s.term(0), one);
    EXPECT_THROW(s.term(1), PoleInSequence);
}

TEST(Sequences, Parse) {
    EXPECT_EQ(parse_sequence("catalan").terms_upto(4), ints({1, 1, 2, 5}));
    EXPECT_EQ(parse_sequence("central-binomial").term(3), FieldElem(20));
    EXPECT_EQ(parse_sequence("c:q^2,q,q^2").term(1), one / (one + q));
    EXPECT_EQ(parse_sequence("u:4,1,2").term(2), FieldElem(make_rational(1, 8)));
    EXPECT_EQ(parse_sequence("explicit:1,1,2,5").terms_upto(4), ints({1, 1, 2, 5}));
    EXPECT_EQ(parse_sequence("shift:2:catalan").term(0), FieldElem(2));
    EXPECT_EQ(parse_sequence("scale:4:catalan").term(2), FieldElem(32));
    EXPECT_THROW(parse_sequence("fibonacci"), UsageError);
    EXPECT_THROW(parse_sequence("c:q,"), UsageError);
}
