#include <cstdlib>

#include <gtest/gtest.h>

#include "hankelkit/verify.hpp"

using namespace hankelkit;

namespace {

const FieldElem q = FieldElem::q();

SuiteSpec small_spec(const std::string& id) {
    SuiteSpec s = default_suite_spec(id);
    s.n_max = 3;
    s.m_max = 1;
    return s;
}

Case constant_case(FieldElem expected, FieldElem actual, bool expect_failure = false) {
    Case c;
    c.check = "unit";
    c.run = [=] { return Comparison{expected, actual}; };
    c.expect_failure = expect_failure;
    c.note = "note";
    return c;
}

}  // namespace

TEST(Verify, FirstQPowerSample) {
    const auto s = sample_parameters(SampleKind::QPowerPairs, 1, 0);
    ASSERT_EQ(s.size(), 1u);
    EXPECT_EQ(s[0].a, q_power(4));
    EXPECT_EQ(s[0].b, q);
    EXPECT_EQ(s[0].Q.base, q_power(2));
}

TEST(Verify, RationalSamplesDistinct) {
    const auto s = sample_parameters(SampleKind::RationalPairs, 3, 1);
    ASSERT_EQ(s.size(), 3u);
    for (std::size_t i = 0; i < s.size(); ++i) {
        EXPECT_TRUE(s[i].a.is_constant() && s[i].b.is_constant());
        for (std::size_t j = 0; j < i; ++j) EXPECT_FALSE(s[i].a == s[j].a && s[i].b == s[j].b);
    }
    EXPECT_EQ(sample_parameters(SampleKind::RationalPairs, 3, 1)[2].a, s[2].a);
}

TEST(Verify, Screening) {
    EXPECT_FALSE(detail::pole_free(ThmParams{FieldElem(1), q, QBase{}}, 3, 2));
    EXPECT_FALSE(detail::pole_free(ThmParams{q, q, QBase{}}, 3, 2));
    EXPECT_TRUE(detail::pole_free(ThmParams{q_power(4), q, QBase::q_to(2)}, 3, 2));
    for (const auto& p : sample_parameters(SampleKind::RationalPairs, 10, 77)) EXPECT_FALSE(p.a.is_one());
}

TEST(Verify, TooManySamplesRequested) {
    EXPECT_THROW(sample_parameters(SampleKind::QPowerPairs, 100000, 0), InsufficientSamples);
    EXPECT_THROW(sample_parameters(SampleKind::QPowerPairs, 0, 0), UsageError);
}

TEST(Verify, CaseStatuses) {
    EXPECT_EQ(detail::evaluate(constant_case(1, 1), false).status, CaseStatus::Pass);
    EXPECT_EQ(detail::evaluate(constant_case(1, 2), false).status, CaseStatus::Fail);
    EXPECT_EQ(detail::evaluate(constant_case(1, 2, true), false).status, CaseStatus::ExpectedFailure);
    EXPECT_EQ(detail::evaluate(constant_case(1, 1, true), false).status, CaseStatus::Anomaly);

    Case boom;
    boom.check = "boom";
    boom.run = []() -> Comparison { throw DivisionByZero(); };
    const auto r = detail::evaluate(boom, false);
    EXPECT_EQ(r.status, CaseStatus::Error);
    EXPECT_FALSE(r.message.empty());
}

TEST(Verify, CatalanBasicsHolds) {
    const auto rep = run_suite(default_suite_spec("catalan-basics"));
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.summary.passed, rep.summary.total);
    EXPECT_GT(rep.summary.total, 0u);
}

TEST(Verify, Thm2GridSmall) {
    SuiteSpec s = default_suite_spec("thm2-grid");
    s.params = {ThmParams{q_power(2), q, QBase::q_to(2)}};
    s.n_max = 4;
    s.m_max = 2;
    const auto rep = run_suite(s);
    EXPECT_TRUE(rep.ok());
    EXPECT_EQ(rep.summary.expected_failures, 0u);
}

TEST(Verify, Eq36RecordsExpectedFailure) {
    const auto rep = run_suite(default_suite_spec("eq36-as-printed"));
    EXPECT_TRUE(rep.ok());
    bool seen = false;
    for (const auto* r : rep.expected_failures())
        if (r->n == 1 && r->m == 1) {
            seen = true;
            EXPECT_EQ(r->expected, "1");
            EXPECT_EQ(r->actual, "0");
        }
    EXPECT_TRUE(seen);
}

TEST(Verify, Deterministic) {
    const auto spec = small_spec("identities");
    const std::string a = to_json(run_suite(spec)).dump();
    const std::string b = to_json(run_suite(spec)).dump();
    EXPECT_EQ(a, b);
    ::setenv("HANKELKIT_THREADS", "4", 1);
    const std::string c = to_json(run_suite(spec)).dump();
    ::unsetenv("HANKELKIT_THREADS");
    EXPECT_EQ(a, c);
}

TEST(Verify, SeedChangesRandomSuites) {
    const auto a = detail::random_jacobi(5, 4, 1), b = detail::random_jacobi(5, 4, 99);
    bool differ = false;
    for (std::size_t i = 0; i < a.size(); ++i) differ |= a[i].s_values(4) != b[i].s_values(4);
    EXPECT_TRUE(differ);
    const auto again = detail::random_jacobi(5, 4, 1);
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_EQ(a[i].t_values(4), again[i].t_values(4));
}

TEST(Verify, JsonSchema) {
    const auto j = to_json(run_suite(small_spec("eq36-as-printed")));
    for (const char* key : {"suite", "seed", "engine", "summary", "expected_failures", "records"})
        EXPECT_TRUE(j.contains(key)) << key;
    ASSERT_FALSE(j["records"].empty());
    const auto& r = j["records"][0];
    for (const char* key : {"check", "params", "n", "m", "expected", "actual", "holds", "status", "message"})
        EXPECT_TRUE(r.contains(key)) << key;
    EXPECT_FALSE(r.contains("wall_ms"));
    EXPECT_FALSE(j["expected_failures"].empty());
}

TEST(Verify, CsvQuoting) {
    EXPECT_EQ(detail::csv_cell("plain"), "plain");
    EXPECT_EQ(detail::csv_cell("a,b"), "\"a,b\"");
    EXPECT_EQ(detail::csv_cell("say \"x\""), "\"say \"\"x\"\"\"");
    const std::string csv = to_csv(run_suite(small_spec("catalan-basics")));
    EXPECT_EQ(csv.rfind("check,params,n,m,expected,actual,status,message\n", 0), 0u);
}

TEST(Verify, UnknownSuite) {
    EXPECT_THROW(run_suite(default_suite_spec("nope")), UsageError);
    SuiteSpec s = default_suite_spec("tables");
    s.n_max = 0;
    EXPECT_THROW(expand_suite(s), UsageError);
}

TEST(Verify, AllSuitePrefixesChecks) {
    const auto ids = suite_ids();
    EXPECT_EQ(ids.back(), "all");
    const auto cases = expand_suite(small_spec("all"));
    std::size_t separate = 0;
    for (const auto& id : ids)
        if (id != "all") separate += expand_suite(small_spec(id)).size();
    EXPECT_EQ(cases.size(), separate);
    EXPECT_NE(cases.front().check.find(':'), std::string::npos);
}
