#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "hankelkit/cli.hpp"

using namespace hankelkit;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST(Cli, TriangleFromCatalan) {
    const auto r = run({"triangle", "--seq", "catalan", "--rows", "5"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1\n1 1\n2 3 1\n5 9 5 1\n14 28 20 7 1\n");
}

TEST(Cli, TriangleFromCentralBinomial) {
    const auto r = run({"triangle", "--seq", "central-binomial", "--rows", "5"});
    EXPECT_EQ(r.out, "1\n2 1\n6 4 1\n20 15 6 1\n70 56 28 8 1\n");
}

TEST(Cli, ZeroSTriangle) {
    const auto r = run({"triangle", "--T", "1", "--rows", "8", "--zero-s"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out,
              "1\n0 1\n1 0 1\n0 2 0 1\n2 0 3 0 1\n0 5 0 4 0 1\n5 0 9 0 5 0 1\n0 14 0 14 0 6 0 1\n");
}

TEST(Cli, TriangleContraction) {
    EXPECT_EQ(run({"triangle", "--T", "1", "--rows", "3"}).out, "1\n1 1\n2 3 1\n");
    EXPECT_EQ(run({"triangle", "--s", "2", "--t", "2,1,1", "--rows", "3"}).out, "1\n2 1\n6 4 1\n");
}

TEST(Cli, Det) {
    EXPECT_EQ(run({"det", "--seq", "catalan", "--n", "6"}).out, "1\n");
    EXPECT_EQ(run({"det", "--seq", "catalan", "--n", "2", "--m", "2"}).out, "3\n");
    const auto r = run({"det", "--seq", "c:q^2,q,q^2", "--n", "2"});
    EXPECT_EQ(r.code, 0);
    const FieldElem one(1), q = FieldElem::q();
    EXPECT_EQ(parse_field_expr(r.out.substr(0, r.out.size() - 1)),
              q / (pow_int(one + q, 2) * (one + q_power(2))));
}

TEST(Cli, DetCrossCheck) {
    for (const char* via : {"oracle", "lemma"}) {
        const auto r = run({"det", "--seq", "c:q^4,q,q^2", "--n", "3", "--m", "1", "--via", via, "--cross-check"});
        EXPECT_EQ(r.code, 0) << via;
        EXPECT_NE(r.out.find("matches: yes"), std::string::npos) << via;
    }
}

TEST(Cli, DetJson) {
    const auto r = run({"det", "--seq", "u:4,1,2", "--n", "2", "--cross-check", "--format", "json"});
    ASSERT_EQ(r.code, 0);
    const auto j = nlohmann::json::parse(r.out);
    EXPECT_EQ(j["command"], "det");
    EXPECT_TRUE(j.contains("params"));
    EXPECT_EQ(j["result"]["num_coeffs"], nlohmann::json::array({"1/16"}));
    EXPECT_EQ(j["result"]["den_coeffs"], nlohmann::json::array({"1"}));
    EXPECT_EQ(j["cross_check"]["matches"], true);
    EXPECT_TRUE(j["cross_check"].contains("oracle"));
}

TEST(Cli, ClosedForm) {
    EXPECT_EQ(run({"closed-form", "CatalanShift", "--n", "2", "--m", "2"}).out, "3\n");
    EXPECT_EQ(run({"closed-form", "Carlitz", "--n", "2", "--m", "1"}).out, "-q\n");
    const auto r = run({"closed-form", "QHilbert", "--n", "2", "--m", "0", "--cross-check"});
    EXPECT_EQ(r.code, 0);
    const FieldElem one(1), q = FieldElem::q();
    EXPECT_EQ(parse_field_expr(r.out.substr(0, r.out.find('\n'))), q / (pow_int(one + q, 2) * q_int(3)));
    EXPECT_EQ(run({"closed-form", "BracketFalling", "--n", "2", "--x", "5/2"}).out, "-5/2\n");
}

TEST(Cli, ClosedFormMismatchIsVerificationFailure) {
    const auto r = run({"closed-form", "RecipBracket", "--n", "1", "--m", "1", "--cross-check"});
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.out.find("matches: no"), std::string::npos);
}

TEST(Cli, Jacobi) {
    EXPECT_EQ(run({"jacobi", "--seq", "catalan", "--depth", "5"}).out, "s = 1, 2, 2, 2\nt = 1, 1, 1, 1\n");
    EXPECT_EQ(run({"jacobi", "--seq", "central-binomial", "--depth", "5"}).out, "s = 2, 2, 2, 2\nt = 2, 1, 1, 1\n");
    EXPECT_EQ(run({"jacobi", "--seq", "explicit:1,1,2,5,14,42,132,429", "--depth", "4"}).out,
              run({"jacobi", "--seq", "catalan", "--depth", "4"}).out);
}

TEST(Cli, Verify) {
    EXPECT_EQ(run({"verify", "catalan-basics"}).code, 0);
    const auto r = run({"verify", "eq36-as-printed"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[expected-failure]"), std::string::npos);
}

TEST(Cli, VerifyWritesFile) {
    const auto path = std::filesystem::temp_directory_path() / "hankelkit_test_report.json";
    std::filesystem::remove(path);
    const auto r = run({"verify", "thm2-grid", "--n-max", "3", "--m-max", "1", "--format", "json", "--out",
                        path.string()});
    EXPECT_EQ(r.code, 0);
    EXPECT_TRUE(r.out.empty());
    std::ifstream f(path);
    const auto j = nlohmann::json::parse(f);
    EXPECT_EQ(j["suite"], "thm2-grid");
    EXPECT_EQ(j["summary"]["failed"], 0);
    std::filesystem::remove(path);
}

TEST(Cli, PrettyOutputReparses) {
    const auto r = run({"triangle", "--seq", "c:q^4,q,q^2", "--rows", "4"});
    ASSERT_EQ(r.code, 0);
    std::istringstream lines(r.out);
    std::string line;
    while (std::getline(lines, line)) {
        // Entries are separated by single spaces outside parentheses; rebuild them by depth.
        std::string cur;
        int depth = 0;
        std::vector<std::string> cells;
        for (std::size_t i = 0; i < line.size(); ++i) {
            const char c = line[i];
            if (c == '(') ++depth;
            if (c == ')') --depth;
            const bool boundary = c == ' ' && depth == 0 && i + 1 < line.size() && line[i + 1] != '/' &&
                                  !cur.empty() && cur.back() != '/' && line[i + 1] != '+' && line[i + 1] != '-' &&
                                  cur.back() != '+' && cur.back() != '-';
            if (boundary) {
                cells.push_back(cur);
                cur.clear();
            } else {
                cur += c;
            }
        }
        cells.push_back(cur);
        for (const auto& cell : cells) EXPECT_NO_THROW(parse_field_expr(cell)) << cell;
    }
}

TEST(Cli, ExitCodes) {
    EXPECT_EQ(run({}).code, 2);
    EXPECT_EQ(run({"bogus"}).code, 2);
    EXPECT_EQ(run({"det", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"det", "--seq", "nonsense", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"det", "--seq", "c:q^2 +,q,q", "--n", "2"}).code, 2);
    EXPECT_EQ(run({"verify", "no-such-suite"}).code, 2);
    EXPECT_EQ(run({"det", "--seq", "c:1,q,q", "--n", "2"}).code, 3);
    EXPECT_EQ(run({"jacobi", "--seq", "explicit:1,0,0,0,0", "--depth", "3"}).code, 3);
}
