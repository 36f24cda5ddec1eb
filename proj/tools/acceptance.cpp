// Acceptance run: one PASS/FAIL line per criterion.
//
// Exit status counts failing criteria that are not listed in known_unattainable;
// those still print FAIL, with the reason.

#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "hankelkit/verify.hpp"

using namespace hankelkit;

namespace {

// Literal det(u(i+j; 4, 1, 2)) = 1/4^C(n,2): the determinant is 1/16^C(n,2), so n >= 2 cannot hold.
const std::set<int> known_unattainable{6};

std::map<std::string, SuiteReport> reports;

const SuiteReport& suite(const std::string& id) {
    auto it = reports.find(id);
    if (it == reports.end()) it = reports.emplace(id, run_suite(default_suite_spec(id))).first;
    return it->second;
}

// Records of a suite whose check name starts with prefix; false if any does not hold or none exist.
bool suite_checks_hold(const std::string& id, const std::string& prefix, std::ostream& why) {
    std::size_t seen = 0;
    bool ok = true;
    for (const auto& r : suite(id).records) {
        if (r.check.rfind(prefix, 0) != 0) continue;
        ++seen;
        if (r.status != CaseStatus::Pass) {
            ok = false;
            why << " [" << r.check << " " << r.params << " n=" << r.n << " m=" << r.m << ": " << to_string(r.status)
                << "]";
        }
    }
    if (seen == 0) {
        why << " [no " << prefix << " records in " << id << "]";
        return false;
    }
    return ok;
}

bool eq(const FieldElem& a, const FieldElem& b, const std::string& what, std::ostream& why) {
    if (a == b) return true;
    why << " [" << what << ": " << render(a) << " != " << render(b) << "]";
    return false;
}

FieldElem det_of(const MomentSeq& s, long n, long m = 0, DetEngine e = DetEngine::Bareiss) {
    return det_exact(hankel_matrix(s, static_cast<std::size_t>(n), static_cast<std::size_t>(m)), e);
}

bool c1(std::ostream& why) {
    bool ok = true;
    for (long n = 1; n <= 10; ++n)
        for (DetEngine e : {DetEngine::Gauss, DetEngine::Bareiss})
            ok &= eq(det_of(MomentSeq::catalan(), n, 0, e), FieldElem(1), "det C n=" + std::to_string(n), why);
    return ok;
}

bool c2(std::ostream& why) {
    bool ok = true;
    for (long n = 1; n <= 6; ++n)
        for (long m = 0; m <= 5; ++m)
            ok &= eq(closed_form(FormulaId::CatalanShift, n, m), det_of(MomentSeq::catalan(), n, m),
                     "n=" + std::to_string(n) + " m=" + std::to_string(m), why);
    const SquareMatrix<FieldElem> M(2, {FieldElem(2), FieldElem(5), FieldElem(5), FieldElem(14)});
    ok &= eq(det_exact(M), FieldElem(3), "det[[2,5],[5,14]]", why);
    ok &= eq(closed_form(FormulaId::CatalanShift, 2, 2), FieldElem(3), "formula n=2 m=2", why);
    ok &= eq(closed_form(FormulaId::CatalanShift, 1, 3), FieldElem(5), "formula n=1 m=3", why);
    return ok;
}

bool c3(std::ostream& why) {
    return suite_checks_hold("tables", "table/ballot", why) & suite_checks_hold("tables", "table/catalan", why) &
           suite_checks_hold("tables", "table/central-binomial", why);
}

bool c4(std::ostream& why) {
    return suite_checks_hold("thm1", "recurrence-", why) & suite_checks_hold("thm1", "closed-A-vs-recurrence", why);
}

bool c5(std::ostream& why) {
    bool ok = suite_checks_hold("thm2-grid", "thm2", why);
    // The sample set must contain the named pairs and two rational pairs.
    const auto spec = default_suite_spec("thm2-grid");
    auto has = [&](const FieldElem& a, const FieldElem& b, const QBase& Q) {
        for (const auto& p : spec.params)
            if (p.a == a && p.b == b && p.Q.base == Q.base) return true;
        why << " [sample " << render(a) << "," << render(b) << " missing]";
        return false;
    };
    ok &= has(q_power(4), FieldElem::q(), QBase::q_to(2));
    ok &= has(q_power(2), FieldElem::q(), QBase::q_to(2));
    for (long d = 1; d <= 3; ++d) ok &= has(FieldElem::q(), q_power(d + 1), QBase{});
    std::size_t rational = 0;
    for (const auto& p : spec.params) rational += p.a.is_constant() && p.b.is_constant();
    if (rational < 2) {
        why << " [fewer than two rational samples]";
        ok = false;
    }
    return ok;
}

bool c6(std::ostream& why) {
    bool ok = suite_checks_hold("cor2-grid", "cor2", why);
    for (long n = 1; n <= 6; ++n) {
        const Rational literal = 1 / pow_rational(Rational(4), n * (n - 1) / 2);
        ok &= eq(det_of(MomentSeq::useq(4, 1, 2), n), FieldElem(literal), "det u(4,1,2) n=" + std::to_string(n), why);
    }
    return ok;
}

bool c7(std::ostream& why) {
    bool ok = true;
    for (const char* id : {"QPochRows", "QFactorial", "BracketFalling", "Carlitz", "QHilbert", "CBq0", "CBqm",
                           "CentralBinomial", "Andrews0", "Andrewsm", "OddBinomialRel"})
        ok &= suite_checks_hold("registry", id, why);
    const Rational x = make_rational(5, 2);
    ok &= eq(closed_form(FormulaId::QFactorial, 2, 0), FieldElem::q(), "QFactorial n=2", why);
    ok &= eq(closed_form(FormulaId::BracketFalling, 2, 0, x), FieldElem(-x), "BracketFalling n=2", why);
    ok &= eq(closed_form(FormulaId::Carlitz, 2, 1), -FieldElem::q(), "Carlitz n=2 m=1", why);
    ok &= eq(closed_form(FormulaId::CentralBinomial, 3, 0), FieldElem(4), "CentralBinomial n=3", why);
    return ok;
}

bool c8(std::ostream& why) {
    bool ok = eq(closed_form(FormulaId::RecipBracket, 1, 1), FieldElem(0), "as printed n=1 m=1", why);
    ok &= eq(oracle_determinant(FormulaId::RecipBracket, 1, 1), FieldElem(1), "oracle n=1 m=1", why);
    for (long n = 1; n <= 4; ++n)
        for (long m = 1; m <= 3; ++m)
            ok &= eq(oracle_determinant(FormulaId::RecipBracket, n, m), closed_form(FormulaId::QHilbert, n, m - 1),
                     "oracle vs QHilbert(n, m-1) n=" + std::to_string(n) + " m=" + std::to_string(m), why);
    // The suite must record the printed formula as expected failures and nothing as an anomaly.
    const auto& rep = suite("eq36-as-printed");
    if (rep.summary.expected_failures == 0 || !rep.ok()) {
        why << " [eq36 suite: " << rep.summary.expected_failures << " expected failures, ok=" << rep.ok() << "]";
        ok = false;
    }
    return ok;
}

bool c9(std::ostream& why) {
    bool ok = true;
    for (const char* prefix : {"alt-sum", "row-sum", "weighted-alt-sum", "alt-gauss-sum", "gauss-sum", "weighted-sum",
                               "weighted-sum-q4", "weighted-sum-q2", "alt-gauss-sum/n=1", "gauss-sum/n=1"})
        ok &= suite_checks_hold("identities", prefix, why);
    ok &= suite("identities").ok();
    return ok;
}

bool c10(std::ostream& why) {
    return suite_checks_hold("roundtrip", "roundtrip/random", why) & suite_checks_hold("roundtrip", "jacobi/", why);
}

bool c11(std::ostream& why) {
    return suite_checks_hold("q-bridges", "q->1/Andrews", why) & suite_checks_hold("q-bridges", "q->1/CB", why);
}

bool c12(std::ostream& why) {
    bool ok = suite_checks_hold("engines", "engines/rational", why) &
              suite_checks_hold("engines", "engines/rational-function", why);
    std::size_t rational = 0, functions = 0;
    for (const auto& r : suite("engines").records) {
        rational += r.check == "engines/rational";
        functions += r.check == "engines/rational-function";
    }
    if (rational != 50 || functions != 50) {
        why << " [sample counts " << rational << ", " << functions << "]";
        ok = false;
    }
    return ok;
}

}  // namespace

int main() {
    struct Criterion {
        int id;
        const char* text;
        bool (*run)(std::ostream&);
    };
    const Criterion criteria[] = {
        {1, "det(C_{i+j}) = 1 for n <= 10, both engines", c1},
        {2, "shifted Catalan determinants n <= 6, m <= 5; spot values 3 and 5", c2},
        {3, "ballot (8 rows), Catalan (5 rows), central binomial (5 rows) triangles", c3},
        {4, "closed-form A/T recurrence residuals zero, A matches the T recurrence", c4},
        {5, "q-moment determinant formula vs brute force n <= 5, m <= 3; 2x2 value", c5},
        {6, "classical determinant formula vs brute force; det(u(i+j;4,1,2)) = 1/4^C(n,2)", c6},
        {7, "registry formulas vs brute force; spot values", c7},
        {8, "1/[n] formula as printed fails at (1,1); oracle equals QHilbert(n, m-1)", c8},
        {9, "summation identities and both special cases", c9},
        {10, "moments -> Jacobi -> triangle round trip; Catalan and central binomial (s, t)", c10},
        {11, "q -> 1 bridges to the classical determinants", c11},
        {12, "Gauss and Bareiss agree on 50 + 50 random matrices", c12},
    };

    int unexpected = 0;
    for (const auto& c : criteria) {
        std::ostringstream why;
        bool pass = false;
        try {
            pass = c.run(why);
        } catch (const std::exception& e) {
            why << " [exception: " << e.what() << "]";
        }
        std::cout << (pass ? "PASS" : "FAIL") << " criterion " << c.id << ": " << c.text;
        if (!pass) {
            std::cout << " --" << why.str();
            if (known_unattainable.count(c.id)) std::cout << " (known unattainable)";
            else ++unexpected;
        }
        std::cout << '\n';
    }
    return unexpected;
}
