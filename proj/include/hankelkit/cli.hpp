#pragma once

/**
 * @file cli.hpp
 * @brief The hankelkit command line, callable in-process.
 *
 *   hankelkit triangle    (--seq S | --s L --t L | --T L [--zero-s]) --rows N
 *   hankelkit det         --seq S --n N [--m M] [--via oracle|lemma] [--cross-check] [--engine E]
 *   hankelkit closed-form ID --n N [--m M] [--x X] [--cross-check] [--engine E]
 *   hankelkit jacobi      --seq S --depth D
 *   hankelkit verify      SUITE [--seed K] [--engine E] [--n-max N] [--m-max M] [--out PATH] [--timings]
 *
 * Every command takes --format pretty|json|csv. Exit codes: 0 ok, 1 a
 * verification failed, 2 usage or parse error, 3 mathematical error.
 */

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hankelkit/closed_forms.hpp"
#include "hankelkit/verify.hpp"

namespace hankelkit::cli {

enum ExitCode : int { Ok = 0, VerificationFailed = 1, Usage = 2, Math = 3 };

using Json = nlohmann::ordered_json;

/// Ascending coefficient strings of numerator and denominator.
inline Json to_json(const FieldElem& x) {
    auto coeffs = [](const QPoly& p) {
        Json a = Json::array();
        for (const auto& c : p.coeffs()) a.push_back(c.get_str());
        return a;
    };
    return Json{{"num_coeffs", coeffs(x.numerator())}, {"den_coeffs", coeffs(x.denominator())}};
}

struct Config {
    std::string format = "pretty";

    std::string seq;
    std::vector<std::string> s_list, t_list, T_list;
    bool zero_s = false;
    std::size_t rows = 5;

    long n = 1;
    long m = 0;
    std::string via = "oracle";
    bool cross_check = false;
    std::string engine = "bareiss";

    std::string formula;
    std::string x;

    std::size_t depth = 2;

    std::string suite;
    std::uint64_t seed = 0;
    std::optional<long> n_max, m_max;
    std::string out_path;
    bool timings = false;
};

namespace detail {

inline DetEngine parse_engine(const std::string& s) { return s == "gauss" ? DetEngine::Gauss : DetEngine::Bareiss; }

inline std::vector<FieldElem> parse_list(const std::vector<std::string>& items) {
    std::vector<FieldElem> out;
    for (const auto& item : items)
        for (const auto& part : hankelkit::detail::split_top_level(item, ',')) out.push_back(parse_field_expr(part));
    return out;
}

/// A single value is a constant sequence, several are a finite table.
inline std::function<FieldElem(std::size_t)> list_fn(const std::vector<FieldElem>& v, std::size_t& length) {
    if (v.size() == 1) {
        length = JacobiParams::unbounded;
        return [x = v[0]](std::size_t) { return x; };
    }
    length = v.size();
    auto p = std::make_shared<const std::vector<FieldElem>>(v);
    return [p](std::size_t k) { return p->at(k); };
}

inline void print_scalar(std::ostream& out, const Config& cfg, const std::string& command, const Json& params,
                         const FieldElem& value, const std::optional<FieldElem>& oracle) {
    const bool matches = oracle && *oracle == value;
    if (cfg.format == "json") {
        Json j{{"command", command}, {"params", params}, {"result", to_json(value)}};
        if (oracle) j["cross_check"] = Json{{"oracle", to_json(*oracle)}, {"matches", matches}};
        out << j.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "command,result" << (oracle ? ",oracle,matches" : "") << '\n';
        out << command << ',' << hankelkit::detail::csv_cell(render(value));
        if (oracle) out << ',' << hankelkit::detail::csv_cell(render(*oracle)) << ',' << (matches ? "true" : "false");
        out << '\n';
    } else {
        out << render(value) << '\n';
        if (oracle) out << "oracle: " << render(*oracle) << '\n' << "matches: " << (matches ? "yes" : "no") << '\n';
    }
}

inline void print_triangle(std::ostream& out, const Config& cfg, const Json& params, const Triangle& tri) {
    if (cfg.format == "json") {
        Json rows = Json::array();
        for (const auto& r : tri.rows()) {
            Json row = Json::array();
            for (const auto& v : r) row.push_back(to_json(v));
            rows.push_back(std::move(row));
        }
        out << Json{{"command", "triangle"}, {"params", params}, {"result", {{"rows", rows}}}}.dump(2) << '\n';
    } else if (cfg.format == "csv") {
        out << "n,k,value\n";
        for (std::size_t n = 0; n < tri.size(); ++n)
            for (std::size_t k = 0; k <= n; ++k)
                out << n << ',' << k << ',' << hankelkit::detail::csv_cell(render(tri.row(n)[k])) << '\n';
    } else {
        for (const auto& r : tri.rows()) {
            for (std::size_t k = 0; k < r.size(); ++k) out << (k ? " " : "") << render(r[k]);
            out << '\n';
        }
    }
}

}  // namespace detail

inline int cmd_triangle(const Config& cfg, std::ostream& out) {
    if (cfg.rows == 0) throw UsageError("--rows must be positive");
    const std::size_t last = cfg.rows - 1;
    Json params{{"rows", cfg.rows}};
    Triangle tri;
    if (!cfg.seq.empty()) {
        const MomentSeq seq = parse_sequence(cfg.seq);
        params["seq"] = seq.describe();
        tri = build_triangle(jacobi_from_moments(seq, cfg.rows), last);
    } else if (!cfg.T_list.empty()) {
        std::size_t len = 0;
        auto fn = detail::list_fn(detail::parse_list(cfg.T_list), len);
        const TSeq T(fn, len);
        params["T"] = cfg.T_list;
        params["zero_s"] = cfg.zero_s;
        tri = cfg.zero_s ? build_zero_s_triangle(T, last) : build_triangle(contract(T), last);
    } else if (!cfg.s_list.empty() && !cfg.t_list.empty()) {
        std::size_t ls = 0, lt = 0;
        auto s = detail::list_fn(detail::parse_list(cfg.s_list), ls);
        auto t = detail::list_fn(detail::parse_list(cfg.t_list), lt);
        params["s"] = cfg.s_list;
        params["t"] = cfg.t_list;
        tri = build_triangle(JacobiParams(s, t, std::min(ls, lt)), last);
    } else {
        throw UsageError("triangle needs --seq, --T, or both --s and --t");
    }
    detail::print_triangle(out, cfg, params, tri);
    return Ok;
}

/// Hankel determinant through the t-product; a shifted sequence is first divided by c(m).
inline FieldElem det_by_lemma(const MomentSeq& seq, long n, long m) {
    const auto terms = seq.terms_range(static_cast<std::size_t>(m), static_cast<std::size_t>(2 * n - 1));
    if (terms[0].is_zero()) throw SingularLeadingMinor(1);
    const FieldElem c0 = terms[0];
    std::vector<FieldElem> normalized;
    for (const auto& v : terms) normalized.push_back(v / c0);
    const auto jp = jacobi_from_moments(MomentSeq::explicit_values(std::move(normalized)), static_cast<std::size_t>(n));
    return pow_int(c0, n) * det_via_lemma(jp, static_cast<std::size_t>(n));
}

inline int cmd_det(const Config& cfg, std::ostream& out) {
    if (cfg.seq.empty()) throw MissingParameter("--seq");
    const MomentSeq seq = parse_sequence(cfg.seq);
    const DetEngine engine = detail::parse_engine(cfg.engine);
    auto oracle = [&] {
        return det_exact(hankel_matrix(seq, static_cast<std::size_t>(cfg.n), static_cast<std::size_t>(cfg.m)), engine);
    };
    auto lemma = [&] { return det_by_lemma(seq, cfg.n, cfg.m); };
    const bool by_lemma = cfg.via == "lemma";
    const FieldElem value = by_lemma ? lemma() : oracle();
    std::optional<FieldElem> other;
    if (cfg.cross_check) other = by_lemma ? oracle() : lemma();
    const Json params{{"seq", seq.describe()}, {"n", cfg.n}, {"m", cfg.m}, {"via", cfg.via}, {"engine", cfg.engine}};
    detail::print_scalar(out, cfg, "det", params, value, other);
    return (other && *other != value) ? VerificationFailed : Ok;
}

inline int cmd_closed_form(const Config& cfg, std::ostream& out) {
    const FormulaId id = parse_formula_id(cfg.formula);
    std::optional<Rational> x;
    if (!cfg.x.empty()) x = hankelkit::detail::parse_rational_expr(cfg.x);
    const FieldElem value = closed_form(id, cfg.n, cfg.m, x);
    std::optional<FieldElem> oracle;
    if (cfg.cross_check) oracle = oracle_determinant(id, cfg.n, cfg.m, x, detail::parse_engine(cfg.engine));
    Json params{{"id", to_string(id)}, {"n", cfg.n}, {"m", cfg.m}};
    if (x) params["x"] = x->get_str();
    detail::print_scalar(out, cfg, "closed-form", params, value, oracle);
    return (oracle && *oracle != value) ? VerificationFailed : Ok;
}

inline int cmd_jacobi(const Config& cfg, std::ostream& out) {
    if (cfg.seq.empty()) throw MissingParameter("--seq");
    const MomentSeq seq = parse_sequence(cfg.seq);
    const JacobiParams jp = jacobi_from_moments(seq, cfg.depth);
    const auto s = jp.s_values(jp.length());
    const auto t = jp.t_values(jp.length());
    if (cfg.format == "json") {
        Json js = Json::array(), jt = Json::array();
        for (const auto& v : s) js.push_back(to_json(v));
        for (const auto& v : t) jt.push_back(to_json(v));
        out << Json{{"command", "jacobi"},
                    {"params", {{"seq", seq.describe()}, {"depth", cfg.depth}}},
                    {"result", {{"s", js}, {"t", jt}}}}
                   .dump(2)
            << '\n';
    } else if (cfg.format == "csv") {
        out << "k,s,t\n";
        for (std::size_t k = 0; k < s.size(); ++k)
            out << k << ',' << hankelkit::detail::csv_cell(render(s[k])) << ','
                << hankelkit::detail::csv_cell(render(t[k])) << '\n';
    } else {
        auto join = [](const std::vector<FieldElem>& v) {
            std::string r;
            for (std::size_t k = 0; k < v.size(); ++k) r += (k ? ", " : "") + render(v[k]);
            return r;
        };
        out << "s = " << join(s) << '\n' << "t = " << join(t) << '\n';
    }
    return Ok;
}

inline int cmd_verify(const Config& cfg, std::ostream& out) {
    SuiteSpec spec = default_suite_spec(cfg.suite, cfg.seed);
    if (cfg.n_max) spec.n_max = *cfg.n_max;
    if (cfg.m_max) spec.m_max = *cfg.m_max;
    spec.engine = detail::parse_engine(cfg.engine);
    spec.timings = cfg.timings;
    const SuiteReport rep = run_suite(spec);
    std::string text;
    if (cfg.format == "json")
        text = to_json(rep).dump(2) + "\n";
    else if (cfg.format == "csv")
        text = to_csv(rep);
    else
        text = to_pretty(rep);
    if (cfg.out_path.empty()) {
        out << text;
    } else {
        std::ofstream f(cfg.out_path, std::ios::binary);
        if (!f) throw UsageError("cannot write '" + cfg.out_path + "'");
        f << text;
    }
    return rep.ok() ? Ok : VerificationFailed;
}

/// Parses argv and runs one command. Never throws.
inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
    Config cfg;
    CLI::App app{"Exact Hankel determinants of moment sequences and their q-analogues", "hankelkit"};
    app.require_subcommand(1);
    const auto formats = CLI::IsMember({"pretty", "json", "csv"});
    const auto engines = CLI::IsMember({"gauss", "bareiss"});

    auto* tri = app.add_subcommand("triangle", "recurrence triangle from a sequence, (s, t), or T");
    tri->add_option("--seq", cfg.seq, "moment sequence; (s, t) recovered from its moments");
    tri->add_option("--s", cfg.s_list, "s(0), s(1), ... (one value: constant)")->delimiter(',');
    tri->add_option("--t", cfg.t_list, "t(0), t(1), ... (one value: constant)")->delimiter(',');
    tri->add_option("--T", cfg.T_list, "T(0), T(1), ... (one value: constant)")->delimiter(',');
    tri->add_flag("--zero-s", cfg.zero_s, "print the zero-s triangle of T instead of its contraction");
    tri->add_option("--rows", cfg.rows, "number of rows")->check(CLI::PositiveNumber);

    auto* det = app.add_subcommand("det", "Hankel determinant det(c(i+j+m))_{i,j<n}");
    det->add_option("--seq", cfg.seq, "moment sequence")->required();
    det->add_option("--n", cfg.n, "order")->required()->check(CLI::PositiveNumber);
    det->add_option("--m", cfg.m, "shift")->check(CLI::NonNegativeNumber);
    det->add_option("--via", cfg.via, "oracle (elimination) or lemma (t-products)")
        ->check(CLI::IsMember({"oracle", "lemma"}));
    det->add_flag("--cross-check", cfg.cross_check, "also compute by the other method");
    det->add_option("--engine", cfg.engine, "determinant engine")->check(engines);

    auto* cf = app.add_subcommand("closed-form", "evaluate a registry formula");
    cf->add_option("id", cfg.formula, "formula id")->required();
    cf->add_option("--n", cfg.n, "order")->required()->check(CLI::PositiveNumber);
    cf->add_option("--m", cfg.m, "shift")->check(CLI::NonNegativeNumber);
    cf->add_option("--x", cfg.x, "rational parameter x");
    cf->add_flag("--cross-check", cfg.cross_check, "compare with the brute-force determinant");
    cf->add_option("--engine", cfg.engine, "determinant engine")->check(engines);

    auto* jac = app.add_subcommand("jacobi", "Jacobi parameters (s, t) from moments");
    jac->add_option("--seq", cfg.seq, "moment sequence")->required();
    jac->add_option("--depth", cfg.depth, "uses moments 0 .. 2 depth - 2")->required()->check(CLI::PositiveNumber);

    auto* ver = app.add_subcommand("verify", "run a verification suite");
    ver->add_option("suite", cfg.suite, "suite id")->required()->check(CLI::IsMember(suite_ids()));
    ver->add_option("--seed", cfg.seed, "sample seed (0: documented order)");
    ver->add_option("--engine", cfg.engine, "determinant engine")->check(engines);
    ver->add_option("--n-max", cfg.n_max, "largest n")->check(CLI::PositiveNumber);
    ver->add_option("--m-max", cfg.m_max, "largest m")->check(CLI::NonNegativeNumber);
    ver->add_option("--out", cfg.out_path, "write the report here instead of stdout");
    ver->add_flag("--timings", cfg.timings, "record wall time per case");

    for (auto* sub : {tri, det, cf, jac, ver})
        sub->add_option("--format", cfg.format, "pretty, json or csv")->check(formats);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return Usage;
    }

    try {
        if (*tri) return cmd_triangle(cfg, out);
        if (*det) return cmd_det(cfg, out);
        if (*cf) return cmd_closed_form(cfg, out);
        if (*jac) return cmd_jacobi(cfg, out);
        return cmd_verify(cfg, out);
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return Usage;
    } catch (const MathError& e) {
        err << "error: " << e.what() << '\n';
        return Math;
    } catch (const std::exception& e) {
        err << "internal error: " << e.what() << '\n';
        return Math;
    }
}

/// Convenience overload for tests: args exclude the program name.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    std::vector<const char*> argv{"hankelkit"};
    for (const auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace hankelkit::cli
