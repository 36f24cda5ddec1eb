#pragma once

/**
 * @file sequences.hpp
 * @brief Moment sequences c(0), c(1), ... as field elements.
 *
 * MomentSeq is an immutable description; terms are computed on demand.
 *
 *   cseq(a, b, Q)       c(n) = (b; Q)_n / (a; Q)_n
 *   useq(a, b, c)       u(n) = prod_{j<n} (b + j c) / (a + j c)
 *   catalan()           C_n
 *   central_binomial()  C(2n, n)
 *   andrews_q_catalan() cseq(q^4, q, q^2)
 *   shifted(s, m)       n -> s(n + m)
 *   scaled(s, x)        n -> x^n s(n)
 *   explicit_values(v)  a finite list
 *   generated(name, f)  n -> f(n), for matrices defined entrywise
 */

#include <functional>
#include <memory>
#include <string>
#include <variant>
#include <vector>

#include "hankelkit/expr.hpp"
#include "hankelkit/qcalc.hpp"

namespace hankelkit {

class MomentSeq;

namespace detail {

struct CSeqKind {
    FieldElem a, b;
    QBase Q;
};
struct USeqKind {
    Rational a, b, c;
};
struct CatalanKind {};
struct CentralBinomialKind {};
struct AndrewsKind {};
struct ShiftedKind;
struct ScaledKind;
struct ExplicitKind {
    std::vector<FieldElem> values;
};
struct GeneratedKind {
    std::string name;
    std::function<FieldElem(std::size_t)> fn;
};

}  // namespace detail

class MomentSeq {
public:
    static MomentSeq cseq(FieldElem a, FieldElem b, QBase Q = {});
    static MomentSeq useq(Rational a, Rational b, Rational c);
    static MomentSeq catalan();
    static MomentSeq central_binomial();
    static MomentSeq andrews_q_catalan();
    static MomentSeq shifted(MomentSeq inner, std::size_t m);
    static MomentSeq scaled(MomentSeq inner, FieldElem x);
    static MomentSeq explicit_values(std::vector<FieldElem> values);
    static MomentSeq generated(std::string name, std::function<FieldElem(std::size_t)> fn);

    /// [term(0), ..., term(count - 1)], each from the previous by one factor where possible.
    std::vector<FieldElem> terms_upto(std::size_t count) const;

    FieldElem term(std::size_t n) const;

    /// [term(from), ..., term(from + count - 1)]; entrywise kinds skip the earlier terms.
    std::vector<FieldElem> terms_range(std::size_t from, std::size_t count) const;

    /// The sequence in the CLI mini-syntax (`catalan`, `c:q^2,q,q^2`, ...).
    std::string describe() const;

private:
    struct Node;
    explicit MomentSeq(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
    std::shared_ptr<const Node> node_;
};

namespace detail {
struct ShiftedKind {
    MomentSeq inner;
    std::size_t m;
};
struct ScaledKind {
    MomentSeq inner;
    FieldElem x;
};
}  // namespace detail

struct MomentSeq::Node {
    std::variant<detail::CSeqKind, detail::USeqKind, detail::CatalanKind, detail::CentralBinomialKind,
                 detail::AndrewsKind, detail::ShiftedKind, detail::ScaledKind, detail::ExplicitKind,
                 detail::GeneratedKind>
        kind;
};

inline MomentSeq MomentSeq::cseq(FieldElem a, FieldElem b, QBase Q) {
    return MomentSeq(std::make_shared<const Node>(Node{detail::CSeqKind{std::move(a), std::move(b), std::move(Q)}}));
}
inline MomentSeq MomentSeq::useq(Rational a, Rational b, Rational c) {
    return MomentSeq(std::make_shared<const Node>(Node{detail::USeqKind{std::move(a), std::move(b), std::move(c)}}));
}
inline MomentSeq MomentSeq::catalan() { return MomentSeq(std::make_shared<const Node>(Node{detail::CatalanKind{}})); }
inline MomentSeq MomentSeq::central_binomial() {
    return MomentSeq(std::make_shared<const Node>(Node{detail::CentralBinomialKind{}}));
}
inline MomentSeq MomentSeq::andrews_q_catalan() {
    return MomentSeq(std::make_shared<const Node>(Node{detail::AndrewsKind{}}));
}
inline MomentSeq MomentSeq::shifted(MomentSeq inner, std::size_t m) {
    return MomentSeq(std::make_shared<const Node>(Node{detail::ShiftedKind{std::move(inner), m}}));
}
inline MomentSeq MomentSeq::scaled(MomentSeq inner, FieldElem x) {
    return MomentSeq(std::make_shared<const Node>(Node{detail::ScaledKind{std::move(inner), std::move(x)}}));
}
inline MomentSeq MomentSeq::explicit_values(std::vector<FieldElem> values) {
    return MomentSeq(std::make_shared<const Node>(Node{detail::ExplicitKind{std::move(values)}}));
}
inline MomentSeq MomentSeq::generated(std::string name, std::function<FieldElem(std::size_t)> fn) {
    return MomentSeq(std::make_shared<const Node>(Node{detail::GeneratedKind{std::move(name), std::move(fn)}}));
}

namespace detail {

inline std::vector<FieldElem> cseq_terms(const FieldElem& a, const FieldElem& b, const QBase& Q, std::size_t count) {
    std::vector<FieldElem> out;
    out.reserve(count);
    FieldElem cur(1);
    FieldElem qj(1);
    for (std::size_t n = 0; n < count; ++n) {
        if (n > 0) {
            FieldElem den = FieldElem(1) - qj * a;
            if (den.is_zero()) throw PoleInSequence(n);
            cur = cur * (FieldElem(1) - qj * b) / den;
            qj *= Q.base;
        }
        out.push_back(cur);
    }
    return out;
}

}  // namespace detail

inline std::vector<FieldElem> MomentSeq::terms_upto(std::size_t count) const {
    using namespace detail;
    return std::visit(
        [count](const auto& k) -> std::vector<FieldElem> {
            using K = std::decay_t<decltype(k)>;
            std::vector<FieldElem> out;
            out.reserve(count);
            if constexpr (std::is_same_v<K, CSeqKind>) {
                return cseq_terms(k.a, k.b, k.Q, count);
            } else if constexpr (std::is_same_v<K, AndrewsKind>) {
                return cseq_terms(q_power(4), FieldElem::q(), QBase::q_to(2), count);
            } else if constexpr (std::is_same_v<K, USeqKind>) {
                Rational cur = 1;
                for (std::size_t n = 0; n < count; ++n) {
                    if (n > 0) {
                        const Rational j(static_cast<unsigned long>(n - 1));
                        const Rational den = k.a + j * k.c;
                        if (den == 0) throw PoleInSequence(n);
                        cur = cur * (k.b + j * k.c) / den;
                    }
                    out.emplace_back(cur);
                }
            } else if constexpr (std::is_same_v<K, CatalanKind>) {
                Integer cur = 1;
                for (std::size_t n = 0; n < count; ++n) {
                    if (n > 0) cur = cur * Integer(2 * (2 * n - 1)) / Integer(n + 1);
                    out.emplace_back(Rational(cur));
                }
            } else if constexpr (std::is_same_v<K, CentralBinomialKind>) {
                Integer cur = 1;
                for (std::size_t n = 0; n < count; ++n) {
                    if (n > 0) cur = cur * Integer(2 * (2 * n - 1)) / Integer(n);
                    out.emplace_back(Rational(cur));
                }
            } else if constexpr (std::is_same_v<K, ShiftedKind>) {
                out = k.inner.terms_range(k.m, count);
            } else if constexpr (std::is_same_v<K, ScaledKind>) {
                auto inner = k.inner.terms_upto(count);
                FieldElem xn(1);
                for (std::size_t n = 0; n < count; ++n) {
                    out.push_back(xn * inner[n]);
                    xn *= k.x;
                }
            } else if constexpr (std::is_same_v<K, ExplicitKind>) {
                if (count > k.values.size())
                    throw UsageError("explicit sequence has " + std::to_string(k.values.size()) +
                                     " terms, " + std::to_string(count) + " requested");
                out.assign(k.values.begin(), k.values.begin() + static_cast<std::ptrdiff_t>(count));
            } else {
                for (std::size_t n = 0; n < count; ++n) out.push_back(k.fn(n));
            }
            return out;
        },
        node_->kind);
}

inline FieldElem MomentSeq::term(std::size_t n) const {
    if (const auto* e = std::get_if<detail::ExplicitKind>(&node_->kind)) {
        if (n >= e->values.size())
            throw UsageError("explicit sequence has no term " + std::to_string(n));
        return e->values[n];
    }
    if (const auto* g = std::get_if<detail::GeneratedKind>(&node_->kind)) return g->fn(n);
    return terms_upto(n + 1).back();
}

inline std::vector<FieldElem> MomentSeq::terms_range(std::size_t from, std::size_t count) const {
    if (const auto* g = std::get_if<detail::GeneratedKind>(&node_->kind)) {
        std::vector<FieldElem> out;
        out.reserve(count);
        for (std::size_t n = from; n < from + count; ++n) out.push_back(g->fn(n));
        return out;
    }
    auto all = terms_upto(from + count);
    return {all.begin() + static_cast<std::ptrdiff_t>(from), all.end()};
}

inline std::string MomentSeq::describe() const {
    using namespace detail;
    return std::visit(
        [](const auto& k) -> std::string {
            using K = std::decay_t<decltype(k)>;
            if constexpr (std::is_same_v<K, CSeqKind>)
                return "c:" + render(k.a) + "," + render(k.b) + "," + render(k.Q.base);
            else if constexpr (std::is_same_v<K, USeqKind>)
                return "u:" + k.a.get_str() + "," + k.b.get_str() + "," + k.c.get_str();
            else if constexpr (std::is_same_v<K, CatalanKind>)
                return "catalan";
            else if constexpr (std::is_same_v<K, CentralBinomialKind>)
                return "central-binomial";
            else if constexpr (std::is_same_v<K, AndrewsKind>)
                return "andrews";
            else if constexpr (std::is_same_v<K, ShiftedKind>)
                return "shift:" + std::to_string(k.m) + ":" + k.inner.describe();
            else if constexpr (std::is_same_v<K, ScaledKind>)
                return "scale:" + render(k.x) + ":" + k.inner.describe();
            else if constexpr (std::is_same_v<K, ExplicitKind>) {
                std::string s = "explicit:";
                for (std::size_t i = 0; i < k.values.size(); ++i) s += (i ? "," : "") + render(k.values[i]);
                return s;
            } else
                return k.name;
        },
        node_->kind);
}

namespace detail {

inline std::vector<std::string> split_top_level(std::string_view s, char sep) {
    std::vector<std::string> parts;
    int depth = 0;
    std::string cur;
    for (char c : s) {
        if (c == '(') ++depth;
        if (c == ')') --depth;
        if (c == sep && depth == 0) {
            parts.push_back(cur);
            cur.clear();
        } else {
            cur += c;
        }
    }
    parts.push_back(cur);
    return parts;
}

inline Rational parse_rational_expr(std::string_view text) {
    FieldElem v = parse_field_expr(text);
    if (!v.is_constant()) throw ParseError("expected a rational constant, got '" + std::string(text) + "'", 0);
    return v.constant_value();
}

}  // namespace detail

/// Parses the sequence mini-syntax; inverse of MomentSeq::describe for the named kinds.
inline MomentSeq parse_sequence(std::string_view spec) {
    auto trimmed = [](std::string_view s) {
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
        while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
        return s;
    };
    spec = trimmed(spec);
    if (spec == "catalan") return MomentSeq::catalan();
    if (spec == "central-binomial") return MomentSeq::central_binomial();
    if (spec == "andrews") return MomentSeq::andrews_q_catalan();

    const auto colon = spec.find(':');
    if (colon == std::string_view::npos) throw UsageError("unknown sequence '" + std::string(spec) + "'");
    const std::string_view head = spec.substr(0, colon);
    const std::string_view rest = spec.substr(colon + 1);

    if (head == "c" || head == "u") {
        auto parts = detail::split_top_level(rest, ',');
        if (parts.size() != 3) throw UsageError(std::string(head) + ": expects three comma-separated parameters");
        if (head == "c")
            return MomentSeq::cseq(parse_field_expr(parts[0]), parse_field_expr(parts[1]),
                                   QBase(parse_field_expr(parts[2])));
        return MomentSeq::useq(detail::parse_rational_expr(parts[0]), detail::parse_rational_expr(parts[1]),
                               detail::parse_rational_expr(parts[2]));
    }
    if (head == "shift" || head == "scale") {
        const auto second = rest.find(':');
        if (second == std::string_view::npos) throw UsageError(std::string(head) + ": expects <arg>:<sequence>");
        const std::string_view arg = trimmed(rest.substr(0, second));
        MomentSeq inner = parse_sequence(rest.substr(second + 1));
        if (head == "shift") {
            Rational m = detail::parse_rational_expr(arg);
            if (m < 0 || m.get_den() != 1) throw UsageError("shift: expects a nonnegative integer");
            return MomentSeq::shifted(std::move(inner), m.get_num().get_ui());
        }
        return MomentSeq::scaled(std::move(inner), parse_field_expr(arg));
    }
    if (head == "explicit") {
        std::vector<FieldElem> values;
        for (const auto& p : detail::split_top_level(rest, ',')) values.push_back(parse_field_expr(p));
        return MomentSeq::explicit_values(std::move(values));
    }
    throw UsageError("unknown sequence kind '" + std::string(head) + "'");
}

}  // namespace hankelkit
