#pragma once

/**
 * @file polynomial.hpp
 * @brief Dense univariate polynomials in q over Z and Q.
 *
 * Poly<C> stores ascending coefficients with no trailing zeros; the zero
 * polynomial is the empty vector. ZPoly carries the gcd machinery used by
 * the rational-function field: a heuristic gcd (evaluate at a large integer,
 * take the integer gcd, interpolate back) that is confirmed by trial division,
 * and a primitive remainder sequence as the fallback.
 */

#include <algorithm>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <utility>
#include <vector>

#include "hankelkit/rational.hpp"

namespace hankelkit {

template <class C>
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<C> coeffs) : c_(std::move(coeffs)) { trim(); }
    Poly(std::initializer_list<C> coeffs) : c_(coeffs) { trim(); }
    explicit Poly(const C& constant) : c_{constant} { trim(); }
    explicit Poly(int constant) : Poly(C(constant)) {}

    static Poly constant(const C& v) { return Poly(std::vector<C>{v}); }

    static Poly monomial(const C& v, std::size_t degree) {
        std::vector<C> c(degree + 1, C(0));
        c[degree] = v;
        return Poly(std::move(c));
    }

    bool is_zero() const noexcept { return c_.empty(); }
    bool is_constant() const noexcept { return c_.size() <= 1; }

    /// -1 for the zero polynomial.
    long degree() const noexcept { return static_cast<long>(c_.size()) - 1; }

    const std::vector<C>& coeffs() const noexcept { return c_; }
    std::size_t size() const noexcept { return c_.size(); }

    C coeff(std::size_t i) const { return i < c_.size() ? c_[i] : C(0); }
    const C& leading() const { return c_.back(); }

    template <class X>
    X eval(const X& x) const {
        X acc(0);
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
            acc *= x;
            acc += *it;
        }
        return acc;
    }

    Poly operator-() const {
        Poly r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    Poly& operator+=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    Poly& operator-=(const Poly& o) {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), C(0));
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    Poly& operator*=(const C& s) {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& v : c_) v *= s;
        return *this;
    }

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(Poly a, const C& s) { return a *= s; }
    friend Poly operator*(const C& s, Poly a) { return a *= s; }

    friend Poly operator*(const Poly& a, const Poly& b) {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<C> r(a.c_.size() + b.c_.size() - 1, C(0));
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return Poly(std::move(r));
    }

    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    /// Multiplies by q^k.
    Poly shifted(std::size_t k) const {
        if (is_zero()) return {};
        std::vector<C> c(k, C(0));
        c.insert(c.end(), c_.begin(), c_.end());
        return Poly(std::move(c));
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<C> c_;
};

using ZPoly = Poly<Integer>;
using QPoly = Poly<Rational>;

inline ZPoly pow(const ZPoly& p, unsigned long e) {
    ZPoly result = ZPoly::constant(1);
    ZPoly base = p;
    while (e > 0) {
        if (e & 1UL) result *= base;
        e >>= 1;
        if (e > 0) base *= base;
    }
    return result;
}

inline Integer content(const ZPoly& p) {
    Integer g = 0;
    for (const auto& c : p.coeffs()) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

/// Divides out the content and makes the leading coefficient positive.
inline ZPoly primitive_part(const ZPoly& p) {
    if (p.is_zero()) return p;
    Integer g = content(p);
    if (p.leading() < 0) g = -g;
    if (g == 1) return p;
    std::vector<Integer> c = p.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), g.get_mpz_t());
    return ZPoly(std::move(c));
}

inline Integer max_norm(const ZPoly& p) {
    Integer m = 0;
    for (const auto& c : p.coeffs())
        if (mpz_cmpabs(c.get_mpz_t(), m.get_mpz_t()) > 0) m = abs(c);
    return m;
}

/// Exact quotient a / b in Z[q], or nullopt when b does not divide a over Z.
inline std::optional<ZPoly> divide_exact(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    if (a.is_zero()) return ZPoly{};
    if (a.degree() < b.degree()) return std::nullopt;
    // Cheap rejections on the constant and leading terms.
    if (b.coeff(0) != 0 && !mpz_divisible_p(a.coeff(0).get_mpz_t(), b.coeff(0).get_mpz_t()))
        return std::nullopt;
    if (!mpz_divisible_p(a.leading().get_mpz_t(), b.leading().get_mpz_t())) return std::nullopt;

    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    std::vector<Integer> q(r.size() - db, 0);
    for (std::size_t i = q.size(); i-- > 0;) {
        Integer& top = r[i + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), bc[db].get_mpz_t())) return std::nullopt;
        Integer f;
        mpz_divexact(f.get_mpz_t(), top.get_mpz_t(), bc[db].get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j)
            mpz_submul(r[i + j].get_mpz_t(), f.get_mpz_t(), bc[j].get_mpz_t());
        q[i] = std::move(f);
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return std::nullopt;
    return ZPoly(std::move(q));
}

/// Quotient that is known to be exact; throws std::logic_error otherwise.
inline ZPoly divexact(const ZPoly& a, const ZPoly& b) {
    auto q = divide_exact(a, b);
    if (!q) throw std::logic_error("divexact: inexact polynomial division");
    return *std::move(q);
}

inline ZPoly divexact(const ZPoly& a, const Integer& s) {
    std::vector<Integer> c = a.coeffs();
    for (auto& v : c) mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), s.get_mpz_t());
    return ZPoly(std::move(c));
}

/// Remainder of lc(b)^e * a by b for some e >= 0 (enough for a primitive PRS).
inline ZPoly pseudo_remainder(const ZPoly& a, const ZPoly& b) {
    if (b.is_zero()) throw DivisionByZero();
    std::vector<Integer> r = a.coeffs();
    const auto& bc = b.coeffs();
    const std::size_t db = bc.size() - 1;
    const Integer& lb = bc[db];
    long dr = static_cast<long>(r.size()) - 1;
    while (dr >= static_cast<long>(db)) {
        Integer top = r[static_cast<std::size_t>(dr)];
        const std::size_t shift = static_cast<std::size_t>(dr) - db;
        for (auto& v : r) v *= lb;
        for (std::size_t j = 0; j <= db; ++j) r[shift + j] -= top * bc[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        dr = static_cast<long>(r.size()) - 1;
    }
    return ZPoly(std::move(r));
}

/// gcd of primitive parts by the primitive remainder sequence.
inline ZPoly gcd_prs(ZPoly a, ZPoly b) {
    a = primitive_part(a);
    b = primitive_part(b);
    if (a.degree() < b.degree()) std::swap(a, b);
    while (!b.is_zero()) {
        ZPoly r = pseudo_remainder(a, b);
        a = std::move(b);
        b = primitive_part(r);
    }
    return primitive_part(a);
}

namespace detail {

// Balanced base-x digits of h, read back as polynomial coefficients.
inline ZPoly interpolate_balanced(Integer h, const Integer& x) {
    std::vector<Integer> c;
    Integer half = x / 2;
    while (h != 0) {
        Integer g;
        mpz_fdiv_r(g.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
        if (g > half) g -= x;
        c.push_back(g);
        h -= g;
        mpz_divexact(h.get_mpz_t(), h.get_mpz_t(), x.get_mpz_t());
    }
    return ZPoly(std::move(c));
}

}  // namespace detail

/// Heuristic gcd of two primitive polynomials; nullopt when it gives up.
inline std::optional<ZPoly> gcd_heuristic(const ZPoly& f, const ZPoly& g) {
    const Integer nf = max_norm(f);
    const Integer ng = max_norm(g);
    const Integer b = 2 * std::min(nf, ng) + 29;
    const Integer scaled_root = 99 * Integer(sqrt(b));
    Integer x = std::min(b, scaled_root);
    const Integer rf = nf / Integer(abs(f.leading()));
    const Integer rg = ng / Integer(abs(g.leading()));
    Integer alt = 2 * std::min(rf, rg) + 2;
    if (alt > x) x = alt;

    for (int attempt = 0; attempt < 6; ++attempt) {
        Integer fx = f.eval(x);
        Integer gx = g.eval(x);
        if (fx != 0 && gx != 0) {
            Integer h = gcd(fx, gx);
            ZPoly cand = primitive_part(detail::interpolate_balanced(h, x));
            if (!cand.is_zero() && divide_exact(f, cand) && divide_exact(g, cand)) return cand;
        }
        x = 73794 * x * Integer(sqrt(Integer(sqrt(x)))) / 27011;
    }
    return std::nullopt;
}

/// Primitive gcd with positive leading coefficient; gcd(0, 0) = 0.
inline ZPoly gcd(const ZPoly& a, const ZPoly& b) {
    if (a.is_zero()) return primitive_part(b);
    if (b.is_zero()) return primitive_part(a);
    ZPoly pa = primitive_part(a);
    ZPoly pb = primitive_part(b);
    if (pa.degree() == 0 || pb.degree() == 0) return ZPoly::constant(1);
    if (pa == pb) return pa;
    if (auto h = gcd_heuristic(pa, pb)) return *std::move(h);
    return gcd_prs(pa, pb);
}

inline ZPoly lcm(const ZPoly& a, const ZPoly& b) {
    ZPoly g = gcd(a, b);
    return primitive_part(divexact(primitive_part(a), g) * primitive_part(b));
}

/// Splits a rational polynomial as content * primitive integer polynomial.
/// The primitive part has positive leading coefficient; zero maps to (0, 1).
inline std::pair<Rational, ZPoly> split_content(const QPoly& p) {
    if (p.is_zero()) return {Rational(0), ZPoly::constant(1)};
    Integer den = 1;
    for (const auto& c : p.coeffs()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), c.get_den_mpz_t());
    std::vector<Integer> zc;
    zc.reserve(p.size());
    for (const auto& c : p.coeffs()) zc.push_back(c.get_num() * (den / c.get_den()));
    ZPoly z(std::move(zc));
    Integer cont = content(z);
    if (z.leading() < 0) cont = -cont;
    return {make_rational(cont, den), divexact(z, cont)};
}

inline QPoly to_qpoly(const ZPoly& p) {
    std::vector<Rational> c;
    c.reserve(p.size());
    for (const auto& v : p.coeffs()) c.emplace_back(v);
    return QPoly(std::move(c));
}

}  // namespace hankelkit
