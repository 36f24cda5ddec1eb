#pragma once

/**
 * @file field_elem.hpp
 * @brief Elements of the rational function field Q(q) in canonical form.
 *
 * A FieldElem is stored as scale * num / den where num and den are coprime
 * primitive integer polynomials with positive leading coefficients and scale
 * is a rational. The public view is the canonical pair
 *
 *     numerator()   = scale * num   (rational coefficients)
 *     denominator() = den           (integer coefficients, content 1, lc > 0)
 *
 * so equality is componentwise equality of the stored parts. Zero is stored
 * as 0 * 1 / 1.
 *
 * Products and sums use the cross-gcd tricks (only the cofactors that can
 * still share a factor are reduced) so the result is canonical without a
 * full gcd of the final numerator and denominator.
 */

#include <utility>

#include "hankelkit/polynomial.hpp"

namespace hankelkit {

class FieldElem {
public:
    FieldElem() : scale_(0), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}
    FieldElem(long v) : FieldElem(Rational(v)) {}  // NOLINT(google-explicit-constructor)
    FieldElem(const Rational& v) : scale_(v), num_(ZPoly::constant(1)), den_(ZPoly::constant(1)) {}  // NOLINT

    /// The indeterminate q.
    static FieldElem q() { return from_parts(Rational(1), ZPoly{0, 1}, ZPoly::constant(1)); }

    /// c * q^k.
    static FieldElem monomial(const Rational& c, std::size_t k) {
        if (c == 0) return {};
        return from_parts(c, ZPoly::monomial(Integer(1), k), ZPoly::constant(1));
    }

    static FieldElem from_poly(const QPoly& p) {
        auto [c, z] = split_content(p);
        if (c == 0) return {};
        return from_parts(c, std::move(z), ZPoly::constant(1));
    }

    static FieldElem from_polys(const QPoly& num, const QPoly& den) {
        if (den.is_zero()) throw DivisionByZero();
        auto [cn, zn] = split_content(num);
        if (cn == 0) return {};
        auto [cd, zd] = split_content(den);
        return reduce(cn / cd, std::move(zn), std::move(zd));
    }

    static FieldElem from_zpolys(const ZPoly& num, const ZPoly& den) {
        if (den.is_zero()) throw DivisionByZero();
        if (num.is_zero()) return {};
        Integer cn = content(num);
        if (num.leading() < 0) cn = -cn;
        Integer cd = content(den);
        if (den.leading() < 0) cd = -cd;
        return reduce(make_rational(cn, cd), divexact(num, cn), divexact(den, cd));
    }

    bool is_zero() const noexcept { return scale_ == 0; }
    bool is_one() const { return scale_ == 1 && num_.degree() == 0 && den_.degree() == 0; }
    bool is_constant() const noexcept { return num_.degree() == 0 && den_.degree() == 0; }

    /// Value of a constant element; throws std::logic_error otherwise.
    const Rational& constant_value() const {
        if (!is_constant()) throw std::logic_error("FieldElem is not a constant");
        return scale_;
    }

    QPoly numerator() const { return to_qpoly(num_) * scale_; }
    QPoly denominator() const { return to_qpoly(den_); }

    const Rational& scale() const noexcept { return scale_; }
    const ZPoly& primitive_numerator() const noexcept { return num_; }
    const ZPoly& primitive_denominator() const noexcept { return den_; }

    FieldElem operator-() const {
        FieldElem r = *this;
        r.scale_ = -r.scale_;
        return r;
    }

    friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
        if (x.is_zero() || y.is_zero()) return {};
        ZPoly g1 = gcd(x.num_, y.den_);
        ZPoly g2 = gcd(y.num_, x.den_);
        ZPoly num = divexact(x.num_, g1) * divexact(y.num_, g2);
        ZPoly den = divexact(x.den_, g2) * divexact(y.den_, g1);
        return from_parts(x.scale_ * y.scale_, std::move(num), std::move(den));
    }

    friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
        if (x.is_zero()) return y;
        if (y.is_zero()) return x;
        ZPoly g = gcd(x.den_, y.den_);
        ZPoly xd = divexact(x.den_, g);
        ZPoly yd = divexact(y.den_, g);
        // scale_x * num_x * yd + scale_y * num_y * xd over a common integer denominator.
        const Integer& px = x.scale_.get_num();
        const Integer& qx = x.scale_.get_den();
        const Integer& py = y.scale_.get_num();
        const Integer& qy = y.scale_.get_den();
        ZPoly m = (x.num_ * yd) * Integer(px * qy) + (y.num_ * xd) * Integer(py * qx);
        if (m.is_zero()) return {};
        Integer cm = content(m);
        if (m.leading() < 0) cm = -cm;
        ZPoly pm = divexact(m, cm);
        ZPoly den = x.den_ * yd;
        if (g.degree() > 0) {
            ZPoly h = gcd(pm, g);
            if (h.degree() > 0) {
                pm = divexact(pm, h);
                den = divexact(den, h);
            }
        }
        return from_parts(make_rational(cm, qx * qy), std::move(pm), std::move(den));
    }

    friend FieldElem operator-(const FieldElem& x, const FieldElem& y) { return x + (-y); }

    FieldElem inverse() const {
        if (is_zero()) throw DivisionByZero();
        return from_parts(Rational(1) / scale_, den_, num_);
    }

    friend FieldElem operator/(const FieldElem& x, const FieldElem& y) {
        if (y.is_zero()) throw DivisionByZero();
        return x * y.inverse();
    }

    FieldElem& operator+=(const FieldElem& o) { return *this = *this + o; }
    FieldElem& operator-=(const FieldElem& o) { return *this = *this - o; }
    FieldElem& operator*=(const FieldElem& o) { return *this = *this * o; }
    FieldElem& operator/=(const FieldElem& o) { return *this = *this / o; }

    friend bool operator==(const FieldElem& x, const FieldElem& y) {
        return x.scale_ == y.scale_ && x.num_ == y.num_ && x.den_ == y.den_;
    }

    /// Exact value at q = point; PoleAtPoint if the reduced denominator vanishes there.
    Rational specialize(const Rational& point) const {
        Rational d = den_.eval(Rational(point));
        if (d == 0) throw PoleAtPoint(to_string(point));
        return scale_ * num_.eval(Rational(point)) / d;
    }

private:
    FieldElem(Rational s, ZPoly n, ZPoly d) : scale_(std::move(s)), num_(std::move(n)), den_(std::move(d)) {}

    // Inputs already primitive with positive leading coefficients and coprime.
    static FieldElem from_parts(Rational s, ZPoly n, ZPoly d) {
        if (s == 0) return {};
        return FieldElem(std::move(s), std::move(n), std::move(d));
    }

    // Inputs primitive with positive leading coefficients, not necessarily coprime.
    static FieldElem reduce(Rational s, ZPoly n, ZPoly d) {
        if (s == 0) return {};
        ZPoly g = gcd(n, d);
        if (g.degree() > 0) {
            n = divexact(n, g);
            d = divexact(d, g);
        }
        return from_parts(std::move(s), std::move(n), std::move(d));
    }

    Rational scale_;
    ZPoly num_;
    ZPoly den_;
};

inline bool operator!=(const FieldElem& x, const FieldElem& y) { return !(x == y); }

/// x^e for any integer e; x^0 = 1, DivisionByZero for 0^e with e < 0.
inline FieldElem pow_int(const FieldElem& x, long e) {
    if (e == 0) return FieldElem(1);
    if (e < 0) {
        if (x.is_zero()) throw DivisionByZero();
        return pow_int(x.inverse(), -e);
    }
    if (x.is_zero()) return {};
    const auto ue = static_cast<unsigned long>(e);
    return FieldElem::from_zpolys(pow(x.primitive_numerator(), ue), pow(x.primitive_denominator(), ue)) *
           FieldElem(pow_rational(x.scale(), e));
}

/// q^k, with q^(-k) = 1 / q^k.
inline FieldElem q_power(long k) {
    if (k >= 0) return FieldElem::monomial(Rational(1), static_cast<std::size_t>(k));
    return FieldElem::monomial(Rational(1), static_cast<std::size_t>(-k)).inverse();
}

inline Rational specialize(const FieldElem& x, const Rational& point) { return x.specialize(point); }

}  // namespace hankelkit
