#pragma once

/**
 * @file triangle.hpp
 * @brief The three-term recurrence triangles and the maps between them.
 *
 * With Jacobi parameters (s, t):
 *
 *     a(0, k) = [k = 0]
 *     a(n, k) = a(n-1, k-1) + s(k) a(n-1, k) + t(k) a(n-1, k+1)
 *
 * with a(n, k) = 0 outside 0 <= k <= n. Column 0 holds the moments, and
 *
 *     sum_k a(n, k) a(m, k) prod_{j<k} t(j) = a(n + m, 0).
 *
 * When every s(k) vanishes the recurrence is driven by a single sequence T,
 * the odd/even entries decouple, and the even-even subtriangle is again a
 * recurrence triangle for the contracted parameters
 *
 *     s(0) = T(0),  s(n) = T(2n-1) + T(2n),  t(n) = T(2n) T(2n+1).
 */

#include <functional>
#include <limits>
#include <memory>
#include <vector>

#include "hankelkit/field_elem.hpp"

namespace hankelkit {

/// Parameters s(k), t(k) of the three-term recurrence, as tables or callbacks.
class JacobiParams {
public:
    using Fn = std::function<FieldElem(std::size_t)>;
    static constexpr std::size_t unbounded = std::numeric_limits<std::size_t>::max();

    JacobiParams(Fn s, Fn t, std::size_t length = unbounded)
        : s_(std::move(s)), t_(std::move(t)), length_(length) {}

    /// Finite tables; length is the shorter of the two.
    static JacobiParams from_tables(std::vector<FieldElem> s, std::vector<FieldElem> t) {
        const std::size_t len = std::min(s.size(), t.size());
        auto sp = std::make_shared<const std::vector<FieldElem>>(std::move(s));
        auto tp = std::make_shared<const std::vector<FieldElem>>(std::move(t));
        return JacobiParams([sp](std::size_t k) { return sp->at(k); }, [tp](std::size_t k) { return tp->at(k); },
                            len);
    }

    FieldElem s(std::size_t k) const {
        check(k);
        return s_(k);
    }
    FieldElem t(std::size_t k) const {
        check(k);
        return t_(k);
    }
    std::size_t length() const noexcept { return length_; }

    /// Materialized s(0..count-1) and t(0..count-1).
    std::vector<FieldElem> s_values(std::size_t count) const {
        std::vector<FieldElem> v;
        for (std::size_t k = 0; k < count; ++k) v.push_back(s(k));
        return v;
    }
    std::vector<FieldElem> t_values(std::size_t count) const {
        std::vector<FieldElem> v;
        for (std::size_t k = 0; k < count; ++k) v.push_back(t(k));
        return v;
    }

private:
    void check(std::size_t k) const {
        if (k >= length_)
            throw UsageError("Jacobi parameter index " + std::to_string(k) + " beyond supplied length " +
                             std::to_string(length_));
    }

    Fn s_, t_;
    std::size_t length_;
};

/// The sequence T driving the zero-s recurrence.
class TSeq {
public:
    using Fn = std::function<FieldElem(std::size_t)>;

    explicit TSeq(Fn fn, std::size_t length = JacobiParams::unbounded) : fn_(std::move(fn)), length_(length) {}

    static TSeq constant(FieldElem v) {
        return TSeq([v = std::move(v)](std::size_t) { return v; });
    }

    static TSeq from_table(std::vector<FieldElem> values) {
        const std::size_t len = values.size();
        auto p = std::make_shared<const std::vector<FieldElem>>(std::move(values));
        return TSeq([p](std::size_t k) { return p->at(k); }, len);
    }

    FieldElem operator()(std::size_t k) const {
        if (k >= length_)
            throw UsageError("T index " + std::to_string(k) + " beyond supplied length " + std::to_string(length_));
        return fn_(k);
    }
    std::size_t length() const noexcept { return length_; }

private:
    Fn fn_;
    std::size_t length_;
};

/// Lower-triangular table; rows[n] holds entries 0..n.
class Triangle {
public:
    Triangle() = default;
    explicit Triangle(std::vector<std::vector<FieldElem>> rows) : rows_(std::move(rows)) {}

    std::size_t size() const noexcept { return rows_.size(); }
    const std::vector<std::vector<FieldElem>>& rows() const noexcept { return rows_; }
    const std::vector<FieldElem>& row(std::size_t n) const { return rows_.at(n); }

    /// a(n, k), zero outside 0 <= k <= n.
    FieldElem at(std::size_t n, long k) const {
        const auto& r = rows_.at(n);
        if (k < 0 || static_cast<std::size_t>(k) >= r.size()) return {};
        return r[static_cast<std::size_t>(k)];
    }

    std::vector<FieldElem> column0() const {
        std::vector<FieldElem> c;
        for (const auto& r : rows_) c.push_back(r.front());
        return c;
    }

    friend bool operator==(const Triangle& x, const Triangle& y) { return x.rows_ == y.rows_; }

private:
    std::vector<std::vector<FieldElem>> rows_;
};

/// Rows 0..n_max of the recurrence triangle for (s, t).
inline Triangle build_triangle(const JacobiParams& jp, std::size_t n_max) {
    std::vector<std::vector<FieldElem>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({FieldElem(1)});
    std::vector<FieldElem> s_cache, t_cache;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& prev = rows.back();
        if (s_cache.size() < n) s_cache.push_back(jp.s(n - 1));
        if (n >= 2 && t_cache.size() < n - 1) t_cache.push_back(jp.t(n - 2));
        std::vector<FieldElem> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            FieldElem v;
            if (k >= 1) v += prev[k - 1];
            if (k < n) v += s_cache[k] * prev[k];
            if (k + 1 < n) v += t_cache[k] * prev[k + 1];
            row[k] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows));
}

/// Column 0 of the recurrence triangle, a(0,0) .. a(count-1, 0).
///
/// Only the entries that can still reach column 0 by row count-1 are computed,
/// so s(k) and t(k) are needed just for k <= (count - 2) / 2.
inline std::vector<FieldElem> moments_from_jacobi(const JacobiParams& jp, std::size_t count) {
    std::vector<FieldElem> out;
    if (count == 0) return out;
    const std::size_t last = count - 1;
    std::vector<FieldElem> row{FieldElem(1)};
    out.push_back(row[0]);
    for (std::size_t n = 1; n <= last; ++n) {
        // Entries a(n, k) with n + k <= last.
        const std::size_t width = std::min(n, last - n) + 1;
        std::vector<FieldElem> next(width);
        for (std::size_t k = 0; k < width; ++k) {
            FieldElem v;
            if (k >= 1 && k - 1 < row.size()) v += row[k - 1];
            if (k < row.size() && k < n) v += jp.s(k) * row[k];
            if (k + 1 < row.size() && k + 1 < n) v += jp.t(k) * row[k + 1];
            next[k] = std::move(v);
        }
        row = std::move(next);
        out.push_back(row[0]);
    }
    return out;
}

/// Rows 0..n_max of A(n, k) for the zero-s recurrence driven by T.
inline Triangle build_zero_s_triangle(const TSeq& T, std::size_t n_max) {
    std::vector<std::vector<FieldElem>> rows;
    rows.reserve(n_max + 1);
    rows.push_back({FieldElem(1)});
    std::vector<FieldElem> t_cache;
    for (std::size_t n = 1; n <= n_max; ++n) {
        const auto& prev = rows.back();
        if (n >= 2 && t_cache.size() < n - 1) t_cache.push_back(T(n - 2));
        std::vector<FieldElem> row(n + 1);
        for (std::size_t k = 0; k <= n; ++k) {
            if ((n + k) % 2 != 0) continue;
            FieldElem v;
            if (k >= 1) v += prev[k - 1];
            if (k + 1 < n) v += t_cache[k] * prev[k + 1];
            row[k] = std::move(v);
        }
        rows.push_back(std::move(row));
    }
    return Triangle(std::move(rows));
}

/// (s, t) of the even-even subtriangle of the zero-s triangle for T.
inline JacobiParams contract(const TSeq& T) {
    std::size_t len = JacobiParams::unbounded;
    if (T.length() != JacobiParams::unbounded) len = T.length() / 2;
    return JacobiParams(
        [T](std::size_t n) { return n == 0 ? T(0) : T(2 * n - 1) + T(2 * n); },
        [T](std::size_t n) { return T(2 * n) * T(2 * n + 1); }, len);
}

/// s'(k) = x s(k), t'(k) = x^2 t(k): moments become x^n c(n).
inline JacobiParams rescale(const JacobiParams& jp, const FieldElem& x) {
    const FieldElem x2 = x * x;
    return JacobiParams([jp, x](std::size_t k) { return x * jp.s(k); },
                        [jp, x2](std::size_t k) { return x2 * jp.t(k); }, jp.length());
}

/// sum_k a(n,k) a(m,k) prod_{j<k} t(j).
inline FieldElem cross_sum(const Triangle& tri, const JacobiParams& jp, std::size_t n, std::size_t m) {
    FieldElem sum;
    FieldElem weight(1);
    const std::size_t kmax = std::min(n, m);
    for (std::size_t k = 0; k <= kmax; ++k) {
        if (k > 0) weight *= jp.t(k - 1);
        sum += tri.at(n, static_cast<long>(k)) * tri.at(m, static_cast<long>(k)) * weight;
    }
    return sum;
}

}  // namespace hankelkit
