#pragma once

#include <cstddef>
#include <vector>

#include "hankelkit/error.hpp"

namespace hankelkit {

/// Dense n x n matrix, row-major.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t n) : n_(n), a_(n * n) {}
    SquareMatrix(std::size_t n, std::vector<T> entries) : n_(n), a_(std::move(entries)) {
        if (a_.size() != n * n) throw UsageError("SquareMatrix: entry count is not n*n");
    }

    static SquareMatrix identity(std::size_t n) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
        return m;
    }

    template <class F>
    static SquareMatrix generate(std::size_t n, F&& f) {
        SquareMatrix m(n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m(i, j) = f(i, j);
        return m;
    }

    std::size_t size() const noexcept { return n_; }

    T& operator()(std::size_t i, std::size_t j) { return a_[i * n_ + j]; }
    const T& operator()(std::size_t i, std::size_t j) const { return a_[i * n_ + j]; }

    const std::vector<T>& entries() const noexcept { return a_; }

    void swap_rows(std::size_t i, std::size_t j) {
        for (std::size_t k = 0; k < n_; ++k) std::swap((*this)(i, k), (*this)(j, k));
    }

    SquareMatrix transpose() const {
        return generate(n_, [this](std::size_t i, std::size_t j) { return (*this)(j, i); });
    }

    friend SquareMatrix operator*(const SquareMatrix& x, const SquareMatrix& y) {
        if (x.n_ != y.n_) throw UsageError("SquareMatrix: dimension mismatch");
        SquareMatrix r(x.n_);
        for (std::size_t i = 0; i < x.n_; ++i)
            for (std::size_t j = 0; j < x.n_; ++j) {
                T acc(0);
                for (std::size_t k = 0; k < x.n_; ++k) acc += x(i, k) * y(k, j);
                r(i, j) = acc;
            }
        return r;
    }

    friend bool operator==(const SquareMatrix& x, const SquareMatrix& y) { return x.n_ == y.n_ && x.a_ == y.a_; }

private:
    std::size_t n_ = 0;
    std::vector<T> a_;
};

}  // namespace hankelkit
