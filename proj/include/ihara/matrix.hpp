#pragma once

#include <cassert>
#include <cstddef>
#include <vector>

namespace ihara {

/// Dense row-major square matrix.
template <class T>
class SquareMatrix {
public:
    SquareMatrix() = default;
    explicit SquareMatrix(std::size_t dim, const T& fill = T{})
        : dim_(dim), data_(dim * dim, fill) {}

    static SquareMatrix identity(std::size_t dim, const T& one, const T& zero = T{}) {
        SquareMatrix m(dim, zero);
        for (std::size_t i = 0; i < dim; ++i) m(i, i) = one;
        return m;
    }

    [[nodiscard]] std::size_t dim() const noexcept { return dim_; }

    T& operator()(std::size_t i, std::size_t j) {
        assert(i < dim_ && j < dim_);
        return data_[i * dim_ + j];
    }
    const T& operator()(std::size_t i, std::size_t j) const {
        assert(i < dim_ && j < dim_);
        return data_[i * dim_ + j];
    }

    void swap_rows(std::size_t a, std::size_t b) {
        if (a == b) return;
        for (std::size_t j = 0; j < dim_; ++j) std::swap((*this)(a, j), (*this)(b, j));
    }

    [[nodiscard]] SquareMatrix transposed() const {
        SquareMatrix t(dim_);
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j) t(j, i) = (*this)(i, j);
        return t;
    }

    /// Principal submatrix obtained by deleting row and column `k`.
    [[nodiscard]] SquareMatrix minor_without(std::size_t k) const {
        SquareMatrix m(dim_ - 1);
        for (std::size_t i = 0, mi = 0; i < dim_; ++i) {
            if (i == k) continue;
            for (std::size_t j = 0, mj = 0; j < dim_; ++j) {
                if (j == k) continue;
                m(mi, mj++) = (*this)(i, j);
            }
            ++mi;
        }
        return m;
    }

    bool operator==(const SquareMatrix&) const = default;

private:
    std::size_t dim_ = 0;
    std::vector<T> data_;
};

} // namespace ihara
