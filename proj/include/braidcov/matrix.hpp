#pragma once

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "ring.hpp"

namespace braidcov {

/// Dense rectangular matrix over an exact ring.
template <typename T>
class Matrix {
public:
    Matrix(std::size_t rows, std::size_t cols, const T& fill)
        : rows_(rows), cols_(cols), e_(rows * cols, fill) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    T& at(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const T& at(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    std::vector<T> times(const std::vector<T>& v) const {
        if (v.size() != cols_) throw std::invalid_argument("Matrix: dimension mismatch");
        std::vector<T> out;
        out.reserve(rows_);
        for (std::size_t i = 0; i < rows_; ++i) {
            T acc = at(i, 0) * v[0];
            for (std::size_t j = 1; j < cols_; ++j) acc = acc + at(i, j) * v[j];
            out.push_back(acc);
        }
        return out;
    }

    Matrix minor_matrix(std::size_t row, std::size_t col) const {
        Matrix m(rows_ - 1, cols_ - 1, RingTraits<T>::zero());
        for (std::size_t i = 0, mi = 0; i < rows_; ++i) {
            if (i == row) continue;
            for (std::size_t j = 0, mj = 0; j < cols_; ++j) {
                if (j == col) continue;
                m.at(mi, mj) = at(i, j);
                ++mj;
            }
            ++mi;
        }
        return m;
    }

private:
    std::size_t rows_, cols_;
    std::vector<T> e_;
};

/// Exact determinant by fraction-free (Bareiss) elimination. Intermediate
/// entries are minors of the input, so every division below is exact in the
/// coefficient ring; no fractions appear on integral inputs.
template <ExactRing T>
T determinant(Matrix<T> m) {
    if (!m.is_square()) throw std::invalid_argument("determinant: matrix not square");
    const std::size_t n = m.rows();
    if (n == 0) return RingTraits<T>::one();
    // Additive zero taken from an entry, so rings whose values carry runtime
    // context (cyclotomic field order) stay within one field instance.
    const T ring_zero = m.at(0, 0) - m.at(0, 0);
    bool negate = false;
    T prev = RingTraits<T>::one();
    bool prev_is_one = true;
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (RingTraits<T>::is_zero(m.at(k, k))) {
            std::size_t pivot = k + 1;
            while (pivot < n && RingTraits<T>::is_zero(m.at(pivot, k))) ++pivot;
            if (pivot == n) return ring_zero;
            for (std::size_t j = 0; j < n; ++j) std::swap(m.at(k, j), m.at(pivot, j));
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                T num = m.at(i, j) * m.at(k, k) - m.at(i, k) * m.at(k, j);
                m.at(i, j) = prev_is_one ? num : RingTraits<T>::exact_div(num, prev);
            }
        }
        prev = m.at(k, k);
        prev_is_one = false;
    }
    T det = m.at(n - 1, n - 1);
    return negate ? ring_zero - det : det;
}

/// Adjugate via cofactors: adj(M) * M = det(M) * I. Row/column counts here
/// are tiny (n+1 <= 7), so cofactor minors are fine.
template <ExactRing T>
Matrix<T> adjugate(const Matrix<T>& m) {
    if (!m.is_square()) throw std::invalid_argument("adjugate: matrix not square");
    const std::size_t n = m.rows();
    const T ring_zero = m.at(0, 0) - m.at(0, 0);
    Matrix<T> adj(n, n, ring_zero);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            T c = determinant(m.minor_matrix(i, j));
            if ((i + j) % 2 == 1) c = ring_zero - c;
            adj.at(j, i) = c;  // transpose of the cofactor matrix
        }
    }
    return adj;
}

}  // namespace braidcov
