#pragma once

#include <cstdlib>
#include <optional>
#include <vector>

#include "matrix.hpp"
#include "presentation.hpp"
#include "rational.hpp"

namespace braidcov {

/// Diagonal of the Smith normal form of an integer matrix: nonnegative values
/// d_1 | d_2 | ... (including zeros for the kernel directions).
inline std::vector<Integer> smith_normal_form(Matrix<Integer> m) {
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<Integer> diag;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // Find a nonzero pivot of minimal absolute value in the submatrix.
        bool found = false;
        std::size_t pi = t, pj = t;
        Integer best;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j) {
                const Integer& v = m.at(i, j);
                if (v == 0) continue;
                Integer a = abs(v);
                if (!found || a < best) {
                    found = true;
                    best = a;
                    pi = i;
                    pj = j;
                }
            }
        if (!found) break;
        for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(pi, j));
        for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, pj));

        // Reduce row and column against the pivot until it divides everything
        // it faces, then clear.
        bool dirty = true;
        while (dirty) {
            dirty = false;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (m.at(i, t) == 0) continue;
                Integer q = m.at(i, t) / m.at(t, t);
                for (std::size_t j = t; j < cols; ++j) m.at(i, j) -= q * m.at(t, j);
                if (m.at(i, t) != 0) {
                    for (std::size_t j = 0; j < cols; ++j) std::swap(m.at(t, j), m.at(i, j));
                    dirty = true;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (m.at(t, j) == 0) continue;
                Integer q = m.at(t, j) / m.at(t, t);
                for (std::size_t i = t; i < rows; ++i) m.at(i, j) -= q * m.at(i, t);
                if (m.at(t, j) != 0) {
                    for (std::size_t i = 0; i < rows; ++i) std::swap(m.at(i, t), m.at(i, j));
                    dirty = true;
                }
            }
        }
        ++t;
    }
    for (std::size_t k = 0; k < std::min(rows, cols); ++k) diag.push_back(abs(m.at(k, k)));
    // Enforce the divisibility chain d_i | d_{i+1} by gcd/lcm exchanges.
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
        for (std::size_t j = i + 1; j < diag.size(); ++j) {
            if (diag[i] == 0 && diag[j] != 0) std::swap(diag[i], diag[j]);
            if (diag[i] == 0 || diag[j] == 0) continue;
            if (diag[j] % diag[i] != 0) {
                Integer g = gcd(diag[i], diag[j]);
                diag[j] = diag[i] / g * diag[j];
                diag[i] = g;
            }
        }
    }
    return diag;
}

/// Invariants of the abelianized group: torsion elementary divisors
/// d_1 | d_2 | ... (each >= 2) and the free rank.
struct AbelianInvariants {
    std::vector<Integer> torsion;
    std::size_t rank = 0;

    /// Order of the abelianization; empty when infinite (rank > 0).
    std::optional<Integer> order() const {
        if (rank > 0) return std::nullopt;
        Integer o(1);
        for (const auto& d : torsion) o *= d;
        return o;
    }
    bool certifies_infinite() const { return rank > 0; }
};

/// Abelianization via the Smith normal form of the relator exponent-sum
/// matrix. Positive free rank certifies the group infinite; a finite
/// abelianization alone is inconclusive.
inline AbelianInvariants abelianization(const Presentation& p) {
    const std::size_t g = p.num_generators();
    const std::size_t r = p.relators().size();
    AbelianInvariants inv;
    if (r == 0) {
        inv.rank = g;
        return inv;
    }
    Matrix<Integer> m(r, g, Integer(0));
    for (std::size_t i = 0; i < r; ++i)
        for (const Letter& l : p.relators()[i].letters()) m.at(i, l.gen) += l.sign;
    std::vector<Integer> diag = smith_normal_form(std::move(m));
    std::size_t nonzero = 0;
    for (const auto& d : diag)
        if (d != 0) {
            ++nonzero;
            if (d >= 2) inv.torsion.push_back(d);
        }
    inv.rank = g - nonzero;
    return inv;
}

}  // namespace braidcov
