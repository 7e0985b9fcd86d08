#pragma once

#include <stdexcept>
#include <vector>

#include "homogeneous.hpp"
#include "matrix.hpp"
#include "projective.hpp"
#include "rational.hpp"
#include "ring.hpp"

namespace braidcov {

inline Rational scale_by_rational(const Rational& v, const Rational& s) { return v * s; }
inline Cyclotomic scale_by_rational(const Cyclotomic& v, const Rational& s) { return v * s; }
inline HomogeneousPoly scale_by_rational(const HomogeneousPoly& v, const Rational& s) {
    return v.scaled(s);
}

/// All homogeneous elementary symmetric values sigma_0..sigma_n of n points
/// of P^1 with their fixed coordinate representatives [x_i : y_i]:
///   sigma_j = sum over j-subsets A of prod_{a in A} x_a * prod_{b not in A} y_b,
/// computed as the coefficient vector of prod_i (y_i + x_i t).
template <typename T>
std::vector<T> elementary_symmetric_all(const std::vector<ProjectivePointT<T>>& points) {
    if (points.empty()) throw std::invalid_argument("elementary_symmetric: no points");
    for (const auto& p : points)
        if (p.coords().size() != 2)
            throw std::invalid_argument("elementary_symmetric: point not in P^1");
    std::vector<T> sigma{points[0][1], points[0][0]};
    for (std::size_t i = 1; i < points.size(); ++i) {
        const T& x = points[i][0];
        const T& y = points[i][1];
        std::vector<T> next;
        next.reserve(sigma.size() + 1);
        next.push_back(sigma[0] * y);
        for (std::size_t k = 1; k < sigma.size(); ++k)
            next.push_back(sigma[k] * y + sigma[k - 1] * x);
        next.push_back(sigma.back() * x);
        sigma = std::move(next);
    }
    return sigma;
}

template <typename T>
T elementary_symmetric(std::size_t j, const std::vector<ProjectivePointT<T>>& points) {
    if (j > points.size()) throw std::out_of_range("elementary_symmetric: index out of range");
    return elementary_symmetric_all(points)[j];
}

/// Binary form of degree n: coefficient c_j of A^j B^(n-j), j = 0..n, over an
/// exact coefficient ring (rationals, or polynomials for symbolic work).
template <typename T>
class BinaryFormT {
public:
    explicit BinaryFormT(std::vector<T> coeffs) : c_(std::move(coeffs)) {
        if (c_.empty()) throw std::invalid_argument("BinaryForm: empty coefficient vector");
    }

    unsigned degree() const { return static_cast<unsigned>(c_.size()) - 1; }
    const T& coeff(std::size_t j) const { return c_.at(j); }
    const std::vector<T>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& c : c_)
            if (!RingTraits<T>::is_zero(c)) return false;
        return true;
    }

    /// prod_i (u_i A - v_i B) for points p_i = [u_i : v_i]. By the Vieta
    /// identity the coefficient of A^j B^(n-j) is (-1)^(n-j) sigma_j.
    static BinaryFormT from_roots(const std::vector<ProjectivePointT<T>>& points) {
        if (points.empty()) throw std::invalid_argument("BinaryForm: no roots given");
        for (const auto& p : points)
            if (p.coords().size() != 2)
                throw std::invalid_argument("BinaryForm: root not in P^1");
        std::vector<T> c{-points[0][1], points[0][0]};
        for (std::size_t i = 1; i < points.size(); ++i) {
            const T& u = points[i][0];
            const T minus_v = -points[i][1];
            std::vector<T> next;
            next.reserve(c.size() + 1);
            next.push_back(c[0] * minus_v);
            for (std::size_t k = 1; k < c.size(); ++k) next.push_back(c[k] * minus_v + c[k - 1] * u);
            next.push_back(c.back() * u);
            c = std::move(next);
        }
        return BinaryFormT(std::move(c));
    }

    BinaryFormT derivative_A() const {
        if (degree() == 0) throw std::domain_error("BinaryForm: derivative of a constant");
        std::vector<T> d;
        d.reserve(c_.size() - 1);
        for (std::size_t j = 1; j < c_.size(); ++j)
            d.push_back(scale_by_rational(c_[j], Rational(static_cast<long>(j))));
        return BinaryFormT(std::move(d));
    }
    BinaryFormT derivative_B() const {
        if (degree() == 0) throw std::domain_error("BinaryForm: derivative of a constant");
        const std::size_t n = degree();
        std::vector<T> d;
        d.reserve(n);
        for (std::size_t j = 0; j < n; ++j)
            d.push_back(scale_by_rational(c_[j], Rational(static_cast<long>(n - j))));
        return BinaryFormT(std::move(d));
    }

    T eval(const T& a, const T& b) const {
        const std::size_t n = degree();
        T acc = c_[0];
        for (std::size_t k = 0; k < n; ++k) acc = acc * b;
        for (std::size_t j = 1; j <= n; ++j) {
            T t = c_[j];
            for (std::size_t k = 0; k < j; ++k) t = t * a;
            for (std::size_t k = 0; k < n - j; ++k) t = t * b;
            acc = acc + t;
        }
        return acc;
    }

    friend bool operator==(const BinaryFormT& a, const BinaryFormT& b) { return a.c_ == b.c_; }

private:
    std::vector<T> c_;
};

using BinaryForm = BinaryFormT<Rational>;

/// Sylvester resultant of two binary forms of their formal degrees, computed
/// by fraction-free elimination; multiplicative in each argument. With
/// f-rows first, res(uA - vB, u'A - v'B) = u' v - u v'.
template <ExactRing T>
T resultant(const BinaryFormT<T>& f, const BinaryFormT<T>& g) {
    if (f.is_zero() || g.is_zero()) throw std::invalid_argument("resultant: zero polynomial");
    const std::size_t m = f.degree();
    const std::size_t n = g.degree();
    if (m == 0 || n == 0) {
        // res(c, g) = c^deg(g) and res(f, c) = c^deg(f).
        const T& c = (m == 0) ? f.coeff(0) : g.coeff(0);
        const std::size_t e = (m == 0) ? n : m;
        if (e == 0) return RingTraits<T>::one();
        T acc = c;
        for (std::size_t k = 1; k < e; ++k) acc = acc * c;
        return acc;
    }
    const std::size_t size = m + n;
    const T zero = f.coeff(0) - f.coeff(0);
    Matrix<T> syl(size, size, zero);
    // Rows carry coefficients in descending A-powers: (c_m, c_{m-1}, ..., c_0).
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t j = 0; j <= m; ++j) syl.at(r, r + j) = f.coeff(m - j);
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t j = 0; j <= n; ++j) syl.at(n + r, r + j) = g.coeff(n - j);
    return determinant(std::move(syl));
}

/// Discriminant of a binary form P of degree n >= 2, normalized so that the
/// quadratic aA^2 + bAB + cB^2 yields exactly b^2 - 4ac and, in general,
/// disc(prod (u_i A - v_i B)) = prod_{i<j} (u_i v_j - u_j v_i)^2:
///   disc(P) = (-1)^(n(n-1)/2) * res(P_A, P_B) / n^(n-2).
/// Zero exactly when P has a repeated linear factor.
template <ExactRing T>
T discriminant(const BinaryFormT<T>& form) {
    const unsigned n = form.degree();
    if (n < 2) throw std::invalid_argument("discriminant: degree must be at least 2");
    T res = resultant(form.derivative_A(), form.derivative_B());
    const int sign = (static_cast<unsigned long>(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    const Rational scale(Integer(sign), ipow(Integer(n), n - 2));
    return scale_by_rational(res, scale);
}

}  // namespace braidcov
