#pragma once

#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "rational.hpp"

namespace braidcov {

/// Dense univariate polynomial over Q, trailing zeros stripped.
/// Degree of the zero polynomial is -1 by convention.
class UPoly {
public:
    UPoly() = default;
    explicit UPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UPoly zero() { return UPoly(); }
    static UPoly constant(const Rational& a) { return UPoly({a}); }
    /// x^k
    static UPoly monomial(std::size_t k, const Rational& a = Rational(1)) {
        std::vector<Rational> c(k + 1);
        c[k] = a;
        return UPoly(std::move(c));
    }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    const Rational& coeff(std::size_t k) const {
        static const Rational kZero(0);
        return k < c_.size() ? c_[k] : kZero;
    }
    const Rational& leading() const {
        if (is_zero()) throw std::domain_error("UPoly: leading coefficient of zero");
        return c_.back();
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    friend UPoly operator+(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) + b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator-(const UPoly& a, const UPoly& b) {
        std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
        for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeff(i) - b.coeff(i);
        return UPoly(std::move(c));
    }
    friend UPoly operator*(const UPoly& a, const UPoly& b) {
        if (a.is_zero() || b.is_zero()) return UPoly();
        std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i)
            for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
        return UPoly(std::move(c));
    }
    UPoly operator*(const Rational& s) const {
        if (s.is_zero()) return UPoly();
        std::vector<Rational> c(c_);
        for (auto& x : c) x *= s;
        return UPoly(std::move(c));
    }
    friend bool operator==(const UPoly& a, const UPoly& b) { return a.c_ == b.c_; }

    /// Euclidean division: returns (quotient, remainder).
    std::pair<UPoly, UPoly> divmod(const UPoly& d) const {
        if (d.is_zero()) throw std::domain_error("UPoly: division by zero polynomial");
        UPoly r = *this;
        std::vector<Rational> q(degree() >= d.degree() ? degree() - d.degree() + 1 : 0);
        while (!r.is_zero() && r.degree() >= d.degree()) {
            std::size_t shift = r.degree() - d.degree();
            Rational f = r.leading() / d.leading();
            q[shift] = f;
            r = r - d.shifted(shift) * f;
        }
        return {UPoly(std::move(q)), r};
    }

    /// Quotient that is required to be exact; throws if a remainder is left.
    UPoly exact_div(const UPoly& d) const {
        auto [q, r] = divmod(d);
        if (!r.is_zero()) throw std::domain_error("UPoly: division not exact");
        return q;
    }

    UPoly derivative() const {
        if (c_.size() <= 1) return UPoly();
        std::vector<Rational> c(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) c[i - 1] = c_[i] * Rational(static_cast<long>(i));
        return UPoly(std::move(c));
    }

    Rational eval(const Rational& x) const {
        Rational acc(0);
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    UPoly monic() const {
        if (is_zero()) return *this;
        return *this * (Rational(1) / leading());
    }

private:
    UPoly shifted(std::size_t k) const {
        std::vector<Rational> c(c_.size() + k);
        std::copy(c_.begin(), c_.end(), c.begin() + static_cast<long>(k));
        return UPoly(std::move(c));
    }
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }

    std::vector<Rational> c_;
};

inline UPoly gcd(const UPoly& a, const UPoly& b) {
    UPoly x = a, y = b;
    while (!y.is_zero()) {
        UPoly r = x.divmod(y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

/// Extended Euclid: returns (g, u, v) with u*a + v*b = g, g monic.
inline std::tuple<UPoly, UPoly, UPoly> extended_gcd(const UPoly& a, const UPoly& b) {
    UPoly r0 = a, r1 = b;
    UPoly s0 = UPoly::constant(1), s1 = UPoly::zero();
    UPoly t0 = UPoly::zero(), t1 = UPoly::constant(1);
    while (!r1.is_zero()) {
        auto [q, r] = r0.divmod(r1);
        r0 = std::exchange(r1, r);
        s0 = std::exchange(s1, s0 - q * s1);
        t0 = std::exchange(t1, t0 - q * t1);
    }
    if (!r0.is_zero()) {
        Rational inv = Rational(1) / r0.leading();
        r0 = r0 * inv;
        s0 = s0 * inv;
        t0 = t0 * inv;
    }
    return {r0, s0, t0};
}

/// Euler's totient, by trial division (arguments stay tiny here).
inline unsigned totient(unsigned s) {
    unsigned result = s, n = s;
    for (unsigned p = 2; p * p <= n; ++p) {
        if (n % p == 0) {
            result -= result / p;
            while (n % p == 0) n /= p;
        }
    }
    if (n > 1) result -= result / n;
    return result;
}

/// s-th cyclotomic polynomial, by iterated exact division of x^s - 1 by the
/// cyclotomic polynomials of the proper divisors of s.
inline const UPoly& cyclotomic_polynomial(unsigned s) {
    thread_local std::vector<UPoly> cache{UPoly()};  // index 0 unused
    if (s == 0) throw std::invalid_argument("cyclotomic_polynomial: s must be positive");
    for (unsigned k = cache.size(); k <= s; ++k) {
        UPoly xk1 = UPoly::monomial(k) - UPoly::constant(1);
        for (unsigned d = 1; d < k; ++d)
            if (k % d == 0) xk1 = xk1.exact_div(cache[d]);
        cache.push_back(std::move(xk1));
    }
    return cache[s];
}

}  // namespace braidcov
