#pragma once

#include <compare>
#include <ostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"
#include "upoly.hpp"

namespace braidcov {

/// Element of the cyclotomic field Q(w), w = exp(2*pi*i/s), stored on the
/// power basis 1, w, ..., w^(phi(s)-1) fully reduced modulo the s-th
/// cyclotomic polynomial. Equality is exact and canonical.
class Cyclotomic {
public:
    explicit Cyclotomic(unsigned s) : s_(s), c_(check_order(s)) {}
    Cyclotomic(unsigned s, const Rational& a) : Cyclotomic(s) {
        if (!a.is_zero()) c_[0] = a;
    }

    /// w^k in Q(w_s).
    static Cyclotomic root_of_unity(unsigned s, long k) {
        long m = k % static_cast<long>(s);
        if (m < 0) m += s;
        Cyclotomic r(s);
        r.assign(UPoly::monomial(static_cast<std::size_t>(m)));
        return r;
    }

    unsigned order() const { return s_; }
    unsigned basis_size() const { return static_cast<unsigned>(c_.size()); }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool is_zero() const {
        for (const auto& a : c_)
            if (!a.is_zero()) return false;
        return true;
    }
    bool is_rational() const {
        for (std::size_t i = 1; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return false;
        return true;
    }
    const Rational& rational_part() const { return c_[0]; }

    friend Cyclotomic operator+(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_field(b);
        Cyclotomic r(a.s_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] + b.c_[i];
        return r;
    }
    friend Cyclotomic operator-(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_field(b);
        Cyclotomic r(a.s_);
        for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = a.c_[i] - b.c_[i];
        return r;
    }
    Cyclotomic operator-() const {
        Cyclotomic r(s_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = -c_[i];
        return r;
    }
    friend Cyclotomic operator*(const Cyclotomic& a, const Cyclotomic& b) {
        a.require_same_field(b);
        Cyclotomic r(a.s_);
        r.assign(a.as_poly() * b.as_poly());
        return r;
    }
    Cyclotomic operator*(const Rational& s) const {
        Cyclotomic r(s_);
        for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i] * s;
        return r;
    }

    /// Multiplicative inverse via extended Euclid against the minimal polynomial.
    Cyclotomic inverse() const {
        if (is_zero()) throw std::domain_error("Cyclotomic: inverse of zero");
        auto [g, u, v] = extended_gcd(as_poly(), cyclotomic_polynomial(s_));
        (void)v;
        if (g.degree() != 0) throw std::logic_error("Cyclotomic: element not invertible");
        Cyclotomic r(s_);
        r.assign(u * (Rational(1) / g.coeff(0)));
        return r;
    }
    friend Cyclotomic operator/(const Cyclotomic& a, const Cyclotomic& b) {
        return a * b.inverse();
    }

    friend bool operator==(const Cyclotomic& a, const Cyclotomic& b) {
        return a.s_ == b.s_ && a.c_ == b.c_;
    }
    friend bool operator!=(const Cyclotomic& a, const Cyclotomic& b) { return !(a == b); }
    /// Lexicographic order on the canonical coefficient vector; used only as a
    /// deterministic total order for dedup containers, no arithmetic meaning.
    friend bool operator<(const Cyclotomic& a, const Cyclotomic& b) {
        if (a.s_ != b.s_) return a.s_ < b.s_;
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] != b.c_[i]) return a.c_[i] < b.c_[i];
        }
        return false;
    }

    std::string str() const {
        std::string out;
        bool first = true;
        for (std::size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            if (!first) out += " + ";
            out += c_[i].str();
            if (i > 0) out += "*w^" + std::to_string(i);
            first = false;
        }
        return first ? "0" : out;
    }
    friend std::ostream& operator<<(std::ostream& os, const Cyclotomic& z) {
        return os << z.str();
    }

private:
    static std::size_t check_order(unsigned s) {
        if (s == 0) throw std::invalid_argument("Cyclotomic: order must be positive");
        return totient(s);
    }
    void require_same_field(const Cyclotomic& o) const {
        if (s_ != o.s_) throw std::invalid_argument("Cyclotomic: mixed field orders");
    }
    UPoly as_poly() const { return UPoly(c_); }
    void assign(const UPoly& p) {
        UPoly r = p.divmod(cyclotomic_polynomial(s_)).second;
        for (std::size_t i = 0; i < c_.size(); ++i) c_[i] = r.coeff(i);
    }

    unsigned s_;
    std::vector<Rational> c_;
};

}  // namespace braidcov
