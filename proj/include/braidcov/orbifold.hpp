#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rational.hpp"

namespace braidcov {

/// A branching weight: a positive integer or infinity. Infinite weight means
/// the marked point is removed from the base, and contributes 1/inf = 0 to
/// every reciprocal sum.
class Weight {
public:
    Weight(unsigned long v) : finite_(true), v_(v) {
        if (v == 0) throw std::invalid_argument("Weight: must be positive");
    }
    static Weight infinity() {
        Weight w;
        return w;
    }

    bool is_finite() const { return finite_; }
    unsigned long value() const {
        if (!finite_) throw std::domain_error("Weight: infinite");
        return v_;
    }
    Rational reciprocal() const {
        return finite_ ? Rational(1, static_cast<long>(v_)) : Rational(0);
    }

    friend bool operator==(const Weight& a, const Weight& b) {
        return a.finite_ == b.finite_ && (!a.finite_ || a.v_ == b.v_);
    }
    friend bool operator!=(const Weight& a, const Weight& b) { return !(a == b); }

    std::string str() const { return finite_ ? std::to_string(v_) : "inf"; }

private:
    Weight() : finite_(false), v_(0) {}
    bool finite_;
    unsigned long v_;
};

inline Weight w_inf() { return Weight::infinity(); }

/// Branch weights attached to marked points of P^1; each weight is at least 2
/// or infinite. The empty signature is the unmarked sphere.
class OrbifoldSignature {
public:
    OrbifoldSignature() = default;
    explicit OrbifoldSignature(std::vector<Weight> ws) : w_(std::move(ws)) {
        for (const auto& w : w_)
            if (w.is_finite() && w.value() < 2)
                throw std::invalid_argument("OrbifoldSignature: weights must be >= 2 or inf");
    }

    std::size_t size() const { return w_.size(); }
    const std::vector<Weight>& weights() const { return w_; }
    const Weight& operator[](std::size_t i) const { return w_[i]; }

private:
    std::vector<Weight> w_;
};

/// Orbifold Euler characteristic of (P^1, weights): 2 - sum_i (1 - 1/b_i).
inline Rational orbifold_euler_char(const OrbifoldSignature& sig) {
    Rational chi(2);
    for (const auto& w : sig.weights()) chi -= Rational(1) - w.reciprocal();
    return chi;
}

enum class UniformizationType { SPHERE, EUCLIDEAN, HYPERBOLIC, BAD };

inline std::string uniformization_name(UniformizationType t) {
    switch (t) {
        case UniformizationType::SPHERE: return "SPHERE";
        case UniformizationType::EUCLIDEAN: return "EUCLIDEAN";
        case UniformizationType::HYPERBOLIC: return "HYPERBOLIC";
        default: return "BAD";
    }
}

/// Classify the uniformization of (P^1, weights). One or two marked points
/// only uniformize in the equal-weight case (b, b) -> sphere; the unequal and
/// single-point signatures are BAD. (inf, inf) and (2, 2, inf) are uniformized
/// by the plane; with three or more marked points the type follows the sign
/// of the orbifold Euler characteristic.
inline UniformizationType classify_orbifold(const OrbifoldSignature& sig) {
    const std::size_t n = sig.size();
    if (n == 0) return UniformizationType::SPHERE;
    if (n == 1) return UniformizationType::BAD;
    if (n == 2) {
        const Weight& a = sig[0];
        const Weight& b = sig[1];
        if (!a.is_finite() && !b.is_finite()) return UniformizationType::EUCLIDEAN;
        if (a.is_finite() && b.is_finite() && a == b) return UniformizationType::SPHERE;
        return UniformizationType::BAD;
    }
    const Rational chi = orbifold_euler_char(sig);
    if (chi > Rational(0)) return UniformizationType::SPHERE;
    if (chi.is_zero()) return UniformizationType::EUCLIDEAN;
    return UniformizationType::HYPERBOLIC;
}

/// Order of the triangle rotation group of weights (b0, b1, b2):
/// 2 * [1/b0 + 1/b1 + 1/b2 - 1]^(-1) in the spherical case, infinite otherwise.
inline std::optional<Integer> triangle_group_order(const Weight& b0, const Weight& b1,
                                                   const Weight& b2) {
    for (const Weight& w : {b0, b1, b2})
        if (w.is_finite() && w.value() < 2)
            throw std::invalid_argument("triangle_group_order: weights must be >= 2 or inf");
    Rational defect = b0.reciprocal() + b1.reciprocal() + b2.reciprocal() - Rational(1);
    if (!(defect > Rational(0))) return std::nullopt;
    return to_integer(Rational(2) / defect);
}

/// n! * b^n: the braid-group order over the two-equal-weights signature.
inline Integer braid_order_equal_weights(unsigned n, unsigned long b) {
    if (n < 2) throw std::invalid_argument("braid_order_equal_weights: n must be >= 2");
    return factorial(n) * ipow(Integer(static_cast<long>(b)), n);
}

/// n! * 2^n * [1/b0 + 1/b1 + 1/b2 - 1]^(-n) for a spherical triple (the
/// reciprocal reading, which is the one producing integers on spherical
/// inputs); infinite otherwise.
inline std::optional<Integer> braid_order_triple(unsigned n, const Weight& b0, const Weight& b1,
                                                 const Weight& b2) {
    if (n < 2) throw std::invalid_argument("braid_order_triple: n must be >= 2");
    Rational defect = b0.reciprocal() + b1.reciprocal() + b2.reciprocal() - Rational(1);
    if (!(defect > Rational(0))) return std::nullopt;
    Rational order = Rational(factorial(n)) * rational_pow(Rational(2) / defect, n);
    return to_integer(order);
}

inline void require_coprime(unsigned n, unsigned long b, const char* who) {
    if (std::gcd(static_cast<unsigned long>(n), b) != 1)
        throw std::invalid_argument(std::string(who) + ": n and b must be coprime");
}

/// Closed-form Euler number of the lifted curve: b^(n-1) * (n+1+b-nb).
inline Integer lifted_curve_euler(unsigned n, unsigned long b) {
    if (n < 2) throw std::invalid_argument("lifted_curve_euler: n must be >= 2");
    require_coprime(n, b, "lifted_curve_euler");
    Integer bn1 = ipow(Integer(static_cast<long>(b)), n - 1);
    Integer lin = Integer(n) + 1 + Integer(static_cast<long>(b)) -
                  Integer(n) * Integer(static_cast<long>(b));
    return bn1 * lin;
}

/// Independent Riemann-Hurwitz computation of the same Euler number: the
/// curve is the maximal abelian cover of P^1 branched at n+1 points with
/// index b, of degree d = b^n, so e = d * (2 - (n+1)) + (n+1) * d / b.
inline Integer lifted_curve_euler_riemann_hurwitz(unsigned n, unsigned long b) {
    if (n < 2)
        throw std::invalid_argument("lifted_curve_euler_riemann_hurwitz: n must be >= 2");
    require_coprime(n, b, "lifted_curve_euler_riemann_hurwitz");
    Integer d = ipow(Integer(static_cast<long>(b)), n);
    Integer points(n + 1);
    return d * (Integer(2) - points) + points * (d / Integer(static_cast<long>(b)));
}

/// Degree of the Galois covering (curve)^n -> P^n: assembled from the three
/// component degrees b^(n^2) * n! / b^n and asserted equal to n! * b^(n^2-n).
inline Integer galois_covering_degree(unsigned n, unsigned long b) {
    if (n < 2) throw std::invalid_argument("galois_covering_degree: n must be >= 2");
    require_coprime(n, b, "galois_covering_degree");
    Integer bb(static_cast<long>(b));
    Integer via_components = ipow(bb, n * n) * factorial(n) / ipow(bb, n);
    Integer closed_form = factorial(n) * ipow(bb, n * n - n);
    if (via_components != closed_form)
        throw std::logic_error("galois_covering_degree: component degrees disagree");
    return closed_form;
}

enum class UniversalCover { P1_POWER, PLANE_POWER, BALL_POWER };

inline std::string universal_cover_name(UniversalCover c) {
    switch (c) {
        case UniversalCover::P1_POWER: return "(P1)^n";
        case UniversalCover::PLANE_POWER: return "C^n";
        default: return "(B1)^n";
    }
}

/// Universal cover of the n-fold product of the lifted curve: (P1)^n for
/// b = 1, C^n for (n,b) in {(3,2), (2,3)}, (B1)^n otherwise; checked for
/// consistency against the sign of the Euler number.
inline UniversalCover universal_cover(unsigned n, unsigned long b) {
    require_coprime(n, b, "universal_cover");
    UniversalCover label;
    if (b == 1)
        label = UniversalCover::P1_POWER;
    else if ((n == 3 && b == 2) || (n == 2 && b == 3))
        label = UniversalCover::PLANE_POWER;
    else
        label = UniversalCover::BALL_POWER;
    const Integer e = lifted_curve_euler(n, b);
    const bool ok = (label == UniversalCover::P1_POWER && e > 0) ||
                    (label == UniversalCover::PLANE_POWER && e == 0) ||
                    (label == UniversalCover::BALL_POWER && e < 0);
    if (!ok) throw std::logic_error("universal_cover: label inconsistent with Euler number");
    return label;
}

/// Everything the euler subcommand reports for one (n, b).
struct EulerReport {
    unsigned n;
    unsigned long b;
    Integer euler;
    Integer covering_degree;
    UniversalCover cover;
};

inline EulerReport make_euler_report(unsigned n, unsigned long b) {
    return EulerReport{n, b, lifted_curve_euler(n, b), galois_covering_degree(n, b),
                       universal_cover(n, b)};
}

/// Finiteness margin of the braid group over (a; b_0..b_m):
///   2(n-1)/a + sum_i 1/b_i - (n + m - 2).
/// Positive marks the conjecturally finite range, zero the solvable boundary,
/// negative the big range.
inline Rational finiteness_margin(unsigned n, const Weight& a, const std::vector<Weight>& bs) {
    if (n < 2) throw std::invalid_argument("finiteness_margin: n must be >= 2");
    Rational margin = Rational(2 * (static_cast<long>(n) - 1)) * a.reciprocal();
    for (const auto& w : bs) margin += w.reciprocal();
    margin -= Rational(static_cast<long>(n) + static_cast<long>(bs.size()) - 3);
    return margin;
}

}  // namespace braidcov
