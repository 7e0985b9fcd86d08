#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "binary_form.hpp"
#include "homogeneous.hpp"
#include "matrix.hpp"
#include "projective.hpp"
#include "rational.hpp"

namespace braidcov {

/// Coordinate frame of a hypersurface in P^n. X is the symmetric-function
/// frame (coordinates sigma_0..sigma_n), Y the marked frame obtained by the
/// Vandermonde substitution Y = Van(q_0..q_n) * X, and Z the frame upstairs
/// of the coordinate power covering Y_j = Z_j^b.
enum class Frame { X, Y, Z };

inline std::string frame_name(Frame f) {
    switch (f) {
        case Frame::X: return "X";
        case Frame::Y: return "Y";
        default: return "Z";
    }
}

struct Hypersurface {
    HomogeneousPoly poly;
    Frame frame;

    unsigned degree() const { return poly.degree(); }
    bool contains(const ProjectivePoint& p) const { return poly.eval(p.coords()).is_zero(); }
};

/// m+1 pairwise distinct marked points of P^1.
class MarkedPoints {
public:
    explicit MarkedPoints(std::vector<ProjectivePoint> points) : q_(std::move(points)) {
        for (std::size_t i = 0; i < q_.size(); ++i) {
            if (q_[i].coords().size() != 2)
                throw std::invalid_argument("MarkedPoints: point not in P^1");
            for (std::size_t j = i + 1; j < q_.size(); ++j)
                if (q_[i] == q_[j]) throw std::invalid_argument("MarkedPoints: points not distinct");
        }
    }

    std::size_t size() const { return q_.size(); }
    const ProjectivePoint& operator[](std::size_t i) const { return q_[i]; }
    const std::vector<ProjectivePoint>& points() const { return q_; }

private:
    std::vector<ProjectivePoint> q_;
};

/// Default marked points q_j = [j : 1], j = 0..n: distinct, small, and with a
/// trivially invertible Vandermonde matrix.
inline MarkedPoints default_marked_points(unsigned n) {
    std::vector<ProjectivePoint> q;
    q.reserve(n + 1);
    for (unsigned j = 0; j <= n; ++j) q.push_back(p1_point(static_cast<long>(j), 1));
    return MarkedPoints(std::move(q));
}

/// The symmetric map phi: (P^1)^n -> P^n, p = (p_1..p_n) -> [sigma_0 : ... : sigma_n].
/// Invariant under permutations of the inputs.
inline ProjectivePoint symmetric_map(const std::vector<ProjectivePoint>& points) {
    return ProjectivePoint(elementary_symmetric_all(points));
}

/// True iff some two of the points coincide projectively (the big diagonal).
inline bool has_coincident_points(const std::vector<ProjectivePoint>& points) {
    if (points.size() < 2) throw std::invalid_argument("has_coincident_points: need n >= 2");
    for (std::size_t i = 0; i < points.size(); ++i)
        for (std::size_t j = i + 1; j < points.size(); ++j)
            if (points[i] == points[j]) return true;
    return false;
}

/// The hyperplane H_q < P^n swept by tuples containing q = [x : y]:
///   sum_j (-1)^(n-j) y^j x^(n-j) X_j = 0.
inline Hypersurface marked_hyperplane(const ProjectivePoint& q, unsigned n) {
    if (q.coords().size() != 2) throw std::invalid_argument("marked_hyperplane: q not in P^1");
    if (n == 0) throw std::invalid_argument("marked_hyperplane: n must be positive");
    HomogeneousPoly h(n + 1, 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational c = rational_pow(q[1], j) * rational_pow(q[0], n - j);
        if ((n - j) % 2 == 1) c = -c;
        ExponentVec e(n + 1, 0);
        e[j] = 1;
        h.add_term(std::move(e), c);
    }
    return Hypersurface{std::move(h), Frame::X};
}

/// Projective Vandermonde matrix of n+1 marked points: entry (i, j) is
/// (-1)^(n-j) y_i^j x_i^(n-j), so row i is the coefficient vector of the
/// hyperplane through q_i. Singular exactly when two points coincide.
inline Matrix<Rational> vandermonde_matrix(const MarkedPoints& qs) {
    const std::size_t n = qs.size() - 1;
    Matrix<Rational> van(n + 1, n + 1, Rational(0));
    for (std::size_t i = 0; i <= n; ++i)
        for (std::size_t j = 0; j <= n; ++j) {
            Rational c = rational_pow(qs[i][1], j) * rational_pow(qs[i][0], n - j);
            van.at(i, j) = (n - j) % 2 == 1 ? -c : c;
        }
    return van;
}

/// The discriminant hypersurface D_n < P^n in the X frame: the discriminant
/// of sum_j (-1)^(n-j) X_j A^j B^(n-j) as a polynomial in X_0..X_n. Total
/// degree 2(n-1); vanishes at phi(p_1..p_n) exactly when two p_i coincide.
inline Hypersurface discriminant_hypersurface(unsigned n) {
    if (n < 2) throw std::invalid_argument("discriminant_hypersurface: n must be at least 2");
    std::vector<HomogeneousPoly> coeff;
    coeff.reserve(n + 1);
    for (unsigned j = 0; j <= n; ++j) {
        Rational sign = (n - j) % 2 == 1 ? Rational(-1) : Rational(1);
        coeff.push_back(HomogeneousPoly::variable(n + 1, j, sign));
    }
    BinaryFormT<HomogeneousPoly> generic(std::move(coeff));
    return Hypersurface{discriminant(generic), Frame::X};
}

/// Move an X-frame hypersurface to the marked frame Y = Van(q_0..q_n) * X by
/// substituting X := adj(Van) * Y; same zero locus, with the defining
/// polynomial scaled by det(Van)^deg.
inline Hypersurface to_marked_frame(const Hypersurface& h, const MarkedPoints& qs) {
    if (h.frame != Frame::X) throw std::invalid_argument("to_marked_frame: expected X frame");
    const unsigned n = h.poly.nvars() - 1;
    if (qs.size() != n + 1) throw std::invalid_argument("to_marked_frame: need n+1 marked points");
    Matrix<Rational> adj = adjugate(vandermonde_matrix(qs));
    std::vector<HomogeneousPoly> subs;
    subs.reserve(n + 1);
    for (unsigned i = 0; i <= n; ++i) {
        HomogeneousPoly row(n + 1, 1);
        for (unsigned j = 0; j <= n; ++j) {
            ExponentVec e(n + 1, 0);
            e[j] = 1;
            row.add_term(std::move(e), adj.at(i, j));
        }
        if (row.is_zero()) throw std::invalid_argument("to_marked_frame: singular Vandermonde");
        subs.push_back(std::move(row));
    }
    return Hypersurface{h.poly.substitute(subs), Frame::Y};
}

/// Pull a Y-frame hypersurface back along the power covering Y_j = Z_j^b.
/// Degree multiplies by b; for D_n this is the lifted hypersurface of degree
/// 2b(n-1).
inline Hypersurface power_lift(const Hypersurface& h, unsigned b) {
    if (h.frame != Frame::Y) throw std::invalid_argument("power_lift: expected Y frame");
    return Hypersurface{h.poly.power_substitute(b), Frame::Z};
}

/// Parameters of the k-th diagonal stratum image inside D_n: the free points
/// p_1..p_(k-1) plus the repeated point [u : v] filling positions k..n.
struct StratumParams {
    unsigned n;
    unsigned k;
    std::vector<ProjectivePoint> free_points;  // p_1..p_(k-1)
    ProjectivePoint repeated;                  // [u : v]

    StratumParams(unsigned n_, unsigned k_, std::vector<ProjectivePoint> free_pts,
                  ProjectivePoint rep)
        : n(n_), k(k_), free_points(std::move(free_pts)), repeated(std::move(rep)) {
        if (k < 1 || k > n) throw std::invalid_argument("StratumParams: need 1 <= k <= n");
        if (free_points.size() != k - 1)
            throw std::invalid_argument("StratumParams: expected k-1 free points");
        if (repeated.coords().size() != 2)
            throw std::invalid_argument("StratumParams: repeated point not in P^1");
        for (const auto& p : free_points)
            if (p.coords().size() != 2)
                throw std::invalid_argument("StratumParams: free point not in P^1");
    }
};

/// Y-frame parametrization of the stratum:
///   Y_j = (u y_j - v x_j)^(n-k+1) * prod_i (u_i y_j - v_i x_j).
/// For k = 1 this is the rational normal curve [ (u y_j - v x_j)^n ]_j.
inline ProjectivePoint parametrize_stratum(const StratumParams& sp, const MarkedPoints& qs) {
    if (qs.size() != sp.n + 1)
        throw std::invalid_argument("parametrize_stratum: need n+1 marked points");
    std::vector<Rational> y;
    y.reserve(sp.n + 1);
    for (unsigned j = 0; j <= sp.n; ++j) {
        Rational lin = sp.repeated[0] * qs[j][1] - sp.repeated[1] * qs[j][0];
        Rational val = rational_pow(lin, sp.n - sp.k + 1);
        for (const auto& p : sp.free_points) val *= p[0] * qs[j][1] - p[1] * qs[j][0];
        y.push_back(val);
    }
    return ProjectivePoint(std::move(y));  // throws if all coordinates vanish
}

/// Membership in the rational normal curve D_{n,1} in the Y frame: pull the
/// point back through adj(Van) and test that m_j = x_j / C(n, j) has all 2x2
/// minors of [[m_0..m_{n-1}], [m_1..m_n]] vanishing (those minors cut out the
/// curve exactly).
inline bool rational_normal_curve_contains(const ProjectivePoint& y_point,
                                           const MarkedPoints& qs) {
    const std::size_t n = qs.size() - 1;
    if (y_point.coords().size() != n + 1)
        throw std::invalid_argument("rational_normal_curve_contains: dimension mismatch");
    Matrix<Rational> adj = adjugate(vandermonde_matrix(qs));
    std::vector<Rational> x = adj.times(y_point.coords());
    std::vector<Rational> m;
    m.reserve(n + 1);
    for (std::size_t j = 0; j <= n; ++j) m.push_back(x[j] / Rational(binomial(n, j)));
    for (std::size_t i = 0; i + 1 <= n; ++i)
        for (std::size_t j = i; j + 1 <= n; ++j)
            if (!(m[i] * m[j + 1] - m[i + 1] * m[j]).is_zero()) return false;
    return true;
}

/// Membership test for the lifted stratum in the Z frame: apply the power map
/// and test the Y-frame condition. Supported strata: k = 1 (rational normal
/// curve), k = n-1 (incidence with D_n), k = n (all of P^n).
inline bool lifted_stratum_contains(const ProjectivePoint& z, unsigned n, unsigned k, unsigned b,
                                    const MarkedPoints& qs) {
    if (k < 1 || k > n) throw std::invalid_argument("lifted_stratum_contains: need 1 <= k <= n");
    ProjectivePoint y = z.power_map(b);
    if (k == 1) return rational_normal_curve_contains(y, qs);
    if (k == n) return true;
    if (k == n - 1) return to_marked_frame(discriminant_hypersurface(n), qs).contains(y);
    throw std::invalid_argument(
        "lifted_stratum_contains: no implicit membership test for 1 < k < n-1");
}

}  // namespace braidcov
