#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include "braidcov/geometry.hpp"
#include "braidcov/sampling.hpp"

using namespace braidcov;

namespace {

// Independent oracle for D_n: the classical univariate route
// disc(f) = (-1)^(n(n-1)/2) res(f, df/dA) / lc(f) for f = P(A, 1).
HomogeneousPoly disc_univariate_oracle(unsigned n) {
    std::vector<HomogeneousPoly> coeff;
    for (unsigned j = 0; j <= n; ++j) {
        Rational sign = (n - j) % 2 == 1 ? Rational(-1) : Rational(1);
        coeff.push_back(HomogeneousPoly::variable(n + 1, j, sign));
    }
    BinaryFormT<HomogeneousPoly> f(coeff);
    HomogeneousPoly res = resultant(f, f.derivative_A());
    HomogeneousPoly q = res.exact_div(HomogeneousPoly::variable(n + 1, n));
    const int sign = (static_cast<unsigned long>(n) * (n - 1) / 2) % 2 == 0 ? 1 : -1;
    return q.scaled(Rational(sign));
}

ProjectivePoint eval_params(const StratumParams& sp, const MarkedPoints& qs) {
    return parametrize_stratum(sp, qs);
}

}  // namespace

TEST_CASE("symmetric map: examples and permutation invariance", "[geometry]") {
    auto p = symmetric_map({p1_point(1, 1), p1_point(2, 1)});
    CHECK(p == ProjectivePoint({Rational(1), Rational(3), Rational(2)}));

    Sampler s(101);
    for (unsigned n = 2; n <= 5; ++n) {
        for (int iter = 0; iter < 20; ++iter) {
            auto pts = s.p1_tuple(n);
            auto image = symmetric_map(pts);
            auto perm = pts;
            std::reverse(perm.begin(), perm.end());
            CHECK(symmetric_map(perm) == image);
            if (n >= 3) {
                std::swap(perm[0], perm[1]);
                CHECK(symmetric_map(perm) == image);
            }
        }
    }
}

TEST_CASE("doubled point lands on the quadric discriminant", "[geometry]") {
    Sampler s(102);
    auto d2 = discriminant_hypersurface(2);
    for (int iter = 0; iter < 20; ++iter) {
        auto p = s.p1();
        auto image = symmetric_map({p, p});
        // [v^2 : 2uv : u^2]
        CHECK(image == ProjectivePoint({p[1] * p[1], Rational(2) * p[0] * p[1], p[0] * p[0]}));
        CHECK(d2.contains(image));
    }
}

TEST_CASE("coincident point detection", "[geometry]") {
    CHECK(has_coincident_points({p1_point(1, 1), p1_point(2, 2)}));
    CHECK(!has_coincident_points({p1_point(1, 0), p1_point(0, 1)}));
    CHECK_THROWS(has_coincident_points({p1_point(1, 0)}));
}

TEST_CASE("diagonal detection agrees with discriminant vanishing", "[geometry][property]") {
    Sampler s(103);
    for (unsigned n = 2; n <= 5; ++n) {
        auto dn = discriminant_hypersurface(n);
        for (int iter = 0; iter < 500; ++iter) {
            // Mix fresh tuples with forced repeats so both sides occur.
            auto pts = s.p1_tuple(n);
            if (iter % 3 == 0) pts[static_cast<std::size_t>(s.integer(1, n - 1))] = pts[0];
            CHECK(dn.contains(symmetric_map(pts)) == has_coincident_points(pts));
        }
    }
}

TEST_CASE("coordinate power map", "[geometry]") {
    ProjectivePoint p({Rational(1), Rational(2), Rational(3)});
    CHECK(p.power_map(1) == p);
    CHECK(p.power_map(2) == ProjectivePoint({Rational(1), Rational(4), Rational(9)}));
    Sampler s(104);
    for (int iter = 0; iter < 20; ++iter) {
        ProjectivePoint q({s.nonzero_rational(), s.rational(), s.rational()});
        CHECK(q.power_map(2).power_map(3) == q.power_map(6));
    }
}

TEST_CASE("marked hyperplanes", "[geometry]") {
    auto h = marked_hyperplane(p1_point(1, 0), 2);
    CHECK(h.poly == HomogeneousPoly::variable(3, 0));
    auto h2 = marked_hyperplane(p1_point(0, 1), 2);
    CHECK(h2.poly == HomogeneousPoly::variable(3, 2));

    // H_q vanishes at the image of every tuple containing q.
    Sampler s(105);
    for (unsigned n = 2; n <= 5; ++n) {
        for (int iter = 0; iter < 20; ++iter) {
            auto q = s.p1();
            auto pts = s.p1_tuple(n - 1);
            pts.insert(pts.begin() + static_cast<long>(s.integer(0, static_cast<long>(n) - 1)), q);
            CHECK(marked_hyperplane(q, n).contains(symmetric_map(pts)));
        }
    }
}

TEST_CASE("Vandermonde matrix rows are hyperplane coefficient vectors", "[geometry]") {
    // n = 1: determinant x1 y0 - x0 y1, zero exactly for equal points.
    MarkedPoints pair({p1_point(2, 3), p1_point(5, 7)});
    auto van1 = vandermonde_matrix(pair);
    CHECK(determinant(van1) == Rational(5) * Rational(3) - Rational(2) * Rational(7));

    Sampler s(106);
    for (unsigned n = 2; n <= 4; ++n) {
        MarkedPoints qs(s.distinct_p1_tuple(n + 1));
        auto van = vandermonde_matrix(qs);
        CHECK(!determinant(van).is_zero());
        for (unsigned i = 0; i <= n; ++i) {
            auto h = marked_hyperplane(qs[i], n);
            for (unsigned j = 0; j <= n; ++j) {
                ExponentVec e(n + 1, 0);
                e[j] = 1;
                auto it = h.poly.terms().find(e);
                Rational c = it == h.poly.terms().end() ? Rational(0) : it->second;
                CHECK(van.at(i, j) == c);
            }
        }
    }
}

TEST_CASE("hyperplanes of distinct points are in general position", "[geometry][property]") {
    Sampler s(107);
    for (unsigned n = 1; n <= 4; ++n) {
        for (int iter = 0; iter < 10; ++iter) {
            MarkedPoints qs(s.distinct_p1_tuple(n + 1));
            CHECK(!determinant(vandermonde_matrix(qs)).is_zero());
        }
    }
}

TEST_CASE("discriminant hypersurface: quadric, degrees, and the univariate oracle",
          "[geometry]") {
    auto d2 = discriminant_hypersurface(2);
    HomogeneousPoly expected(3, 2);
    expected.add_term({0, 2, 0}, Rational(1));
    expected.add_term({1, 0, 1}, Rational(-4));
    CHECK(d2.poly.proportional_to(expected));

    for (unsigned n = 2; n <= 5; ++n) CHECK(discriminant_hypersurface(n).degree() == 2 * (n - 1));
    CHECK_THROWS(discriminant_hypersurface(1));

    // Dual route: the univariate resultant normalization gives the same form.
    for (unsigned n = 2; n <= 4; ++n)
        CHECK(discriminant_hypersurface(n).poly == disc_univariate_oracle(n));
}

TEST_CASE("frame change: incidence preserved, inverse recovers the form", "[geometry]") {
    Sampler s(108);
    for (unsigned n = 2; n <= 3; ++n) {
        MarkedPoints qs(s.distinct_p1_tuple(n + 1));
        auto dn = discriminant_hypersurface(n);
        auto dn_y = to_marked_frame(dn, qs);
        CHECK(dn_y.frame == Frame::Y);
        CHECK(dn_y.degree() == dn.degree());

        auto van = vandermonde_matrix(qs);
        for (int iter = 0; iter < 25; ++iter) {
            std::vector<Rational> x;
            for (unsigned i = 0; i <= n; ++i) x.push_back(s.rational());
            if (std::all_of(x.begin(), x.end(), [](const Rational& r) { return r.is_zero(); }))
                x[0] = Rational(1);
            ProjectivePoint p(x);
            ProjectivePoint vp(van.times(x));
            CHECK(dn.contains(p) == dn_y.contains(vp));
            // Up to the fixed scalar det^deg, the values agree.
            Rational scale = rational_pow(determinant(van), dn.degree());
            CHECK(dn_y.poly.eval(vp.coords()) == dn.poly.eval(p.coords()) * scale);
        }

        // Substituting Y := Van * X back returns the original up to a scalar.
        std::vector<HomogeneousPoly> van_rows;
        for (unsigned i = 0; i <= n; ++i) {
            HomogeneousPoly row(n + 1, 1);
            for (unsigned j = 0; j <= n; ++j) {
                ExponentVec e(n + 1, 0);
                e[j] = 1;
                row.add_term(std::move(e), van.at(i, j));
            }
            van_rows.push_back(std::move(row));
        }
        CHECK(dn_y.poly.substitute(van_rows).proportional_to(dn.poly));
    }

    // n = 1 sanity: marked points [1:0], [0:1] give a signed permutation frame.
    MarkedPoints axes({p1_point(1, 0), p1_point(0, 1)});
    Hypersurface h{HomogeneousPoly::variable(2, 0) + HomogeneousPoly::variable(2, 1), Frame::X};
    auto hy = to_marked_frame(h, axes);
    CHECK(hy.poly.term_count() == 2);
    CHECK(hy.degree() == 1);
}

TEST_CASE("marked points must be distinct", "[geometry]") {
    CHECK_THROWS(MarkedPoints({p1_point(1, 1), p1_point(2, 2), p1_point(0, 1)}));
}

TEST_CASE("power lift degrees", "[geometry]") {
    auto qs2 = default_marked_points(2);
    auto d2y = to_marked_frame(discriminant_hypersurface(2), qs2);
    auto lift1 = power_lift(d2y, 1);
    CHECK(lift1.poly == d2y.poly);
    CHECK(lift1.frame == Frame::Z);
    // n = 2, b = 3 has degree 6: the nine-cuspidal sextic.
    CHECK(power_lift(d2y, 3).degree() == 6);

    for (unsigned n : {2u, 3u}) {
        auto dy = to_marked_frame(discriminant_hypersurface(n), default_marked_points(n));
        for (unsigned b : {2u, 3u, 5u}) CHECK(power_lift(dy, b).degree() == 2 * b * (n - 1));
    }
}

TEST_CASE("stratum parametrization: k = 1 incidence and the Vieta consistency route",
          "[geometry][property]") {
    Sampler s(109);

    // k = 1, n = 3: parametrized points satisfy the Y-frame discriminant.
    {
        MarkedPoints qs(s.distinct_p1_tuple(4));
        auto d3y = to_marked_frame(discriminant_hypersurface(3), qs);
        for (int iter = 0; iter < 100; ++iter) {
            StratumParams sp(3, 1, {}, s.p1());
            CHECK(d3y.contains(eval_params(sp, qs)));
        }
    }

    // Any k: the parametrization equals Van * phi(p_1..p_{k-1}, [u:v]...) exactly.
    for (unsigned n = 2; n <= 4; ++n) {
        MarkedPoints qs(s.distinct_p1_tuple(n + 1));
        auto van = vandermonde_matrix(qs);
        for (unsigned k = 1; k <= n; ++k) {
            for (int iter = 0; iter < 10; ++iter) {
                auto frees = s.p1_tuple(k - 1);
                auto rep = s.p1();
                std::vector<ProjectivePoint> tuple = frees;
                for (unsigned i = 0; i < n - k + 1; ++i) tuple.push_back(rep);
                auto via_phi = van.times(symmetric_map(tuple).coords());
                auto direct = eval_params(StratumParams(n, k, frees, rep), qs);
                for (unsigned j = 0; j <= n; ++j) CHECK(via_phi[j] == direct[j]);
            }
        }
    }
}

TEST_CASE("lifted stratum membership", "[geometry]") {
    auto qs = default_marked_points(2);

    // b = 1 reduces to plain Y-frame membership of the rational normal curve.
    Sampler s(110);
    for (int iter = 0; iter < 25; ++iter) {
        StratumParams sp(2, 1, {}, s.p1());
        CHECK(lifted_stratum_contains(eval_params(sp, qs), 2, 1, 1, qs));
    }

    // psi_2([1 : 25 : 49]) = [1 : 625 : 2401] = parametrized point of [1 : -24].
    ProjectivePoint witness({Rational(1), Rational(25), Rational(49)});
    CHECK(witness.power_map(2) == eval_params(StratumParams(2, 1, {}, p1_point(1, -24)), qs));
    CHECK(lifted_stratum_contains(witness, 2, 1, 2, qs));

    // Random points: membership agrees with the defining polynomial of the
    // lift (for n = 2 the curve is the lifted quartic), and misses do occur.
    auto lifted_quartic = power_lift(to_marked_frame(discriminant_hypersurface(2), qs), 2);
    int misses = 0;
    for (int iter = 0; iter < 50; ++iter) {
        ProjectivePoint z({s.nonzero_rational(), s.rational(), s.nonzero_rational()});
        bool on_curve = lifted_quartic.poly.eval(z.coords()).is_zero();
        CHECK(lifted_stratum_contains(z, 2, 1, 2, qs) == on_curve);
        if (!on_curve) ++misses;
    }
    CHECK(misses > 30);

    // k = n-1 via D_n incidence: z_j = (u - j v) has psi_2(z) on the k = 2
    // stratum of D_3 with free point [1:0].
    auto qs3 = default_marked_points(3);
    for (int iter = 0; iter < 10; ++iter) {
        Rational u = s.nonzero_rational(), v = s.nonzero_rational();
        std::vector<Rational> zc;
        for (long j = 0; j <= 3; ++j) zc.push_back(u - Rational(j) * v);
        if (std::any_of(zc.begin(), zc.end(), [](const Rational& r) { return r.is_zero(); }))
            continue;
        ProjectivePoint z(zc);
        CHECK(z.power_map(2) ==
              eval_params(StratumParams(3, 2, {p1_point(1, 0)}, ProjectivePoint({u, v})), qs3));
        CHECK(lifted_stratum_contains(z, 3, 2, 2, qs3));
    }

    // k = n accepts everything; middle strata have no implicit test.
    CHECK(lifted_stratum_contains(witness, 2, 2, 3, qs));
    CHECK_THROWS(lifted_stratum_contains(
        ProjectivePoint({Rational(1), Rational(1), Rational(1), Rational(1), Rational(1)}), 4, 2,
        1, default_marked_points(4)));
}
