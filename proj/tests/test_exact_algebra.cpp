#include <catch2/catch_amalgamated.hpp>

#include <vector>

#include "braidcov/binary_form.hpp"
#include "braidcov/homogeneous.hpp"
#include "braidcov/matrix.hpp"
#include "braidcov/sampling.hpp"
#include "braidcov/upoly.hpp"

using namespace braidcov;

namespace {

// Independent oracle: sigma_j by explicit subset enumeration.
Rational sigma_bruteforce(std::size_t j, const std::vector<ProjectivePoint>& pts) {
    const std::size_t n = pts.size();
    Rational total(0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        if (static_cast<std::size_t>(__builtin_popcountll(mask)) != j) continue;
        Rational term(1);
        for (std::size_t i = 0; i < n; ++i) term *= (mask >> i & 1) ? pts[i][0] : pts[i][1];
        total += term;
    }
    return total;
}

// Independent oracle: determinant by cofactor expansion along the first row.
Rational det_cofactor(const Matrix<Rational>& m) {
    if (m.rows() == 1) return m.at(0, 0);
    Rational acc(0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        Rational c = m.at(0, j) * det_cofactor(m.minor_matrix(0, j));
        acc += (j % 2 == 0) ? c : -c;
    }
    return acc;
}

BinaryForm uni(std::vector<long> asc) {
    std::vector<Rational> c;
    for (long v : asc) c.emplace_back(v);
    return BinaryForm(std::move(c));
}

}  // namespace

TEST_CASE("elementary symmetric values match their definition", "[exact_algebra]") {
    const std::vector<ProjectivePoint> pts{p1_point(1, 1), p1_point(2, 1)};
    CHECK(elementary_symmetric(0, pts) == Rational(1));
    CHECK(elementary_symmetric(1, pts) == Rational(3));
    CHECK(elementary_symmetric(2, pts) == Rational(2));
    CHECK_THROWS(elementary_symmetric(3, pts));
    CHECK_THROWS(elementary_symmetric(
        0, std::vector<ProjectivePoint>{ProjectivePoint({Rational(1), Rational(1), Rational(1)})}));

    Sampler s(11);
    for (int iter = 0; iter < 30; ++iter) {
        auto pts2 = s.p1_tuple(static_cast<std::size_t>(s.integer(1, 6)));
        auto sigma = elementary_symmetric_all(pts2);
        for (std::size_t j = 0; j < sigma.size(); ++j)
            CHECK(sigma[j] == sigma_bruteforce(j, pts2));
    }
}

TEST_CASE("binary forms from roots expand as expected", "[exact_algebra]") {
    CHECK(BinaryForm::from_roots({p1_point(1, 0)}) ==
          uni({0, 1}));  // the form A
    // (A - B)(2A - B) = 2A^2 - 3AB + B^2: coefficients (c_0, c_1, c_2) = (1, -3, 2).
    CHECK(BinaryForm::from_roots({p1_point(1, 1), p1_point(2, 1)}) == uni({1, -3, 2}));
    CHECK_THROWS(BinaryForm::from_roots({}));
}

TEST_CASE("coefficients of the root form are signed elementary symmetric values",
          "[exact_algebra][property]") {
    Sampler s(12);
    for (int iter = 0; iter < 40; ++iter) {
        auto pts = s.p1_tuple(static_cast<std::size_t>(s.integer(1, 6)));
        const std::size_t n = pts.size();
        auto form = BinaryForm::from_roots(pts);
        auto sigma = elementary_symmetric_all(pts);
        for (std::size_t j = 0; j <= n; ++j) {
            Rational expect = (n - j) % 2 == 0 ? sigma[j] : -sigma[j];
            CHECK(form.coeff(j) == expect);
        }
    }
}

TEST_CASE("the Vieta identity holds symbolically for n <= 6", "[exact_algebra]") {
    // Both sides as polynomials in u_1, v_1, ..., u_n, v_n: the coefficient of
    // A^j B^(n-j) in prod (u_i A - v_i B) equals (-1)^(n-j) sigma_j.
    for (unsigned n = 1; n <= 6; ++n) {
        const unsigned nv = 2 * n;
        std::vector<ProjectivePointT<HomogeneousPoly>> pts;
        for (unsigned i = 0; i < n; ++i)
            pts.push_back(ProjectivePointT<HomogeneousPoly>(
                {HomogeneousPoly::variable(nv, 2 * i), HomogeneousPoly::variable(nv, 2 * i + 1)}));
        auto form = BinaryFormT<HomogeneousPoly>::from_roots(pts);
        auto sigma = elementary_symmetric_all(pts);
        for (unsigned j = 0; j <= n; ++j) {
            HomogeneousPoly expect = (n - j) % 2 == 0 ? sigma[j] : -sigma[j];
            CHECK(form.coeff(j) == expect);
        }
    }
}

TEST_CASE("resultant basics", "[exact_algebra]") {
    // Shared root: res(x^2 - 1, x - 1) = 0.
    CHECK(resultant(uni({-1, 0, 1}), uni({-1, 1})).is_zero());
    // res(x - a, x - b) = a - b in this row-order convention.
    Sampler s(13);
    for (int iter = 0; iter < 10; ++iter) {
        Rational a = s.rational(), b = s.rational();
        CHECK(resultant(BinaryForm({-a, Rational(1)}), BinaryForm({-b, Rational(1)})) == a - b);
    }
    CHECK_THROWS(resultant(uni({0}), uni({1, 1})));
    // Against a constant: res(f, c) = c^deg f.
    CHECK(resultant(uni({1, 1, 1}), uni({5})) == Rational(25));
}

TEST_CASE("resultant is multiplicative, against the split root-product oracle",
          "[exact_algebra][property]") {
    Sampler s(14);
    for (int iter = 0; iter < 25; ++iter) {
        auto fr = s.p1_tuple(static_cast<std::size_t>(s.integer(1, 3)));
        auto hr = s.p1_tuple(static_cast<std::size_t>(s.integer(1, 3)));
        auto gr = s.p1_tuple(static_cast<std::size_t>(s.integer(1, 3)));
        auto f = BinaryForm::from_roots(fr);
        auto h = BinaryForm::from_roots(hr);
        auto g = BinaryForm::from_roots(gr);
        auto fh = BinaryForm::from_roots([&] {
            auto all = fr;
            all.insert(all.end(), hr.begin(), hr.end());
            return all;
        }());
        CHECK(resultant(fh, g) == resultant(f, g) * resultant(h, g));
        // Oracle: for split forms, res(prod(u_iA - v_iB), prod(u'_jA - v'_jB))
        // is the product of the pairwise 2x2 resultants u'_j v_i - u_i v'_j.
        Rational prod(1);
        for (const auto& p : fr)
            for (const auto& q : gr) prod *= q[0] * p[1] - p[0] * q[1];
        CHECK(resultant(f, g) == prod);
    }
}

TEST_CASE("binary discriminant: quadratic case is exactly b^2 - 4ac", "[exact_algebra]") {
    Sampler s(15);
    for (int iter = 0; iter < 25; ++iter) {
        Rational a = s.nonzero_rational(), b = s.rational(), c = s.rational();
        // Coefficient order: c_0 = c (B^2 term), c_1 = b, c_2 = a (A^2 term).
        CHECK(discriminant(BinaryForm({c, b, a})) == b * b - Rational(4) * a * c);
    }
    CHECK_THROWS(discriminant(uni({1, 1})));
}

TEST_CASE("discriminant vanishes exactly on repeated roots and matches the root-difference oracle",
          "[exact_algebra][property]") {
    Sampler s(16);
    for (int iter = 0; iter < 30; ++iter) {
        auto pts = s.p1_tuple(static_cast<std::size_t>(s.integer(2, 6)));
        auto form = BinaryForm::from_roots(pts);
        Rational oracle(1);
        for (std::size_t i = 0; i < pts.size(); ++i)
            for (std::size_t j = i + 1; j < pts.size(); ++j) {
                Rational cross = pts[i][0] * pts[j][1] - pts[j][0] * pts[i][1];
                oracle *= cross * cross;
            }
        CHECK(discriminant(form) == oracle);
    }
    // Repeated root forces zero.
    auto rep = BinaryForm::from_roots({p1_point(3, 2), p1_point(3, 2)});
    CHECK(discriminant(rep).is_zero());
    // Three distinct points give a nonzero discriminant.
    Sampler s2(17);
    for (int iter = 0; iter < 10; ++iter) {
        auto pts = s2.distinct_p1_tuple(3);
        CHECK(!discriminant(BinaryForm::from_roots(pts)).is_zero());
    }
}

TEST_CASE("discriminant zero iff gcd(P(A,1), P_A(A,1)) is nonconstant",
          "[exact_algebra][property]") {
    Sampler s(18);
    for (int iter = 0; iter < 40; ++iter) {
        const std::size_t n = static_cast<std::size_t>(s.integer(2, 6));
        std::vector<Rational> c;
        for (std::size_t j = 0; j <= n; ++j) c.push_back(s.rational());
        if (c.back().is_zero()) c.back() = Rational(1);  // keep the formal degree honest
        BinaryForm form(c);
        UPoly p(c);
        bool disc_zero = discriminant(form).is_zero();
        bool gcd_nonconstant = gcd(p, p.derivative()).degree() > 0;
        CHECK(disc_zero == gcd_nonconstant);
    }
}

TEST_CASE("determinant: examples and the cofactor oracle", "[exact_algebra]") {
    Matrix<Rational> id3(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i) id3.at(i, i) = Rational(1);
    CHECK(determinant(id3) == Rational(1));

    Matrix<Rational> rank1(3, 3, Rational(0));
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = 0; j < 3; ++j) rank1.at(i, j) = Rational(static_cast<long>((i + 1) * (j + 1)));
    CHECK(determinant(rank1).is_zero());

    Matrix<Rational> rect(2, 3, Rational(0));
    CHECK_THROWS(determinant(rect));

    Sampler s(19);
    for (int iter = 0; iter < 20; ++iter) {
        Matrix<Rational> m(4, 4, Rational(0));
        for (std::size_t i = 0; i < 4; ++i)
            for (std::size_t j = 0; j < 4; ++j) m.at(i, j) = s.rational();
        CHECK(determinant(m) == det_cofactor(m));
    }
}

TEST_CASE("adjugate times matrix is det times identity", "[exact_algebra]") {
    Sampler s(20);
    for (int iter = 0; iter < 10; ++iter) {
        const std::size_t n = static_cast<std::size_t>(s.integer(2, 5));
        Matrix<Rational> m(n, n, Rational(0));
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) m.at(i, j) = s.rational();
        Rational det = determinant(m);
        Matrix<Rational> adj = adjugate(m);
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                Rational acc(0);
                for (std::size_t k = 0; k < n; ++k) acc += adj.at(i, k) * m.at(k, j);
                CHECK(acc == (i == j ? det : Rational(0)));
            }
        }
    }
}

TEST_CASE("homogeneous polynomial canonical text form", "[exact_algebra]") {
    HomogeneousPoly p(3, 2);
    p.add_term({0, 2, 0}, Rational(1));
    p.add_term({1, 0, 1}, Rational(-4));
    CHECK(p.str() == "-4 * x0^1 x2^1 + 1 * x1^2");
    CHECK(HomogeneousPoly(3, 2).str() == "0");
    HomogeneousPoly c(2, 0);
    c.add_term({0, 0}, Rational(-7, 2));
    CHECK(c.str() == "-7/2");
}

TEST_CASE("homogeneous polynomial arithmetic respects invariants", "[exact_algebra]") {
    // (x0 + x1)^2 = x0^2 + 2 x0 x1 + x1^2, then exact division recovers the factor.
    HomogeneousPoly lin = HomogeneousPoly::variable(2, 0) + HomogeneousPoly::variable(2, 1);
    HomogeneousPoly sq = lin * lin;
    CHECK(sq.degree() == 2);
    CHECK(sq.term_count() == 3);
    CHECK(sq.exact_div(lin) == lin);
    CHECK_THROWS(sq.exact_div(HomogeneousPoly::variable(2, 0) - HomogeneousPoly::variable(2, 1)));
    CHECK((sq - sq).is_zero());
    // Cancellation drops terms from the map entirely.
    HomogeneousPoly d = sq - lin * lin;
    CHECK(d.term_count() == 0);
    // Degree mismatch in addition is rejected.
    CHECK_THROWS(lin + sq);
}
