#include <catch2/catch_amalgamated.hpp>

#include "braidcov/rational.hpp"
#include "braidcov/sampling.hpp"

using namespace braidcov;

TEST_CASE("rationals reduce to lowest terms with positive denominator", "[rational]") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-3, -6) == Rational(1, 2));
    CHECK(Rational(3, -6).num() == -1);
    CHECK(Rational(3, -6).den() == 2);
    CHECK(Rational(0, 7) == Rational(0));
    CHECK_THROWS(Rational(1, 0));
}

TEST_CASE("rational arithmetic and printing", "[rational]") {
    CHECK((Rational(1, 2) + Rational(1, 3)) == Rational(5, 6));
    CHECK((Rational(1, 2) * Rational(2, 3)) == Rational(1, 3));
    CHECK((Rational(1) / Rational(-3)) == Rational(-1, 3));
    CHECK_THROWS(Rational(1) / Rational(0));
    CHECK(Rational(-5, 10).str() == "-1/2");
    CHECK(Rational(4, 2).str() == "2");
    CHECK(rational_pow(Rational(-2, 3), 3) == Rational(-8, 27));
    CHECK(to_integer(Rational(12, 4)) == 3);
    CHECK_THROWS(to_integer(Rational(1, 2)));
}

TEST_CASE("field axioms hold on randomized triples and reduction is invariant",
          "[rational][property]") {
    Sampler s(20240817);
    for (int iter = 0; iter < 200; ++iter) {
        Rational a(s.integer(-50, 50), s.integer(1, 30));
        Rational b(s.integer(-50, 50), s.integer(1, 30));
        Rational c(s.integer(-50, 50), s.integer(1, 30));
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        for (const Rational& r : {a + b, a - b, a * b}) {
            CHECK(r.den() > 0);
            CHECK(gcd(r.num(), r.den()) == 1);
        }
        if (!b.is_zero()) CHECK((a / b) * b == a);
    }
}
