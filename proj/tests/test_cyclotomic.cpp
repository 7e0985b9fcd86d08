#include <catch2/catch_amalgamated.hpp>

#include "braidcov/cyclotomic.hpp"
#include "braidcov/upoly.hpp"

using namespace braidcov;

TEST_CASE("cyclotomic polynomials by iterated exact division", "[cyclotomic]") {
    // Phi_1 = x - 1, Phi_2 = x + 1, Phi_4 = x^2 + 1, Phi_6 = x^2 - x + 1.
    CHECK(cyclotomic_polynomial(1) == UPoly({Rational(-1), Rational(1)}));
    CHECK(cyclotomic_polynomial(2) == UPoly({Rational(1), Rational(1)}));
    CHECK(cyclotomic_polynomial(4) == UPoly({Rational(1), Rational(0), Rational(1)}));
    CHECK(cyclotomic_polynomial(6) == UPoly({Rational(1), Rational(-1), Rational(1)}));
    for (unsigned s = 1; s <= 12; ++s)
        CHECK(cyclotomic_polynomial(s).degree() == static_cast<int>(totient(s)));
}

TEST_CASE("w^s = 1 and power sums vanish unless s divides m", "[cyclotomic]") {
    for (unsigned s = 1; s <= 12; ++s) {
        const Cyclotomic one(s, Rational(1));
        Cyclotomic w = Cyclotomic::root_of_unity(s, 1);
        Cyclotomic p = one;
        for (unsigned k = 0; k < s; ++k) p = p * w;
        CHECK(p == one);
        for (unsigned m = 0; m <= 2 * s; ++m) {
            Cyclotomic sum(s);
            for (unsigned k = 0; k < s; ++k)
                sum = sum + Cyclotomic::root_of_unity(s, static_cast<long>(k * m));
            if (m % s == 0)
                CHECK(sum == Cyclotomic(s, Rational(static_cast<long>(s))));
            else
                CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("cyclotomic inverses and field arithmetic", "[cyclotomic]") {
    for (unsigned s : {3u, 5u, 7u, 8u, 12u}) {
        const Cyclotomic one(s, Rational(1));
        for (long k = 0; k < static_cast<long>(s); ++k) {
            Cyclotomic z = Cyclotomic::root_of_unity(s, k) + Cyclotomic(s, Rational(2));
            CHECK((z * z.inverse()) == one);
        }
        // (1 - w) * (1 + w + ... + w^(s-1)) telescopes to 1 - w^s = 0.
        Cyclotomic w = Cyclotomic::root_of_unity(s, 1);
        Cyclotomic geom(s);
        for (unsigned k = 0; k < s; ++k) geom = geom + Cyclotomic::root_of_unity(s, k);
        CHECK(((one - w) * geom).is_zero());
    }
    CHECK_THROWS(Cyclotomic(5).inverse());
}

TEST_CASE("equality is canonical after reduction mod the cyclotomic polynomial",
          "[cyclotomic]") {
    // In Q(w_4): w^2 = -1, w^3 = -w.
    Cyclotomic w = Cyclotomic::root_of_unity(4, 1);
    CHECK(w * w == Cyclotomic(4, Rational(-1)));
    CHECK(w * w * w == -w);
    CHECK(Cyclotomic::root_of_unity(4, 7) == Cyclotomic::root_of_unity(4, 3));
    CHECK(Cyclotomic::root_of_unity(4, -1) == Cyclotomic::root_of_unity(4, 3));
}
