#include <catch2/catch_amalgamated.hpp>

#include "lagfill/laurent.hpp"

using lagfill::LaurentPoly2;

TEST_CASE("basic ring operations are exact") {
    auto p = LaurentPoly2::monomial(1, 0) - LaurentPoly2::monomial(-1, 0); // v - v^-1
    auto q = p * p;
    CHECK(q.coeff(2, 0) == 1);
    CHECK(q.coeff(0, 0) == -2);
    CHECK(q.coeff(-2, 0) == 1);
    CHECK((p - p).is_zero());
}

TEST_CASE("cancellation erases terms") {
    LaurentPoly2 p;
    p.add_term(3, -2, 5);
    p.add_term(3, -2, -5);
    CHECK(p.is_zero());
    CHECK_THROWS_AS(p.max_deg_v(), std::domain_error);
}

TEST_CASE("degree extraction") {
    auto p = LaurentPoly2::monomial(-4, 0, -1) + LaurentPoly2::monomial(-2, 0, 2) +
             LaurentPoly2::monomial(-2, 2, 1); // right trefoil HOMFLYPT
    CHECK(p.max_deg_v() == -2);
    CHECK(p.min_deg_v() == -4);
    CHECK(p.max_deg_z() == 2);
}

TEST_CASE("mirror substitution v -> -1/v") {
    auto p = LaurentPoly2::monomial(-4, 0, -1) + LaurentPoly2::monomial(-2, 0, 2) +
             LaurentPoly2::monomial(-2, 2, 1);
    auto m = p.mirrored();
    CHECK(m.coeff(4, 0) == -1);
    CHECK(m.coeff(2, 0) == 2);
    CHECK(m.coeff(2, 2) == 1);
    CHECK(m.mirrored() == p);
}

TEST_CASE("text form sorts by (deg_v, deg_z) descending") {
    auto p = LaurentPoly2::monomial(1, -1) - LaurentPoly2::monomial(-1, -1);
    CHECK(p.text() == "1*v^1*z^-1 + -1*v^-1*z^-1");
}
