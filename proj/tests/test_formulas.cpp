#include <doctest.h>

#include <geogrowth/formulas.hpp>

using namespace geogrowth;

namespace {

Polynomial poly(std::initializer_list<long> coeffs) {
    std::vector<Rational> v;
    for (long c : coeffs) v.emplace_back(c);
    return Polynomial(std::move(v));
}

RationalFunction rf(std::initializer_list<long> num, std::initializer_list<long> den) {
    return RationalFunction(poly(num), poly(den));
}

}  // namespace

TEST_CASE("system coefficient polynomials on the iterated-double family") {
    // (n,l,q) = (3k,2k,k): p_delta = 2(k-1)^2 z^2 - 3(k-1) z + 1,
    // p_e = 7(k-1)^2, p_v = (k-1)^3
    for (long k = 1; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(p_delta(3 * k, 2 * k, k) ==
              poly({1, -3 * (k - 1), 2 * (k - 1) * (k - 1)}));
        CHECK(p_e(3 * k, 2 * k, k) == Rational(7 * (k - 1) * (k - 1)));
        CHECK(p_v(3 * k, 2 * k, k) == Rational((k - 1) * (k - 1) * (k - 1)));
    }
    CHECK(p_e(6, 4, 2) == 7);
    CHECK(p_v(9, 6, 3) == 8);
}

TEST_CASE("closed formula, RACG") {
    CHECK(closed_formula_racg({3, 2, 1}) == RationalFunction(poly({1, 3, 6, 6})));
    CHECK(closed_formula_racg({2, 0, 0}) == rf({1, 1}, {1, -1}));
    CHECK(closed_formula_racg({6, 4, 2}) == rf({1, 0, 5, 6}, {1, -6, 11, -6}));
}

TEST_CASE("triangle-free formula") {
    CHECK(triangle_free_formula(5, 2) ==
          RationalFunction(poly({1})) + rf({0, 5}, {1, -4, 2}));
    CHECK(triangle_free_formula(3, 0) ==
          RationalFunction(poly({1})) + rf({0, 3}, {1, -2}));
    CHECK(triangle_free_formula(6, 3) ==
          RationalFunction(poly({1})) + rf({0, 6, -6}, {1, -6, 8}));
}

TEST_CASE("formula specialization identities") {
    for (long n = 1; n <= 30; ++n) {
        for (long l = 0; l < n; ++l) {
            CAPTURE(n);
            CAPTURE(l);
            CHECK(closed_formula_racg({n, l, 0}) == triangle_free_formula(n, l));
        }
        // free product of n copies of Z/2: 1 + nz/(1-(n-1)z)
        Polynomial den({Rational(1), Rational(-(n - 1))});
        CHECK(triangle_free_formula(n, 0) ==
              RationalFunction(den + Polynomial::monomial(Rational(n), 1), den));
    }
}

TEST_CASE("closed formula, RAAG") {
    CHECK(closed_formula_raag({1, 0, 0}) == rf({1, 1}, {1, -1}));
    CHECK(closed_formula_raag({2, 0, 0}) ==
          RationalFunction(poly({1})) + rf({0, 4}, {1, -3}));
    CHECK(closed_formula_raag({3, 2, 1}) == closed_formula_racg({6, 4, 2}));

    // the displayed fraction agrees with the substituted closed formula
    for (long n = 1; n <= 12; ++n)
        for (long l = 0; l < n; ++l)
            for (long q = 0; q <= std::max(l - 1, 0L); ++q) {
                CAPTURE(n);
                CAPTURE(l);
                CAPTURE(q);
                CHECK(closed_formula_raag_displayed({n, l, q}) == closed_formula_raag({n, l, q}));
            }
}

TEST_CASE("iterated-double family formula") {
    CHECK(example_family_formula(1) == RationalFunction(poly({1, 3, 6, 6})));
    CHECK(example_family_formula(2) == rf({1, 0, 5, 6}, {1, -6, 11, -6}));
    for (long k = 1; k <= 8; ++k) {
        CAPTURE(k);
        CHECK(example_family_formula(k) == closed_formula_racg({3 * k, 2 * k, k}));
    }
    CHECK_THROWS_AS(example_family_formula(0), std::invalid_argument);
}

TEST_CASE("linear system solutions") {
    SystemBundle triangle = build_and_solve_system({3, 2, 1});
    CHECK(triangle.g == RationalFunction(poly({1, 3, 6, 6})));
    CHECK(triangle.e_abcd.is_zero());

    CHECK(build_and_solve_system({6, 4, 2}).g == rf({1, 0, 5, 6}, {1, -6, 11, -6}));
    CHECK(build_and_solve_system({5, 2, 0}).g ==
          RationalFunction(poly({1})) + rf({0, 5}, {1, -4, 2}));
}

TEST_CASE("system matches the closed formula and the length-3 anchor on a grid") {
    for (long n = 1; n <= 14; ++n)
        for (long l = 0; l < n; ++l)
            for (long q = 0; q <= std::max(l - 1, 0L); ++q) {
                CAPTURE(n);
                CAPTURE(l);
                CAPTURE(q);
                RationalFunction g = build_and_solve_system({n, l, q}).g;
                REQUIRE(g == closed_formula_racg({n, l, q}));
                auto coeffs = series_coefficients(g, 3);
                CHECK(coeffs[0] == 1);
                CHECK(coeffs[1] == n);
                CHECK(coeffs[2] == n * (n - 1));
                CHECK(coeffs[3] == n * (n - 1) * (n - 2) + n * (n - l - 1));
            }
}
