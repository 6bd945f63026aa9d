#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsq/conic.hpp"

#include <random>

using namespace lsq;

TEST_CASE("legendre_solve small cases")
{
    auto s = legendre_solve(ConicForm(1, 17, -1), 1);
    REQUIRE(s.has_value());
    CHECK(abs(s->x) == 1);
    CHECK(s->y == 0);
    CHECK(abs(s->z) == 1);

    s = legendre_solve(ConicForm(1, 1, -2), 1);
    REQUIRE(s.has_value());
    CHECK(abs(s->x) == 1);
    CHECK(abs(s->y) == 1);
    CHECK(abs(s->z) == 1);

    CHECK(!legendre_solve(ConicForm(1, 1, 1), 50).has_value());
}

TEST_CASE("Eq (18) parametrization through (-1, 0, 1)")
{
    for (Int D : {Int(17), Int(21), Int(84)}) {
        ConicForm form(1, D, -1);
        auto par = parametrize_conic(form, Triple{-1, 0, 1});
        // q_X = S^2 - D T^2, q_Y = 2 S T, q_Z = +-(S^2 + D T^2)
        CHECK(par.qx.a == 1);
        CHECK(par.qx.b == 0);
        CHECK(par.qx.c == -D);
        CHECK(par.qy.a == 0);
        CHECK(abs(par.qy.b) == 2);
        CHECK(par.qy.c == 0);
        CHECK(abs(par.qz.a) == 1);
        CHECK(par.qz.b == 0);
        CHECK(par.qz.a * D == par.qz.c * 1);
        CHECK(mpz_divisible_p(Int(4 * D).get_mpz_t(), par.divisor_bound.get_mpz_t()));
        CHECK(par.det() != 0);

        // (S,T) = (1,0): the base family gives (1, 0, +-1)
        CHECK(par.qx.eval(1, 0) == 1);
        CHECK(par.qy.eval(1, 0) == 0);
        CHECK(abs(par.qz.eval(1, 0)) == 1);
    }
}

TEST_CASE("Eq (20) parametrization through (-2, -1, P)")
{
    for (auto [P, Q] : {std::pair<long, long>{1, -4}, {4, -17}, {3, -5}}) {
        Int D = Int(P) * P - 4 * Q;
        ConicForm form(Q, D, -1);
        REQUIRE(form.eval(-2, -1, P) == 0);
        auto par = parametrize_conic(form, Triple{-2, -1, P});
        CHECK(par.det() != 0);
        Int bound = 2 * pow_int(Int(P), 3) * Q * D;
        CHECK(mpz_divisible_p(abs(bound).get_mpz_t(), par.divisor_bound.get_mpz_t()));
    }
}

TEST_CASE("parametrized points satisfy the conic exactly")
{
    std::mt19937_64 rng(99);
    std::uniform_int_distribution<long> st(-30, 30);
    for (auto [A, B, C, x0, y0, z0] :
         {std::array<long, 6>{1, 17, -1, -1, 0, 1}, {-4, 17, -1, -2, -1, 1},
          {1, 1, -2, 1, 1, 1}, {2, 3, -5, 1, 1, 1}}) {
        ConicForm form(A, B, C);
        REQUIRE(form.eval(x0, y0, z0) == 0);
        auto par = parametrize_conic(form, Triple{x0, y0, z0});
        int done = 0;
        while (done < 50) {
            Int S = st(rng), T = st(rng);
            if (gcd(S, T) != 1)
                continue;
            Int X = par.qx.eval(S, T), Y = par.qy.eval(S, T), Z = par.qz.eval(S, T);
            CHECK(form.eval(X, Y, Z) == 0);
            // scaling by any common divisor keeps the conic exact
            Int g = gcd(gcd(X, Y), Z);
            if (g > 1)
                CHECK(form.eval(X / g, Y / g, Z / g) == 0);
            done++;
        }
    }
}

TEST_CASE("invalid base is rejected")
{
    CHECK_THROWS_AS(parametrize_conic(ConicForm(1, 17, -1), Triple{1, 1, 1}),
                    std::invalid_argument);
    CHECK_THROWS_AS(parametrize_conic(ConicForm(1, 17, -1), Triple{-2, 0, 2}),
                    std::invalid_argument);
}
