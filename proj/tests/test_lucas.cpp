#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsq/lucas.hpp"

#include <random>

using namespace lsq;

TEST_CASE("seed values and published squares")
{
    LucasParams p(3, -5);
    CHECK(lucas_pair(p, 0).u == 0);
    CHECK(lucas_pair(p, 0).v == 2);
    CHECK(lucas_pair(p, 1).u == 1);
    CHECK(lucas_pair(p, 1).v == 3);

    CHECK(lucas_pair(LucasParams(1, -1), 12).u == 144);
    CHECK(lucas_pair(LucasParams(2, -1), 7).u == 169);
    CHECK(lucas_pair(LucasParams(1, -4), 8).u == 441);
    CHECK(lucas_pair(LucasParams(4, -17), 8).u == 384400);
    CHECK(lucas_pair(LucasParams(1, -1), 6).u == 8);
    CHECK(lucas_pair(LucasParams(3, 1), 6).u == 144);
    CHECK(lucas_pair(LucasParams(338, 1), 4).u == Int(6214) * 6214);
}

TEST_CASE("parameter validation")
{
    CHECK_THROWS_AS(LucasParams(0, 1), std::invalid_argument);
    CHECK_THROWS_AS(LucasParams(1, 0), std::invalid_argument);
    CHECK_THROWS_AS(LucasParams(2, 4), std::invalid_argument);   // gcd
    CHECK_THROWS_AS(LucasParams(2, 1), std::invalid_argument);   // D = 0
}

TEST_CASE("fast doubling matches the naive recurrence and identity (16) holds")
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coef(-20, 20), idx(0, 200);
    int done = 0;
    while (done < 1000) {
        long P = coef(rng), Q = coef(rng);
        if (P == 0 || Q == 0 || std::gcd(P, Q) != 1 || P * P - 4 * Q == 0)
            continue;
        LucasParams params(P, Q);
        unsigned long n = idx(rng);
        LucasPair pr = lucas_pair(params, n);
        CHECK(pr.u == lucas_u_oracle(params, n));
        CHECK(pr.v * pr.v - params.D() * pr.u * pr.u == 4 * pow_int(Int(Q), n));
        done++;
    }
}

TEST_CASE("square_class")
{
    CHECK(square_class(18) == SquareClass{1, 2, 3});
    CHECK(square_class(-16) == SquareClass{-1, 1, 4});
    CHECK(square_class(13872) == SquareClass{1, 3, 68});
    CHECK(square_class(0).sign == 0);
    CHECK(square_class(1) == SquareClass{1, 1, 1});
}

TEST_CASE("scan_k_square")
{
    auto has = [](std::vector<SearchHit> const& hits, long P, long Q, unsigned long n) {
        for (auto const& h : hits)
            if (h.params.P == P && h.params.Q == Q && h.n == n)
                return true;
        return false;
    };

    auto hits = scan_k_square(1, 5, -5, 5, {8}, {1, -1});
    CHECK(has(hits, 1, -4, 8));
    CHECK(!has(hits, 4, -17, 8));  // Q out of range here

    hits = scan_k_square(1, 5, -20, 5, {8}, {1, -1});
    CHECK(has(hits, 4, -17, 8));

    hits = scan_k_square(1, 2, -1, -1, {4, 5, 6, 7, 8, 9, 10, 11, 12}, {1});
    REQUIRE(hits.size() == 2);
    CHECK(has(hits, 1, -1, 12));
    CHECK(has(hits, 2, -1, 7));

    CHECK(scan_k_square(1, 10, -10, 10, {}, {1}).empty());
}

TEST_CASE("lehmer divisibility")
{
    auto r = lehmer_divisibility_check(LucasParams(1, -1), 6, 2);
    CHECK(r.d == 2);
    CHECK(r.divides);

    r = lehmer_divisibility_check(LucasParams(5, 3), 4, 1);
    CHECK(r.d == 1);
    CHECK(r.divides);

    r = lehmer_divisibility_check(LucasParams(2, -1), 2, 3);
    CHECK(mpz_divisible_p(Int(3).get_mpz_t(), r.d.get_mpz_t()));

    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coef(-15, 15), small(1, 12);
    int done = 0;
    while (done < 1000) {
        long P = coef(rng), Q = coef(rng);
        if (P == 0 || Q == 0 || std::gcd(P, Q) != 1 || P * P - 4 * Q == 0)
            continue;
        LucasParams params(P, Q);
        unsigned long n0 = small(rng), m = small(rng);
        if (lucas_pair(params, n0).u == 0)
            continue;  // degenerate index
        CHECK(lehmer_divisibility_check(params, n0, m).divides);
        done++;
    }
}
