#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsq/field.hpp"
#include "lsq/padic.hpp"

#include <random>
#include <string>

using namespace lsq;

namespace {

std::string data_path(char const* name)
{
    return std::string(LSQ_DATA_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("valuations")
{
    CHECK(ord_p(PAdicValue::from(12, 2, 30)) == Rat(2));
    CHECK(ord_p(PAdicValue::from(12, 3, 30)) == Rat(1));
    CHECK(ord_p(PAdicValue::from(17, 17, 10)) == Rat(1));
    CHECK(ord_p(PAdicValue::gauss_from(1, 1, 2, 30)) == Rat(1, 2));
    CHECK(ord_p(PAdicValue::gauss_from(0, 4, 2, 30)) == Rat(2));
    // stored zero reports prec as a lower bound
    CHECK(ord_p(PAdicValue::zero(2, 30)) == Rat(30));
}

TEST_CASE("gauss arithmetic")
{
    auto i = PAdicValue::gauss_from(0, 1, 2, 20);
    CHECK((i * i).a == ((Int(-1) % pow_int(2, 20)) + pow_int(2, 20)) % pow_int(2, 20));
    CHECK((i * i).b == 0);

    auto x = PAdicValue::gauss_from(3, 5, 2, 20);
    auto y = PAdicValue::gauss_from(7, 1, 2, 20);
    CHECK(((x * y) / y).a == x.a);
    CHECK(((x * y) / y).b == x.b);

    // division in the base field
    auto u = PAdicValue::from(15, 17, 8);
    auto v = PAdicValue::from(4, 17, 8);
    auto q = (u * v) / v;
    CHECK(q.a == u.a);
    CHECK(!q.gauss);
}

TEST_CASE("fourth root of 17 in Q_2: residue 13 mod 16")
{
    auto th = hensel_root(17, 4, 2, 64, ResidueSelector{13, 16});
    CHECK(th.pow(4).a == (Int(17) % pow_int(2, 64)));
    CHECK(th.a % 16 == 13);
    CHECK(th.digits(12).rfind("0.101101011011", 0) == 0);
}

TEST_CASE("fourth root of 84 in Q_17: 8 + 13*17 + ...")
{
    auto th = hensel_root(84, 4, 17, 20, ResidueSelector{8, 17});
    CHECK(th.pow(4).a == (Int(84) % pow_int(17, 20)));
    CHECK(th.a % 289 == 229);  // 8 + 13*17
    CHECK(th.digits(2).rfind("0.8(13)", 0) == 0);
}

TEST_CASE("iota_root")
{
    auto i = iota_root(17, 12, 4);
    CHECK(i.a % 17 == 4);
    Int mod = pow_int(17, 12);
    CHECK((i.a * i.a) % mod == mod - 1);
    CHECK_THROWS(iota_root(7, 12, 1));  // -1 is not a square mod 7
}

TEST_CASE("padic_log basics")
{
    CHECK(padic_log(PAdicValue::one(2, 40)).is_zero());
    CHECK(ord_p(padic_log(PAdicValue::from(5, 2, 40))) == Rat(2));
    CHECK(ord_p(padic_log(PAdicValue::from(18, 17, 10))) == Rat(1));
    CHECK_THROWS_AS(padic_log(PAdicValue::from(3, 2, 40)), NotPrincipalUnit);

    // log is additive: log(u^2) = 2 log(u)
    auto u = PAdicValue::from(5, 2, 40);
    auto l = padic_log(u), l2 = padic_log(u * u);
    Int mod = pow_int(2, 36);
    CHECK((l2.a - 2 * l.a) % mod == 0);

    // padic_log_unit handles torsion-carrying units
    auto lu = padic_log_unit(PAdicValue::from(3, 2, 40));
    CHECK(ord_p(lu) >= Rat(2));
}

TEST_CASE("hensel self-check on random units")
{
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 100) {
        Int p = (done % 2 == 0) ? 2 : 17;
        int deg = (done % 3 == 0) ? 2 : 4;
        long s = (p == 2) ? ((deg == 4) ? 2 : 1) : 0;
        long prec = 40;
        Int mod = pow_int(p, prec);
        Int u = Int(rng()) % mod;
        if (u % p == 0 || u < 2)
            continue;
        Int a = powmod(u, deg, mod);
        Int selmod = pow_int(p, 2 * s + 1);
        auto root = hensel_root(a, deg, p, prec, ResidueSelector{u % selmod, selmod});
        CHECK(root.a % selmod == u % selmod);
        Int check_mod = pow_int(p, prec - 2 * s - 1);
        CHECK((powmod(root.a, deg, check_mod) - a % check_mod) % check_mod == 0);
        done++;
    }
}

TEST_CASE("hensel_root refuses non-residues")
{
    // 3 is not a fourth power in Q_2 (not 1 mod 16)
    CHECK_THROWS_AS(hensel_root(3, 4, 2, 30, ResidueSelector{1, 16}), NoRootError);
}

TEST_CASE("lambda_ord at the known solutions")
{
    auto spec17 = load_field_spec(data_path("field-17.json"));
    auto ctx = make_lambda_context(spec17, "k17", 400);
    CHECK(lambda_ord(ctx, 1, 0) == Rat(2));
    CHECK(lambda_ord(ctx, 2, -1) == Rat(4));
    CHECK(lambda_ord(ctx, 4, -1) == Rat(8));

    auto spec84 = load_field_spec(data_path("field-84.json"));
    auto ctx43 = make_lambda_context(spec84, "k84-43", 60);
    CHECK(lambda_ord(ctx43, 2, -1) == Rat(4));
}
