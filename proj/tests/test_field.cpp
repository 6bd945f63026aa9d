#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lsq/field.hpp"

#include <cmath>
#include <string>

using namespace lsq;

namespace {

std::string data_path(char const* name)
{
    return std::string(LSQ_DATA_DIR) + "/" + name;
}

FieldElement make(Rat q0, Rat q1, Rat q2, Rat q3)
{
    FieldElement e;
    e.q = {std::move(q0), std::move(q1), std::move(q2), std::move(q3)};
    return e;
}

}  // namespace

TEST_CASE("field element arithmetic over Q(m^(1/4))")
{
    Int m = 17;
    FieldElement theta = FieldElement::theta_power(1);
    FieldElement theta3 = FieldElement::theta_power(3);
    CHECK(fe_mul(theta, theta3, m) == FieldElement::rational(Rat(17)));

    // psi = (1 + theta^2)/2 satisfies psi^2 = 4 + psi
    FieldElement psi = make(Rat(1, 2), Rat(0), Rat(1, 2), Rat(0));
    CHECK(fe_mul(psi, psi, m) == fe_add(FieldElement::rational(Rat(4)), psi));

    // sigma: theta -> -theta is an involution fixing rationals
    FieldElement a = make(Rat(1), Rat(2), Rat(3, 2), Rat(-1, 4));
    CHECK(fe_sigma(fe_sigma(a)) == a);
    CHECK(fe_sigma(psi) == psi);
}

TEST_CASE("inverses and norms in K(17)")
{
    auto spec = load_field_spec(data_path("field-17.json"));
    REQUIRE(spec.m == 17);
    CHECK(spec.class_number == 2);

    FieldElement eps1 = spec.units.at("eps1");
    CHECK(fe_mul(eps1, fe_inv(eps1, spec.m), spec.m) == FieldElement::rational(Rat(1)));
    CHECK(fe_norm(eps1, spec.m) == Rat(-1));
    CHECK(fe_norm(spec.units.at("eps2"), spec.m) == Rat(1));
    CHECK(fe_norm(spec.element("alpha"), spec.m) == Rat(-4));
    CHECK(fe_norm(FieldElement::rational(Rat(3)), spec.m) == Rat(81));

    // fe_pow consistency
    CHECK(fe_pow(eps1, -1, spec.m) == fe_inv(eps1, spec.m));
    CHECK(fe_pow(eps1, 3, spec.m) == fe_mul(eps1, fe_mul(eps1, eps1, spec.m), spec.m));
}

TEST_CASE("integral coordinates over the K(17) basis")
{
    auto spec = load_field_spec(data_path("field-17.json"));
    // omega = (1 + theta + theta^2 + theta^3)/4 is the last basis element
    FieldElement omega = make(Rat(1, 4), Rat(1, 4), Rat(1, 4), Rat(1, 4));
    auto c = to_integral_coordinates(spec, omega);
    REQUIRE(c.has_value());
    CHECK(*c == std::array<Int, 4>{0, 0, 0, 1});

    c = to_integral_coordinates(spec, FieldElement::theta_power(2));
    REQUIRE(c.has_value());
    CHECK(*c == std::array<Int, 4>{-1, 0, 2, 0});

    FieldElement half_theta = make(Rat(0), Rat(1, 2), Rat(0), Rat(0));
    CHECK(!to_integral_coordinates(spec, half_theta).has_value());
}

TEST_CASE("complex embedding conventions")
{
    Int m = 17;
    double t = std::pow(17.0, 0.25);
    FieldElement theta = FieldElement::theta_power(1);

    auto e1 = embed_complex(theta, m, 1, 256);
    CHECK(std::abs(e1.re.to_double() - t) < 1e-12);
    CHECK(std::abs(e1.im.to_double()) < 1e-12);

    auto e2 = embed_complex(theta, m, 2, 256);
    CHECK(std::abs(e2.re.to_double() + t) < 1e-12);

    auto e3 = embed_complex(theta, m, 3, 256);
    CHECK(std::abs(e3.re.to_double()) < 1e-12);
    CHECK(std::abs(e3.im.to_double() - t) < 1e-12);

    auto e4 = embed_complex(theta, m, 4, 256);
    CHECK(std::abs(e4.im.to_double() + t) < 1e-12);

    // unit eps1 = 2 - theta has |N| = 1: product of the four conjugate moduli is 1
    auto spec = load_field_spec(data_path("field-17.json"));
    Real prod = Real::from(1.0, 256);
    for (int cj = 1; cj <= 4; cj++)
        prod = prod * embed_complex(spec.units.at("eps1"), m, cj, 256).abs();
    CHECK(std::abs(prod.to_double() - 1.0) < 1e-12);
}

TEST_CASE("K(84) spec loads and identities verify")
{
    auto spec = load_field_spec(data_path("field-84.json"));
    CHECK(spec.m == 84);
    CHECK(fe_norm(spec.element("pi42"), spec.m) == Rat(-17));
    CHECK(fe_norm(spec.element("pi43"), spec.m) == Rat(289));
    CHECK(spec.padic_p == 17);
    CHECK(spec.theta_residue.at("k84-43") == 2);
}

TEST_CASE("tampered spec is rejected with the failing identity named")
{
    std::string path = std::string(LSQ_FIXTURE_DIR) + "/field-17.json";
    try {
        load_field_spec(path);
        FAIL("tampered spec accepted");
    } catch (FieldLoadError const& e) {
        CHECK(std::string(e.what()).find("eps1") != std::string::npos);
    }
}

TEST_CASE("extract_uv")
{
    FieldElement a = make(Rat(1), Rat(-1), Rat(0), Rat(0));  // 1 - theta
    auto uv = extract_uv(a);
    REQUIRE(uv.has_value());
    CHECK(uv->first == 1);
    CHECK(uv->second == 1);

    auto spec = load_field_spec(data_path("field-17.json"));
    CHECK(!extract_uv(spec.element("alpha")).has_value());

    uv = extract_uv(FieldElement::rational(Rat(3)));
    REQUIRE(uv.has_value());
    CHECK(uv->first == 3);
    CHECK(uv->second == 0);
}

TEST_CASE("exponent_combo base elements")
{
    auto spec17 = load_field_spec(data_path("field-17.json"));
    CHECK(exponent_combo(spec17, "k17", 0, 0, 0, +1) == spec17.element("alpha"));
    CHECK(exponent_combo(spec17, "k17", 0, 0, 0, -1) == fe_neg(spec17.element("alpha")));

    auto spec84 = load_field_spec(data_path("field-84.json"));
    FieldElement combo = exponent_combo(spec84, "k84-42", 0, 0, 1, +1);
    // one pi42 factor on top of the trivial base
    CHECK(combo == fe_mul(exponent_combo(spec84, "k84-42", 0, 0, 0, +1),
                          spec84.element("pi42"), spec84.m));
}

TEST_CASE("r_ratio_scan anchors")
{
    auto spec = load_field_spec(data_path("field-17.json"));
    auto hits = r_ratio_scan(spec, 1, -10, 10);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].first == 0);
    CHECK(hits[0].second == Rat(1));

    hits = r_ratio_scan(spec, 2, -10, 10);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].first == -1);
    CHECK(hits[0].second == Rat(-3));

    hits = r_ratio_scan(spec, 4, -10, 10);
    REQUIRE(hits.size() == 1);
    CHECK(hits[0].first == -1);
    CHECK(hits[0].second == Rat(7, 3));

    CHECK(r_ratio_scan(spec, 3, -10, 10).empty());
}
