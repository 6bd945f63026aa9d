#pragma once

#include "lsq/intutil.hpp"
#include "lsq/padic.hpp"
#include "lsq/real.hpp"

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace lsq {

// q0 + q1*theta + q2*theta^2 + q3*theta^3, theta^4 = m
struct FieldElement {
    std::array<Rat, 4> q{Rat(0), Rat(0), Rat(0), Rat(0)};

    static FieldElement rational(Rat r)
    {
        FieldElement e;
        e.q[0] = std::move(r);
        return e;
    }
    static FieldElement theta_power(int k)
    {
        FieldElement e;
        e.q[k] = 1;
        return e;
    }
    bool operator==(FieldElement const&) const = default;
};

FieldElement fe_add(FieldElement const& a, FieldElement const& b);
FieldElement fe_sub(FieldElement const& a, FieldElement const& b);
FieldElement fe_neg(FieldElement const& a);
FieldElement fe_mul(FieldElement const& a, FieldElement const& b, Int const& m);
FieldElement fe_inv(FieldElement const& a, Int const& m);
FieldElement fe_pow(FieldElement const& a, long e, Int const& m);
Rat fe_norm(FieldElement const& a, Int const& m);
// theta -> -theta
FieldElement fe_sigma(FieldElement const& a);

struct PrimeIdealInfo {
    std::string label;
    Int p;             // residue characteristic
    Int norm;          // absolute norm of the ideal
    bool principal;
    long class_order;  // order of its ideal class
    std::string generator;  // element name when principal (or of its square etc.)
};

struct FieldIdentity {
    std::string check;  // "norm" | "integral" | "product"
    std::string element;
    Rat value;                         // for "norm"
    std::vector<std::string> factors;  // for "product": element == prod(factors)
};

struct FieldSpec {
    Int m;
    std::array<FieldElement, 4> integral_basis;
    long class_number = 1;
    std::map<std::string, FieldElement> units;     // "eps1", "eps2"
    std::map<std::string, FieldElement> elements;  // named special elements
    std::vector<PrimeIdealInfo> prime_data;
    std::vector<FieldIdentity> identities;

    // p-adic embedding conventions
    Int padic_p;
    std::map<std::string, Int> theta_residue;  // per case-id
    Int theta_residue_mod;
    Int iota_residue;  // 0 when iota lives in the gauss extension instead

    FieldElement const& element(std::string const& name) const;
};

struct FieldLoadError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

FieldSpec load_field_spec(std::string const& path);

// coordinates over the integral basis when they are all integers
std::optional<std::array<Int, 4>> to_integral_coordinates(FieldSpec const& spec,
                                                          FieldElement const& a);

// complex embedding per Eq (37): theta^(1) = t, theta^(2) = -t, theta^(3) = i t,
// theta^(4) = -i t, with t the real fourth root of m
Complex embed_complex(FieldElement const& a, Int const& m, int conj_id, mpfr_prec_t prec);

// p-adic embedding; case_id selects the residue convention for theta
PAdicValue embed_padic(FieldElement const& a, FieldSpec const& spec, std::string const& case_id,
                       int conj_id, long prec);

// u - v*theta when the theta^2/theta^3 parts vanish and u, v are integers
std::optional<std::pair<Int, Int>> extract_uv(FieldElement const& a);

// the exact element (sign) * base * eps1^a1 * eps2^a2 * pi^n1 for the case's element equation
FieldElement exponent_combo(FieldSpec const& spec, std::string const& case_id, long a1, long a2,
                            long n1, int sign);

// a1 values (with exact u/v ratio) for which 1/(1 - R(n1,a1)) = 1/2 + c*theta^3
std::vector<std::pair<long, Rat>> r_ratio_scan(FieldSpec const& spec, long n1, long a1_lo,
                                               long a1_hi);

// delta/beta context for lambda_ord and the reduction steps
LambdaContext make_lambda_context(FieldSpec const& spec, std::string const& case_id, long prec);

}  // namespace lsq
