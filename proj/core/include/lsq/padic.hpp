#pragma once

#include "lsq/intutil.hpp"

#include <stdexcept>
#include <string>

namespace lsq {

struct NoRootError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotPrincipalUnit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Truncated value a + b*iota mod p^prec (iota^2 = -1; b = 0 for base-field values).
// prec is the modulus exponent; arithmetic reduces mod p^min(prec).
struct PAdicValue {
    Int p;
    long prec;
    bool gauss;  // element of Q_p(iota) rather than Q_p
    Int a, b;

    static PAdicValue from(Int x, Int const& p, long prec, bool gauss = false);
    static PAdicValue gauss_from(Int x, Int y, Int const& p, long prec);
    static PAdicValue zero(Int const& p, long prec, bool gauss = false);
    static PAdicValue one(Int const& p, long prec, bool gauss = false);

    bool is_zero() const { return a == 0 && b == 0; }

    friend PAdicValue operator+(PAdicValue const& x, PAdicValue const& y);
    friend PAdicValue operator-(PAdicValue const& x, PAdicValue const& y);
    friend PAdicValue operator*(PAdicValue const& x, PAdicValue const& y);
    // exact division; throws if the quotient is not integral at working precision
    friend PAdicValue operator/(PAdicValue const& x, PAdicValue const& y);
    PAdicValue operator-() const;
    PAdicValue pow(long e) const;
    PAdicValue conj() const;

    // digit string "0.b0b1b2..." with multi-digit p-adic digits parenthesized
    std::string digits(long count) const;
};

// valuation; half-integers occur in the ramified extension Q_2(iota).
// A stored zero (all digits vanish) reports ord = prec as a lower bound.
Rat ord_p(PAdicValue const& x);

struct ResidueSelector {
    Int residue;
    Int modulus;
};

// x with x^degree = a in Q_p, selected by x = residue (mod modulus)
PAdicValue hensel_root(Int const& a, int degree, Int const& p, long prec,
                       ResidueSelector const& sel);

// iota in Q_p for p = 1 (mod 4), residue-selected
PAdicValue iota_root(Int const& p, long prec, Int const& residue);

// log of a principal unit (ord(u-1) > 1/(p-1)); throws NotPrincipalUnit otherwise
PAdicValue padic_log(PAdicValue const& u);

// log of an arbitrary unit: kills torsion first (repeated squaring for p = 2,
// u^(p-1) for odd p), then divides the exponent back out
PAdicValue padic_log_unit(PAdicValue const& u);

// lambda machinery for the element-equation linear forms
struct LambdaContext {
    PAdicValue delta, beta;
    // kind "k17": lambda = (-1)^n1 delta^(1-2n1) beta^a1 - 1  in Q_2(iota)
    // kind "k84": lambda = -iota * delta^n1 beta^a1 - 1       in Q_17
    std::string kind;
    PAdicValue iota;  // used by k84
};

Rat lambda_ord(LambdaContext const& ctx, long n1, long a1);

}  // namespace lsq
