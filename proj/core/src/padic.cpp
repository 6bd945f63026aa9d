#include "lsq/padic.hpp"

#include <sstream>

namespace lsq {

namespace {

Int mod_pow_prec(Int const& p, long prec)
{
    return pow_int(p, prec);
}

Int norm_rep(PAdicValue const& x)
{
    Int pk = mod_pow_prec(x.p, x.prec);
    if (!x.gauss)
        return ((x.a % pk) + pk) % pk;
    return (((x.a * x.a + x.b * x.b) % pk) + pk) % pk;
}

void check_compat(PAdicValue const& x, PAdicValue const& y)
{
    if (x.p != y.p)
        throw std::invalid_argument("p-adic arithmetic: mixed primes");
}

}  // namespace

PAdicValue PAdicValue::from(Int x, Int const& p, long prec, bool gauss)
{
    Int pk = mod_pow_prec(p, prec);
    x = ((x % pk) + pk) % pk;
    return PAdicValue{p, prec, gauss, x, 0};
}

PAdicValue PAdicValue::gauss_from(Int x, Int y, Int const& p, long prec)
{
    Int pk = mod_pow_prec(p, prec);
    x = ((x % pk) + pk) % pk;
    y = ((y % pk) + pk) % pk;
    return PAdicValue{p, prec, true, x, y};
}

PAdicValue PAdicValue::zero(Int const& p, long prec, bool gauss)
{
    return PAdicValue{p, prec, gauss, 0, 0};
}

PAdicValue PAdicValue::one(Int const& p, long prec, bool gauss)
{
    return PAdicValue{p, prec, gauss, 1, 0};
}

PAdicValue operator+(PAdicValue const& x, PAdicValue const& y)
{
    check_compat(x, y);
    long prec = std::min(x.prec, y.prec);
    Int pk = mod_pow_prec(x.p, prec);
    return PAdicValue{x.p, prec, x.gauss || y.gauss, ((x.a + y.a) % pk + pk) % pk,
                      ((x.b + y.b) % pk + pk) % pk};
}

PAdicValue operator-(PAdicValue const& x, PAdicValue const& y)
{
    return x + (-y);
}

PAdicValue PAdicValue::operator-() const
{
    Int pk = mod_pow_prec(p, prec);
    return PAdicValue{p, prec, gauss, (pk - a) % pk, (pk - b) % pk};
}

PAdicValue operator*(PAdicValue const& x, PAdicValue const& y)
{
    check_compat(x, y);
    long prec = std::min(x.prec, y.prec);
    Int pk = mod_pow_prec(x.p, prec);
    Int ra = ((x.a * y.a - x.b * y.b) % pk + pk) % pk;
    Int rb = ((x.a * y.b + x.b * y.a) % pk + pk) % pk;
    return PAdicValue{x.p, prec, x.gauss || y.gauss, ra, rb};
}

PAdicValue PAdicValue::conj() const
{
    Int pk = mod_pow_prec(p, prec);
    return PAdicValue{p, prec, gauss, a, (pk - b) % pk};
}

PAdicValue operator/(PAdicValue const& x, PAdicValue const& y)
{
    check_compat(x, y);
    long prec = std::min(x.prec, y.prec);
    Int pk = mod_pow_prec(x.p, prec);
    // clear the denominator: multiply by conj(y) when y has an iota part, so the
    // divisor becomes the rational norm (a^2 + b^2), else divide by a directly
    PAdicValue z = y.gauss ? x * y.conj() : x;
    Int n = y.gauss ? norm_rep(y) : ((y.a % pk) + pk) % pk;
    if (n == 0)
        throw std::invalid_argument("p-adic division by (numerically) zero");
    long t = valuation(n, x.p);
    Int pt = pow_int(x.p, t);
    Int u = invmod(n / pt, pk);
    Int za = z.a * u % pk, zb = z.b * u % pk;
    if (za % pt != 0 || zb % pt != 0)
        throw std::domain_error("p-adic division: non-integral quotient");
    return PAdicValue{x.p, prec, x.gauss || y.gauss, za / pt, zb / pt};
}

PAdicValue PAdicValue::pow(long e) const
{
    if (e < 0)
        return (one(p, prec, gauss) / *this).pow(-e);
    PAdicValue r = one(p, prec, gauss);
    PAdicValue base = *this;
    while (e) {
        if (e & 1)
            r = r * base;
        base = base * base;
        e >>= 1;
    }
    return r;
}

Rat ord_p(PAdicValue const& x)
{
    if (x.is_zero())
        return Rat(x.prec);  // lower bound: all stored digits vanish
    if (!x.gauss)
        return Rat(valuation(x.a, x.p));
    if (x.p != 2)
        throw std::logic_error("gauss extension only supported over Q_2 (iota in Q_p otherwise)");
    // ramified: ord = v_2(N(x)) / 2
    Rat r(valuation(norm_rep(x), x.p), 2);
    r.canonicalize();
    return r;
}

PAdicValue hensel_root(Int const& a, int degree, Int const& p, long prec,
                       ResidueSelector const& sel)
{
    if (degree != 2 && degree != 4)
        throw std::invalid_argument("hensel_root: degree must be 2 or 4");
    Int pk = mod_pow_prec(p, prec);
    long s = valuation(Int(degree), p);  // v_p(f'(x)) for a unit root
    Int start_mod = pow_int(p, 2 * s + 1);
    // initial approximation satisfying the (strengthened, for p=2) Hensel condition
    Int x0 = -1;
    for (Int x = 0; x < start_mod; x++) {
        if (sel.modulus != 0 && ((x - sel.residue) % gcd(sel.modulus, start_mod)) != 0)
            continue;
        if (((pow_int(x, degree) - a) % start_mod + start_mod) % start_mod == 0) {
            x0 = x;
            break;
        }
    }
    if (x0 < 0)
        throw NoRootError("hensel_root: no residue with x^" + std::to_string(degree) + " = " +
                          a.get_str() + " mod " + start_mod.get_str() +
                          " matching the selector");
    Int ps = pow_int(p, s);
    Int x = x0;
    for (int it = 0; it < 4 * prec + 16; it++) {
        Int fx = ((pow_int(x, degree) - a) % pk + pk) % pk;
        if (fx == 0)
            break;
        Int fp = degree * pow_int(x, degree - 1) % pk;
        if (fx % ps != 0)
            throw NoRootError("hensel_root: lift stalled at level p^" +
                              std::to_string(valuation(fx, p)));
        Int step = (fx / ps) * invmod(((fp / ps) % pk + pk) % pk, pk) % pk;
        x = ((x - step) % pk + pk) % pk;
    }
    if (((pow_int(x, degree) - a) % pk + pk) % pk != 0)
        throw NoRootError("hensel_root: Newton iteration failed to converge");
    if (sel.modulus != 0 && ((x - sel.residue) % sel.modulus + sel.modulus) % sel.modulus != 0)
        throw NoRootError("hensel_root: converged root misses the residue selector");
    return PAdicValue::from(x, p, prec);
}

PAdicValue iota_root(Int const& p, long prec, Int const& residue)
{
    if (p % 4 != 1)
        throw NoRootError("iota_root: -1 is not a square in Q_" + p.get_str());
    return hensel_root(-1, 2, p, prec, ResidueSelector{residue, p});
}

PAdicValue padic_log(PAdicValue const& u)
{
    PAdicValue x = u - PAdicValue::one(u.p, u.prec, u.gauss);
    Rat o = ord_p(x);
    if (o * (u.p - 1) <= 1)  // convergence: ord(u-1) > 1/(p-1)
        throw NotPrincipalUnit("padic_log: ord(u-1) = " +
                               std::to_string(mpq_get_d(o.get_mpq_t())) + " not above 1/(p-1)");
    Int pk = mod_pow_prec(u.p, u.prec);
    PAdicValue acc = PAdicValue::zero(u.p, u.prec, u.gauss);
    PAdicValue term = PAdicValue::one(u.p, u.prec, u.gauss);
    // log(1+x) = sum (-1)^(k+1) x^k / k, exact division by k at each step
    for (long k = 1; k <= 40 * u.prec + 64; k++) {
        term = term * x;
        if (term.is_zero())
            break;
        Int kk = k;
        long sh = valuation(kk, u.p);
        Int psh = pow_int(u.p, sh);
        Int ik = invmod(kk / psh, pk);
        Int ca = term.a * ik % pk, cb = term.b * ik % pk;
        if (ca % psh != 0 || cb % psh != 0)
            throw std::logic_error("padic_log: non-exact division by k (precision exhausted)");
        PAdicValue c{u.p, u.prec, u.gauss, ca / psh, cb / psh};
        acc = (k % 2 == 1) ? acc + c : acc - c;
    }
    return acc;
}

PAdicValue padic_log_unit(PAdicValue const& u)
{
    if (ord_p(u) != 0)
        throw NotPrincipalUnit("padic_log_unit: input is not a unit");
    if (u.p == 2) {
        PAdicValue x = u;
        long t = 0;
        while (ord_p(x - PAdicValue::one(u.p, u.prec, u.gauss)) <= 1) {
            x = x * x;
            if (++t > 12)
                throw NotPrincipalUnit("padic_log_unit: torsion kill did not converge");
        }
        PAdicValue lg = padic_log(x);
        Int sh = pow_int(Int(2), t);
        if (lg.a % sh != 0 || lg.b % sh != 0)
            throw std::logic_error("padic_log_unit: 2^t does not divide the log");
        return PAdicValue{lg.p, lg.prec, lg.gauss, lg.a / sh, lg.b / sh};
    }
    PAdicValue y = u.pow(to_long(u.p) - 1);
    PAdicValue lg = padic_log(y);
    Int pk = mod_pow_prec(u.p, u.prec);
    Int inv = invmod(u.p - 1, pk);
    return PAdicValue{lg.p, lg.prec, lg.gauss, lg.a * inv % pk, lg.b * inv % pk};
}

Rat lambda_ord(LambdaContext const& ctx, long n1, long a1)
{
    if (ctx.kind == "k17") {
        PAdicValue v = ctx.delta.pow(1 - 2 * n1) * ctx.beta.pow(a1);
        if (n1 % 2)
            v = -v;
        return ord_p(v - PAdicValue::one(v.p, v.prec, v.gauss));
    }
    if (ctx.kind == "k84") {
        PAdicValue v = -(ctx.iota * ctx.delta.pow(n1) * ctx.beta.pow(a1));
        return ord_p(v - PAdicValue::one(v.p, v.prec, v.gauss));
    }
    throw std::invalid_argument("lambda_ord: unknown case kind " + ctx.kind);
}

std::string PAdicValue::digits(long count) const
{
    if (gauss)
        throw std::invalid_argument("digit rendering is defined for base-field values only");
    std::ostringstream os;
    os << "0.";
    Int x = a;
    long n = std::min(count, prec);
    for (long i = 0; i < n; i++) {
        Int d = x % p;
        if (p > 10 && d >= 10)
            os << "(" << d.get_str() << ")";
        else
            os << d.get_str();
        x /= p;
    }
    return os.str();
}

}  // namespace lsq
