#include "lsq/descent.hpp"

#include <mpfr.h>

#include <algorithm>
#include <cmath>
#include <set>

namespace lsq {

namespace {

long F28(long d1, long d2, long a, long b, long mod)
{
    // -d1^4 a^8 + 2 d1^2 d2 a^4 b^2 + d2^2 b^4, safely via __int128 then reduced
    auto pw = [mod](long x, int e) {
        __int128 r = 1;
        for (int i = 0; i < e; i++)
            r = (r * x) % mod;
        return static_cast<long>(r);
    };
    __int128 t = -static_cast<__int128>(d1 * d1 * d1 * d1) * pw(a, 8) +
                 static_cast<__int128>(2 * d1 * d1 * d2) * pw(a, 4) % mod * pw(b, 2) +
                 static_cast<__int128>(d2 * d2) * pw(b, 4);
    long r = static_cast<long>(t % mod);
    return r < 0 ? r + mod : r;
}

// a, b, c pairwise coprime: at most one of them may be divisible by the witness prime
bool solvable_at_2(long d1, long d2, long d3)
{
    long const M = 1 << 10;
    std::set<long> rhs_odd, rhs_even;  // 2 d3 c^2 mod 2^10 by parity of c
    for (long c = 0; c < (1 << 9); c++) {
        long r = ((2 * d3 % M) * (c * c % M) % M + M) % M;
        (c % 2 ? rhs_odd : rhs_even).insert(r);
    }
    for (long a = 0; a < (1 << 7); a++) {
        for (long b = 0; b < (1 << 8); b++) {
            int evens = (a % 2 == 0) + (b % 2 == 0);
            if (evens == 2)
                continue;
            long L = F28(d1, d2, a, b, M);
            if (rhs_odd.count(L))
                return true;
            if (evens == 0 && rhs_even.count(L))
                return true;
        }
    }
    return false;
}

bool solvable_at_odd(long d1, long d2, long d3, long p)
{
    std::vector<std::array<long, 3>> singular;
    for (long a = 0; a < p; a++) {
        for (long b = 0; b < p; b++) {
            for (long c = 0; c < p; c++) {
                if ((a == 0) + (b == 0) + (c == 0) >= 2)
                    continue;
                if ((F28(d1, d2, a, b, p) - 2 * d3 * c * c % p + 2 * p * p) % p != 0)
                    continue;
                // grad = (-8d1^4 a^7 + 8d1^2 d2 a^3 b^2, 4d1^2 d2 a^4 b + 4d2^2 b^3, -4d3 c)
                auto pw = [p](long x, int e) {
                    long r = 1;
                    for (int i = 0; i < e; i++)
                        r = r * x % p;
                    return r;
                };
                long g1 = ((-8 * pw(d1, 4) % p * pw(a, 7) + 8 * d1 * d1 * d2 % p * pw(a, 3) % p *
                                                               pw(b, 2)) %
                               p +
                           p) %
                          p;
                long g2 =
                    ((4 * d1 * d1 * d2 % p * pw(a, 4) % p * b + 4 * d2 * d2 % p * pw(b, 3)) % p +
                     p) %
                    p;
                long g3 = ((-4 * d3 * c) % p + p) % p;
                if (g1 || g2 || g3)
                    return true;  // smooth point lifts by Hensel
                singular.push_back({a, b, c});
            }
        }
    }
    long p2 = p * p;
    for (auto const& [a0, b0, c0] : singular)
        for (long i = 0; i < p; i++)
            for (long j = 0; j < p; j++)
                for (long l = 0; l < p; l++) {
                    long a = a0 + p * i, b = b0 + p * j, c = c0 + p * l;
                    if ((F28(d1, d2, a, b, p2) - 2 * d3 * c % p2 * c % p2 + 2 * p2 * p2) % p2 == 0)
                        return true;  // conservative: do not discard on singular evidence
                }
    return false;
}

bool everywhere_locally_solvable(long d1, long d2, long d3)
{
    // real place: F(0,1) = d2^2 > 0 and F(t,1) -> -inf, so both signs occur; never obstructs
    if (!solvable_at_2(d1, d2, d3))
        return false;
    static long const odd_primes[] = {3,  5,  7,  11, 13, 17, 19, 23, 29, 31, 37, 41, 43,
                                      47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97};
    for (long p : odd_primes)
        if (!solvable_at_odd(d1, d2, d3, p))
            return false;
    return true;
}

int squarefree_int(int n)
{
    Int s = squarefree_part(Int(abs(n)));
    return (n < 0 ? -1 : 1) * static_cast<int>(s.get_si());
}

}  // namespace

QuarticEquation quartic_equation(std::string const& id)
{
    if (id == "(30)+")
        return {id, -64, 16, 1, 1, true};
    if (id == "(30)-")
        return {id, -64, -16, 1, 1, true};
    if (id == "(31)")
        return {id, -1, 2, 1, 2, false};
    if (id == "(32)")
        return {id, -1, -2, 1, -2, false};
    if (id == "(33)+")
        return {id, -4, 4, 1, 1, false};
    if (id == "(33)-")
        return {id, -4, -4, 1, 1, false};
    throw std::invalid_argument("quartic_equation: unknown id " + id);
}

U8Descent u8_descent(int k0)
{
    if (k0 != 1 && k0 != -1 && k0 != 2 && k0 != -2)
        throw std::invalid_argument("u8_descent: k0 must divide 2");
    U8Descent out;
    std::set<std::string> eq_ids;
    for (int d1 : {1, -1, 2, -2})
        for (int d2 : {1, -1, 2, -2})
            for (int d3 : {1, -1, 2, -2}) {
                if (squarefree_int(d1 * d2 * d3) != k0)
                    continue;
                if (!everywhere_locally_solvable(d1, d2, d3))
                    continue;
                out.admissible.push_back({d1, d2, d3, k0});
                // normalized forms of (28): families of Eq (29)
                if (std::abs(d2) == 2 && std::abs(d1) == 1)
                    eq_ids.insert(d2 > 0 ? "(30)+" : "(30)-");
                else if (d2 == 1 && d3 == 1)
                    eq_ids.insert("(31)");
                else if (d2 == -1 && d3 == -1)
                    eq_ids.insert("(32)");
                else if (std::abs(d1) == 2 && std::abs(d2) == 2)
                    eq_ids.insert(d2 > 0 ? "(33)+" : "(33)-");
                else
                    throw std::logic_error("u8_descent: admissible triple outside Eq (29)");
            }
    for (auto const& id : eq_ids)
        out.equations.push_back(quartic_equation(id));
    return out;
}

std::vector<QuarticSolution> bounded_quartic_search(std::string const& id, long height)
{
    if (height < 1)
        throw std::invalid_argument("bounded_quartic_search: height must be >= 1");
    QuarticEquation eq = quartic_equation(id);
    std::vector<QuarticSolution> out;
    for (long a = 0; a <= height; a++) {
        for (long b = 0; b <= height; b++) {
            if (gcd(Int(a), Int(b)) != 1)
                continue;
            if (eq.odd_bc && b % 2 == 0)
                continue;
            Int A = a, B = b;
            Int val = eq.c8 * pow_int(A, 8) + eq.c44 * pow_int(A, 4) * B * B + eq.c04 * pow_int(B, 4);
            // val = crhs * c^2
            if (val % eq.crhs != 0)
                continue;
            Int c2 = val / eq.crhs;
            if (c2 < 0)
                continue;
            Int c = isqrt(c2);
            if (c * c != c2)
                continue;
            if (eq.odd_bc && mpz_even_p(c.get_mpz_t()))
                continue;
            out.push_back({A, B, c});
        }
    }
    std::sort(out.begin(), out.end(), [](QuarticSolution const& x, QuarticSolution const& y) {
        return std::tie(x.a, x.b, x.c) < std::tie(y.a, y.b, y.c);
    });
    return out;
}

UPolynomial u_polynomial(unsigned long n0)
{
    if (n0 < 2)
        throw std::invalid_argument("u_polynomial: n0 must be >= 2");
    // u_1 = u_2 = 1, u_n = u_{n-1} - x u_{n-2}
    std::vector<Int> prev{1}, cur{1};
    for (unsigned long n = 3; n <= n0; n++) {
        std::vector<Int> next = cur;
        next.resize(std::max(cur.size(), prev.size() + 1), 0);
        for (size_t i = 0; i < prev.size(); i++)
            next[i + 1] -= prev[i];
        prev = std::move(cur);
        cur = std::move(next);
    }
    UPolynomial out;
    out.coeffs = cur;
    size_t deg = out.coeffs.size() - 1;
    if (deg != (n0 - 1) / 2)
        throw std::logic_error("u_polynomial: degree mismatch");

    // discriminant via the Sylvester resultant of (u, u'), Bareiss fraction-free elimination
    if (deg >= 1) {
        std::vector<Int> d(deg);
        for (size_t i = 1; i <= deg; i++)
            d[i - 1] = Int(static_cast<long>(i)) * out.coeffs[i];
        size_t m = 2 * deg - 1;
        std::vector<std::vector<Int>> S(m, std::vector<Int>(m, 0));
        for (size_t r = 0; r < deg - 1; r++)  // rows of u, descending coefficients
            for (size_t j = 0; j <= deg; j++)
                S[r][r + j] = out.coeffs[deg - j];
        for (size_t r = 0; r < deg; r++)  // rows of u'
            for (size_t j = 0; j < deg; j++)
                S[deg - 1 + r][r + j] = d[deg - 1 - j];
        Int denom = 1, det = 1;
        int sign = 1;
        for (size_t k = 0; k < m; k++) {
            size_t piv = k;
            while (piv < m && S[piv][k] == 0)
                piv++;
            if (piv == m) {
                det = 0;
                break;
            }
            if (piv != k) {
                std::swap(S[piv], S[k]);
                sign = -sign;
            }
            for (size_t i = k + 1; i < m; i++)
                for (size_t j = k + 1; j < m; j++)
                    S[i][j] = (S[i][j] * S[k][k] - S[i][k] * S[k][j]) / denom;
            denom = S[k][k];
        }
        if (det != 0)
            det = sign * S[m - 1][m - 1];
        // disc = (-1)^{d(d-1)/2} Res(u, u') / lc(u)
        Int res = det;
        if ((deg * (deg - 1) / 2) % 2)
            res = -res;
        out.discriminant = res / out.coeffs[deg];
    } else {
        out.discriminant = 1;
    }
    out.distinct = out.discriminant != 0;

    // roots x_j = 1/(4 cos^2(pi j / n0)) with residual checked at high precision
    mpfr_prec_t prec = 512;
    mpfr_t pi, x, t, acc, resid;
    mpfr_inits2(prec, pi, x, t, acc, resid, static_cast<mpfr_ptr>(nullptr));
    mpfr_const_pi(pi, MPFR_RNDN);
    out.max_residual = 0.0;
    for (size_t j = 1; j <= deg; j++) {
        mpfr_mul_ui(x, pi, j, MPFR_RNDN);
        mpfr_div_ui(x, x, n0, MPFR_RNDN);
        mpfr_cos(x, x, MPFR_RNDN);
        mpfr_sqr(x, x, MPFR_RNDN);
        mpfr_mul_ui(x, x, 4, MPFR_RNDN);
        mpfr_ui_div(x, 1, x, MPFR_RNDN);  // 1/(4 cos^2)
        out.roots.push_back(mpfr_get_d(x, MPFR_RNDN));
        mpfr_set_ui(acc, 0, MPFR_RNDN);
        for (size_t i = out.coeffs.size(); i-- > 0;) {
            mpfr_mul(acc, acc, x, MPFR_RNDN);
            mpfr_set_z(t, out.coeffs[i].get_mpz_t(), MPFR_RNDN);
            mpfr_add(acc, acc, t, MPFR_RNDN);
        }
        mpfr_abs(acc, acc, MPFR_RNDN);
        out.max_residual = std::max(out.max_residual, mpfr_get_d(acc, MPFR_RNDN));
    }
    mpfr_clears(pi, x, t, acc, resid, static_cast<mpfr_ptr>(nullptr));
    return out;
}

}  // namespace lsq
