#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

namespace lsq {

using Int = mpz_class;
using Rat = mpq_class;

inline Int abs(Int const& x) { return x < 0 ? Int(-x) : x; }

inline bool is_square(Int const& x)
{
    return x >= 0 && mpz_perfect_square_p(x.get_mpz_t());
}

inline Int isqrt(Int const& x)
{
    if (x < 0)
        throw std::domain_error("isqrt of negative");
    Int r;
    mpz_sqrt(r.get_mpz_t(), x.get_mpz_t());
    return r;
}

// largest e with p^e | x (x != 0)
inline long valuation(Int x, Int const& p)
{
    if (x == 0)
        throw std::domain_error("valuation of zero");
    long e = 0;
    while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
        x /= p;
        e++;
    }
    return e;
}

inline Int pow_int(Int const& b, unsigned long e)
{
    Int r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

inline Int powmod(Int const& b, Int const& e, Int const& m)
{
    Int r;
    mpz_powm(r.get_mpz_t(), b.get_mpz_t(), e.get_mpz_t(), m.get_mpz_t());
    return r;
}

inline Int invmod(Int const& a, Int const& m)
{
    Int r;
    if (!mpz_invert(r.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t()))
        throw std::domain_error("invmod: not invertible");
    return r;
}

inline Int gcd(Int const& a, Int const& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// trial-division factorization; adequate for the desk-scale inputs here
inline std::vector<std::pair<Int, unsigned>> factor(Int x, unsigned long prime_bound = 1000000)
{
    std::vector<std::pair<Int, unsigned>> out;
    if (x == 0)
        throw std::domain_error("factor of zero");
    x = abs(x);
    for (Int p = 2; p * p <= x && p <= prime_bound; p == 2 ? p = 3 : p += 2) {
        unsigned e = 0;
        while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
            x /= p;
            e++;
        }
        if (e)
            out.emplace_back(p, e);
    }
    if (x > 1)
        out.emplace_back(x, 1);
    return out;
}

// all positive divisors of |x|
inline std::vector<Int> divisors(Int const& x)
{
    std::vector<Int> out{1};
    for (auto const& [p, e] : factor(x)) {
        size_t n = out.size();
        Int pk = 1;
        for (unsigned i = 1; i <= e; i++) {
            pk *= p;
            for (size_t j = 0; j < n; j++)
                out.push_back(out[j] * pk);
        }
    }
    return out;
}

inline Int squarefree_part(Int const& x)
{
    if (x == 0)
        return 1;
    Int k = 1;
    for (auto const& [p, e] : factor(x))
        if (e & 1)
            k *= p;
    return x < 0 ? Int(-k) : k;
}

inline long to_long(Int const& x)
{
    if (!x.fits_slong_p())
        throw std::overflow_error("to_long overflow");
    return x.get_si();
}

}  // namespace lsq
