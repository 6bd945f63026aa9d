#include "lsq/lucas.hpp"

#include <algorithm>

namespace lsq {

namespace {

void check_identity(LucasParams const& params, unsigned long n, Int const& u, Int const& v)
{
    // V_n^2 - D U_n^2 = 4 Q^n  (Eq 16); Q^n with sign for negative Q
    Int qn = pow_int(params.Q, n);
    if (v * v - params.D() * u * u != 4 * qn)
        throw std::logic_error("lucas_pair: identity V^2 - D U^2 = 4 Q^n violated");
}

}  // namespace

LucasPair lucas_pair(LucasParams const& params, unsigned long n)
{
    // fast doubling on (U_k, V_k):
    //   U_{2k} = U_k V_k,          V_{2k} = V_k^2 - 2 Q^k
    //   U_{2k+1} = (P U_{2k} + V_{2k}) / 2,  V_{2k+1} = (D U_{2k} + P V_{2k}) / 2
    Int const& P = params.P;
    Int const& Q = params.Q;
    Int D = params.D();

    Int u = 0, v = 2, qk = 1;  // (U_0, V_0), Q^0
    if (n > 0) {
        unsigned long hibit = 8 * sizeof(unsigned long) - 1;
        while (!((n >> hibit) & 1))
            hibit--;
        for (long i = static_cast<long>(hibit); i >= 0; i--) {
            Int u2 = u * v;
            Int v2 = v * v - 2 * qk;
            qk *= qk;
            if ((n >> i) & 1) {
                Int un = (P * u2 + v2) / 2;
                Int vn = (D * u2 + P * v2) / 2;
                u = un;
                v = vn;
                qk *= Q;
            } else {
                u = u2;
                v = v2;
            }
        }
    }
    check_identity(params, n, u, v);
    return LucasPair{n, u, v};
}

Int lucas_u_oracle(LucasParams const& params, unsigned long n)
{
    if (n == 0)
        return 0;
    Int a = 0, b = 1;  // U_0, U_1
    for (unsigned long i = 1; i < n; i++) {
        Int c = params.P * b - params.Q * a;
        a = b;
        b = c;
    }
    return b;
}

SquareClass square_class(Int const& x)
{
    if (x == 0)
        return SquareClass{0, 1, 0};
    int sign = x < 0 ? -1 : 1;
    Int k0 = 1, root = 1;
    for (auto const& [p, e] : factor(x)) {
        if (e & 1)
            k0 *= p;
        for (unsigned i = 0; i < e / 2; i++)
            root *= p;
    }
    return SquareClass{sign, k0, root};
}

std::vector<SearchHit> scan_k_square(Int p_min, Int p_max, Int q_min, Int q_max,
                                     std::vector<unsigned long> const& n_set,
                                     std::vector<Int> const& k_set)
{
    std::vector<SearchHit> hits;
    for (Int P = p_min; P <= p_max; P++) {
        if (P == 0)
            continue;
        for (Int Q = q_min; Q <= q_max; Q++) {
            if (Q == 0 || gcd(P, Q) != 1 || P * P - 4 * Q == 0)
                continue;
            // degenerate sequences (alpha/beta a root of unity) are periodic and
            // produce trivial squares; the square-class theorems all exclude them
            if (P * P == Q || P * P == 2 * Q || P * P == 3 * Q)
                continue;
            LucasParams params(P, Q);
            for (unsigned long n : n_set) {
                Int u = lucas_pair(params, n).u;
                if (u == 0)
                    continue;
                // test the candidate classes directly: factoring U_64 is hopeless,
                // but "is U_n / k a perfect square" is a single mpz call
                for (Int const& k : k_set) {
                    if ((u < 0) != (k < 0) || u % k != 0)
                        continue;
                    Int quot = u / k;
                    if (is_square(quot))
                        hits.push_back(SearchHit{params, n, k, isqrt(quot)});
                }
            }
        }
    }
    std::sort(hits.begin(), hits.end(), [](SearchHit const& a, SearchHit const& b) {
        return std::tie(a.params.P, a.params.Q, a.n) < std::tie(b.params.P, b.params.Q, b.n);
    });
    return hits;
}

LehmerReport lehmer_divisibility_check(LucasParams const& params, unsigned long n0,
                                       unsigned long m)
{
    if (n0 < 1 || m < 1)
        throw std::invalid_argument("lehmer_divisibility_check: n0, m must be >= 1");
    Int un0 = lucas_pair(params, n0).u;
    if (un0 == 0)
        throw std::invalid_argument("lehmer_divisibility_check: U_{n0} = 0");
    Int un = lucas_pair(params, n0 * m).u;
    Int d = gcd(un0, un / un0);
    bool divides = Int(m) % d == 0;
    return LehmerReport{d, divides};
}

}  // namespace lsq
