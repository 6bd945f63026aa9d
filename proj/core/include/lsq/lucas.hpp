#pragma once

#include "lsq/intutil.hpp"

#include <vector>

namespace lsq {

// Parameters (P,Q) of the Lucas sequence U_n = P U_{n-1} - Q U_{n-2}.
// Constraint: P*Q != 0, gcd(P,Q) = 1, D = P^2 - 4Q != 0.
struct LucasParams {
    Int P, Q;

    LucasParams(Int p, Int q) : P(std::move(p)), Q(std::move(q))
    {
        if (P == 0 || Q == 0)
            throw std::invalid_argument("LucasParams: P*Q must be nonzero");
        if (gcd(P, Q) != 1)
            throw std::invalid_argument("LucasParams: gcd(P,Q) must be 1");
        if (D() == 0)
            throw std::invalid_argument("LucasParams: D must be nonzero");
    }

    Int D() const { return P * P - 4 * Q; }

    bool operator==(LucasParams const&) const = default;
};

// (U_n, V_n); construction checks V^2 - D U^2 = 4 Q^n.
struct LucasPair {
    unsigned long n;
    Int u, v;
};

// x = sign * k0 * root^2 with k0 positive squarefree
struct SquareClass {
    int sign;  // +1, -1, or 0 (iff x = 0)
    Int k0;
    Int root;

    Int value() const { return sign * k0 * root * root; }
    bool operator==(SquareClass const&) const = default;
};

struct SearchHit {
    LucasParams params;
    unsigned long n;
    Int k;     // signed squarefree class
    Int root;  // U_n = k * root^2
};

LucasPair lucas_pair(LucasParams const& params, unsigned long n);
Int lucas_u_oracle(LucasParams const& params, unsigned long n);
SquareClass square_class(Int const& x);

std::vector<SearchHit> scan_k_square(Int p_min, Int p_max, Int q_min, Int q_max,
                                     std::vector<unsigned long> const& n_set,
                                     std::vector<Int> const& k_set);

struct LehmerReport {
    Int d;
    bool divides;
};

LehmerReport lehmer_divisibility_check(LucasParams const& params, unsigned long n0,
                                       unsigned long m);

}  // namespace lsq
