#pragma once

#include "lsq/conic.hpp"
#include "lsq/lucas.hpp"

#include <array>
#include <string>
#include <vector>

namespace lsq {

// One prime of the right-hand side, p^(exp_const + exp_m_coeff * m), n = 2m (or 2m+1)
struct RHSPrime {
    Int p;
    long exp_const;
    long exp_m_coeff;
};

// Quartic Thue-Mahler equation F(u,v) = (sign) * prod p^e with congruence side conditions.
struct TMInstance {
    std::array<Int, 5> coeffs;  // c4 u^4 + c3 u^3 v + c2 u^2 v^2 + c1 u v^3 + c0 v^4
    std::vector<int> sign_set;  // subset of {+1,-1}
    std::vector<RHSPrime> rhs_primes;
    std::vector<std::string> side_conditions;  // grammar: "odd(u*v)", "ncong(u*v,0,17)"
    long m_min = 1;
    int m_parity = 0;  // 0 = any, 1 = odd, 2 = even

    Int eval(Int const& u, Int const& v) const
    {
        Int u2 = u * u, v2 = v * v;
        return coeffs[0] * u2 * u2 + coeffs[1] * u2 * u * v + coeffs[2] * u2 * v2 +
               coeffs[3] * u * v2 * v + coeffs[4] * v2 * v2;
    }

    Int discriminant() const;
    std::string render() const;
};

struct DiscardedBranch {
    std::string description;
    Int witness;  // modulus that killed the branch
};

struct TMDerivation {
    std::vector<TMInstance> instances;
    std::vector<DiscardedBranch> discarded;
};

struct TMEvenOptions {
    // m = n/2; powers of two (the section-4 setting) force m even
    int m_parity = 2;
    std::vector<Int> extra_moduli = {5, 7, 8, 9, 11, 13, 16, 32, 64};
};

TMDerivation derive_tm_even(LucasParams const& params, Int const& k,
                            TMEvenOptions const& opts = {});

TMDerivation derive_tm_odd(LucasParams const& params, Int const& k, Triple const& base);

// side-condition helpers
bool side_conditions_hold(std::vector<std::string> const& conds, Int const& u, Int const& v);

}  // namespace lsq
