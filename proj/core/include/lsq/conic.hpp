#pragma once

#include "lsq/intutil.hpp"

#include <array>
#include <optional>

namespace lsq {

// A X^2 + B Y^2 + C Z^2 = 0
struct ConicForm {
    Int A, B, C;

    ConicForm(Int a, Int b, Int c) : A(std::move(a)), B(std::move(b)), C(std::move(c))
    {
        if (A == 0 || B == 0 || C == 0)
            throw std::invalid_argument("ConicForm: coefficients must be nonzero");
    }

    Int eval(Int const& x, Int const& y, Int const& z) const
    {
        return A * x * x + B * y * y + C * z * z;
    }
};

// binary quadratic form q(S,T) = a S^2 + b S T + c T^2
struct Quad {
    Int a, b, c;
    Int eval(Int const& s, Int const& t) const { return a * s * s + b * s * t + c * t * t; }
};

// All primitive solutions of the conic arise as (q_X(S,T), q_Y(S,T), q_Z(S,T)) / delta
// with gcd(S,T)=1 and delta | divisor_bound.
struct ConicParametrization {
    ConicForm form;
    Quad qx, qy, qz;
    Int divisor_bound;  // |det of the 3x3 coefficient matrix|

    // determinant of the coefficient matrix of (qx,qy,qz) over (S^2, ST, T^2)
    Int det() const
    {
        return qx.a * (qy.b * qz.c - qy.c * qz.b) - qx.b * (qy.a * qz.c - qy.c * qz.a) +
               qx.c * (qy.a * qz.b - qy.b * qz.a);
    }
};

struct Triple {
    Int x, y, z;
};

// exhaustive search for a primitive solution with z != 0 up to the height bound
std::optional<Triple> legendre_solve(ConicForm const& form, Int const& height);

ConicParametrization parametrize_conic(ConicForm const& form, Triple const& base);

}  // namespace lsq
