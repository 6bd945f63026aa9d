#pragma once

#include "lsq/intutil.hpp"

#include <string>
#include <vector>

namespace lsq {

// (delta1, delta2, delta3), each dividing 2, with k0 = delta1*delta2*delta3 mod squares
struct DescentTriple {
    int d1, d2, d3;
    int k0;
};

// c8 a^8 + c44 a^4 b^2 + c04 b^4 = crhs c^2, gcd(a,b) = 1 (+ b,c odd when odd_bc)
struct QuarticEquation {
    std::string id;  // "(30)+", "(30)-", "(31)", "(32)", "(33)+", "(33)-"
    Int c8, c44, c04, crhs;
    bool odd_bc = false;
};

struct U8Descent {
    std::vector<DescentTriple> admissible;
    std::vector<QuarticEquation> equations;
};

struct QuarticSolution {
    Int a, b, c;  // representative with a,b,c >= 0
};

struct UPolynomial {
    std::vector<Int> coeffs;    // ascending powers of x
    std::vector<double> roots;  // 1/(4 cos^2(pi j / n0)), j = 1..deg
    Int discriminant;
    bool distinct;        // discriminant != 0
    double max_residual;  // |u_{n0}(root)| maximized over the claimed roots
};

U8Descent u8_descent(int k0);

QuarticEquation quartic_equation(std::string const& id);

std::vector<QuarticSolution> bounded_quartic_search(std::string const& id, long height);

UPolynomial u_polynomial(unsigned long n0);

}  // namespace lsq
