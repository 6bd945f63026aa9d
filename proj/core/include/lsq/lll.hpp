#pragma once

#include "lsq/intutil.hpp"

#include <vector>

namespace lsq {

struct IntegerLattice {
    std::vector<std::vector<Int>> basis;
};

// Lovasz-reduced (parameter 3/4) basis over exact integer/rational arithmetic; dim 2 or 3
IntegerLattice lll_reduce(IntegerLattice const& lat);

// exact 2-dim Gauss (Lagrange) reduction: first vector is a true shortest vector
IntegerLattice gauss_reduce(IntegerLattice const& lat);

// min_i |b_i*|^2 over the Gram-Schmidt vectors: a lower bound on the squared
// length of every nonzero lattice vector
Rat gs_min_norm_sq(IntegerLattice const& lat);

// brute-force shortest nonzero vector squared length, coefficients in [-range, range]
Int exhaustive_shortest_sq(IntegerLattice const& lat, long range);

}  // namespace lsq
