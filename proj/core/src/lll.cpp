#include "lsq/lll.hpp"

#include <stdexcept>

namespace lsq {

namespace {

Int dot(std::vector<Int> const& u, std::vector<Int> const& v)
{
    Int s = 0;
    for (size_t i = 0; i < u.size(); i++)
        s += u[i] * v[i];
    return s;
}

Rat dotq(std::vector<Rat> const& u, std::vector<Rat> const& v)
{
    Rat s = 0;
    for (size_t i = 0; i < u.size(); i++)
        s += u[i] * v[i];
    return s;
}

// nearest integer to an exact rational (ties toward even via floor of x + 1/2)
Int round_rat(Rat const& x)
{
    Rat h = x + Rat(1, 2);
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), h.get_num_mpz_t(), h.get_den_mpz_t());
    return q;
}

struct GS {
    std::vector<std::vector<Rat>> star;
    std::vector<Rat> norms;
    std::vector<std::vector<Rat>> mu;
};

GS gram_schmidt(std::vector<std::vector<Int>> const& B)
{
    size_t n = B.size(), d = B[0].size();
    GS g;
    g.mu.assign(n, std::vector<Rat>(n, Rat(0)));
    for (size_t i = 0; i < n; i++) {
        std::vector<Rat> v(d);
        for (size_t k = 0; k < d; k++)
            v[k] = Rat(B[i][k]);
        for (size_t j = 0; j < i; j++) {
            std::vector<Rat> bi(d);
            for (size_t k = 0; k < d; k++)
                bi[k] = Rat(B[i][k]);
            if (g.norms[j] == 0)
                throw std::invalid_argument("lll_reduce: dependent basis");
            g.mu[i][j] = dotq(bi, g.star[j]) / g.norms[j];
            for (size_t k = 0; k < d; k++)
                v[k] -= g.mu[i][j] * g.star[j][k];
        }
        g.star.push_back(v);
        g.norms.push_back(dotq(v, v));
        if (g.norms.back() == 0)
            throw std::invalid_argument("lll_reduce: dependent basis");
    }
    return g;
}

}  // namespace

IntegerLattice lll_reduce(IntegerLattice const& lat)
{
    auto B = lat.basis;
    size_t n = B.size();
    if (n < 2 || n > 3)
        throw std::invalid_argument("lll_reduce: dimension must be 2 or 3");
    for (auto const& v : B)
        if (v.size() != B[0].size())
            throw std::invalid_argument("lll_reduce: ragged basis");

    size_t idx = 1;
    while (idx < n) {
        GS g = gram_schmidt(B);
        for (size_t j = idx; j-- > 0;) {
            // recompute mu against the current (possibly updated) B[idx]
            std::vector<Rat> bi(B[idx].size());
            for (size_t k = 0; k < bi.size(); k++)
                bi[k] = Rat(B[idx][k]);
            Rat m = dotq(bi, g.star[j]) / g.norms[j];
            Int r = round_rat(m);
            if (r != 0)
                for (size_t k = 0; k < B[idx].size(); k++)
                    B[idx][k] -= r * B[j][k];
        }
        g = gram_schmidt(B);
        if (g.norms[idx] >= (Rat(3, 4) - g.mu[idx][idx - 1] * g.mu[idx][idx - 1]) *
                                g.norms[idx - 1]) {
            idx++;
        } else {
            std::swap(B[idx], B[idx - 1]);
            idx = idx > 1 ? idx - 1 : 1;
        }
    }
    return IntegerLattice{B};
}

IntegerLattice gauss_reduce(IntegerLattice const& lat)
{
    if (lat.basis.size() != 2)
        throw std::invalid_argument("gauss_reduce: dimension must be 2");
    auto b1 = lat.basis[0], b2 = lat.basis[1];
    while (true) {
        if (dot(b1, b1) > dot(b2, b2))
            std::swap(b1, b2);
        Int d = dot(b1, b1);
        if (d == 0)
            throw std::invalid_argument("gauss_reduce: dependent basis");
        Int mu = round_rat(Rat(dot(b1, b2), d));
        for (size_t k = 0; k < b2.size(); k++)
            b2[k] -= mu * b1[k];
        if (dot(b2, b2) >= d)
            return IntegerLattice{{b1, b2}};
    }
}

Rat gs_min_norm_sq(IntegerLattice const& lat)
{
    GS g = gram_schmidt(lat.basis);
    Rat mn = g.norms[0];
    for (auto const& n : g.norms)
        if (n < mn)
            mn = n;
    return mn;
}

Int exhaustive_shortest_sq(IntegerLattice const& lat, long range)
{
    size_t n = lat.basis.size(), d = lat.basis[0].size();
    Int best = -1;
    std::vector<long> c(n, -range);
    while (true) {
        bool all_zero = true;
        for (long x : c)
            if (x)
                all_zero = false;
        if (!all_zero) {
            std::vector<Int> v(d, 0);
            for (size_t i = 0; i < n; i++)
                for (size_t k = 0; k < d; k++)
                    v[k] += c[i] * lat.basis[i][k];
            Int nn = dot(v, v);
            if (best < 0 || nn < best)
                best = nn;
        }
        size_t i = 0;
        while (i < n && c[i] == range)
            c[i++] = -range;
        if (i == n)
            break;
        c[i]++;
    }
    return best;
}

}  // namespace lsq
