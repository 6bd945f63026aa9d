#include "lsq/reduction.hpp"

#include <stdexcept>

namespace lsq {

namespace {

// box half-widths (X1, X2, X3) for the exponent vector of the linear form
void box_sizes(RedCase rc, BoundState const& st, Int& X1, Int& X2, Int& X3)
{
    Int H = st.H();
    switch (rc) {
        case RedCase::K17:
            // x1 = 1-2n1, x2 = a1, x3 = 2a0 + n1 with |a0| <= 2H+1
            X1 = 2 * st.N + 1;
            X2 = st.A;
            X3 = 2 * (2 * H + 1) + st.N;
            break;
        case RedCase::K84_42:
        case RedCase::K84_43:
            // x1 = n1, x2 = a1, x3 = 1-4a0 with |a0| <= 2H+1
            X1 = st.N;
            X2 = H;
            X3 = 8 * H + 5;
            break;
    }
}

// the bound on n1 implied by ord(Lambda1) < m + ord(log delta)
Int implied_n1_bound(RedCase rc, long m)
{
    switch (rc) {
        case RedCase::K17:
            // ord_2(lambda) = 2n1 and ord(log delta) = 2: 2n1 < m+2
            return Int((m + 1) / 2);
        case RedCase::K84_43:
            // ord_17(lambda) = z = 2n1 and ord(log delta) = 1: z <= m
            return Int(m / 2);
        case RedCase::K84_42:
            // z = n1
            return Int(m);
    }
    return Int(m);
}

Int stable_floor(Real const& x, Int const& C)
{
    // C * x must be safely away from an integer for the floor to be trustworthy
    Real cx = Real::from(C, x.prec()) * x;
    Int f = cx.floor();
    Real frac = cx - Real::from(f, x.prec());
    Real eps = Real::from(1e-15, x.prec());
    Real one = Real::from(Int(1), x.prec());
    if (frac < eps || one - frac < eps)
        throw std::runtime_error("real_reduction_step: insufficient precision for floor(C*Arg)");
    return f;
}

}  // namespace

std::optional<Int> padic_reduction_step(ReductionInputs const& in, long m, BoundState const& st)
{
    if (m > in.ratio_prec)
        throw std::runtime_error("padic_reduction_step: requested m exceeds available p-adic "
                                 "precision; recompute logs with larger precision");
    Int X1, X2, X3;
    box_sizes(in.rc, st, X1, X2, X3);
    Int pm = pow_int(in.p, m);
    Int tm = ((in.log_ratio % pm) + pm) % pm;
    // lattice {(x1, x2) : x1 + x2 * t_m == 0 mod p^m}, first coordinate weighted
    Int w = std::max(Int(1), Int(X2 / X1));
    IntegerLattice lat{{{pm * w, 0}, {tm * w, 1}}};
    IntegerLattice red = gauss_reduce(lat);
    Int ell2 = red.basis[0][0] * red.basis[0][0] + red.basis[0][1] * red.basis[0][1];
    Int box2 = (X1 * w) * (X1 * w) + X2 * X2;
    if (ell2 <= box2)
        return std::nullopt;  // no certificate at this m
    return implied_n1_bound(in.rc, m);
}

std::optional<Int> real_reduction_step(ReductionInputs const& in, Int const& C,
                                       BoundState const& st)
{
    Int X1, X2, X3;
    box_sizes(in.rc, st, X1, X2, X3);
    Int c1 = stable_floor(in.arg_delta, C);
    Int c2 = stable_floor(in.arg_beta, C);
    Int c3 = stable_floor(in.mu3, C);
    Int Xm = std::max(X1, X2);
    Int w1 = std::max(Int(1), Int(Xm / X1));
    Int w2 = std::max(Int(1), Int(Xm / X2));
    IntegerLattice lat{{{w1, 0, c1}, {0, w2, c2}, {0, 0, c3}}};
    IntegerLattice red = lll_reduce(lat);
    Rat ell2 = gs_min_norm_sq(red);  // lower bound on the shortest vector
    Int Q = (X1 * w1) * (X1 * w1) + (X2 * w2) * (X2 * w2);
    if (ell2 <= Rat(Q))
        return std::nullopt;
    Rat diff = ell2 - Rat(Q);
    Int T = isqrt(diff.get_num() / diff.get_den());
    Int E = X1 + X2 + X3;
    if (T <= E)
        return std::nullopt;
    // |Lambda0| >= (T - E)/C together with |Lambda0| < 1.02 c21 exp(-c16 A)
    mpfr_prec_t prec = 256;
    Real lhs = Real::from(Int(T - E), prec).log();
    Real rhs = Real::from(1.02 * in.c21, prec).log() + Real::from(C, prec).log();
    Real newA = (rhs - lhs) / Real::from(in.c16, prec);
    Int a = newA.floor() + 1;
    return a < 1 ? Int(1) : a;
}

std::pair<BoundState, ReductionTrace> iterate_reduction(ReductionInputs const& in,
                                                        ReductionConfig const& cfg)
{
    BoundState st = cfg.initial;
    ReductionTrace trace;
    int steps = 0;
    while (true) {
        bool improved = false;

        // p-adic step: the smallest m that certifies also gives the best bound
        {
            BoundState before = st;
            std::optional<Int> got;
            Int used_m = 0;
            for (long m : cfg.m_ladder) {
                if (implied_n1_bound(in.rc, m) >= st.N)
                    break;  // larger m only worsens the implied bound
                auto r = padic_reduction_step(in, m, st);
                if (r) {
                    got = r;
                    used_m = m;
                    break;
                }
            }
            if (got && *got < st.N) {
                st.N = *got;
                // keep iterating only while a bound at least halves; marginal
                // gains are not worth further rounds
                improved = improved || before.N > 2 * st.N;
            }
            trace.steps.push_back({"p-adic", used_m, before, st, got.has_value()});
            if (++steps > cfg.max_steps)
                throw std::runtime_error("iterate_reduction: step budget exhausted");
        }

        // real step: the smallest certifying C
        {
            BoundState before = st;
            std::optional<Int> got;
            Int used_c = 0;
            for (Int const& C : cfg.c_ladder) {
                auto r = real_reduction_step(in, C, st);
                if (r && *r < st.A) {
                    got = r;
                    used_c = C;
                    break;
                }
            }
            if (got) {
                st.A = *got;
                improved = improved || before.A > 2 * st.A;
            }
            trace.steps.push_back({"real", used_c, before, st, got.has_value()});
            if (++steps > cfg.max_steps)
                throw std::runtime_error("iterate_reduction: step budget exhausted");
        }

        if (!improved)
            break;
    }
    return {st, trace};
}

}  // namespace lsq
