#pragma once

#include "lsq/intutil.hpp"
#include "lsq/lll.hpp"
#include "lsq/real.hpp"

#include <optional>
#include <string>
#include <vector>

namespace lsq {

struct BoundState {
    Int N;  // bound on n1
    Int A;  // bound on max(|a1|, |a2|)
    Int H() const { return std::max(N, A); }
};

struct ReductionStepRecord {
    std::string kind;  // "p-adic" | "real"
    Int param;         // m or C
    BoundState before, after;
    bool progressed;
};

struct ReductionTrace {
    std::vector<ReductionStepRecord> steps;
};

enum class RedCase { K17, K84_42, K84_43 };

// everything the two lattice steps need, extracted once from the field data
struct ReductionInputs {
    RedCase rc;
    Int p;
    Int log_ratio;    // integer approximant of log(beta)/log(delta) mod p^ratio_prec
    long ratio_prec;  // p-adic digits available in log_ratio
    Real arg_delta, arg_beta, mu3;  // mu3 = pi (K17) or pi/2 (K84)
    double c16 = 0.5;
    double c21 = 10.0;
};

// no-progress is signalled by nullopt ("raise m" / "raise C")
std::optional<Int> padic_reduction_step(ReductionInputs const& in, long m, BoundState const& st);
std::optional<Int> real_reduction_step(ReductionInputs const& in, Int const& C,
                                       BoundState const& st);

struct ReductionConfig {
    BoundState initial;
    std::vector<long> m_ladder;  // candidate p-adic precisions, ascending
    std::vector<Int> c_ladder;   // candidate C values, ascending
    int max_steps = 20;
};

std::pair<BoundState, ReductionTrace> iterate_reduction(ReductionInputs const& in,
                                                        ReductionConfig const& cfg);

}  // namespace lsq
