#pragma once

#include "lsq/descent.hpp"
#include "lsq/field.hpp"
#include "lsq/lucas.hpp"
#include "lsq/reduction.hpp"
#include "lsq/tm.hpp"

#include <string>
#include <vector>

namespace lsq {

struct CaseDescriptor {
    std::string case_id;  // "k17" | "k84-42" | "k84-43" | "k21"
    FieldSpec spec;
    long z_mult;      // right-hand exponent: z = z_mult * n1 (+ z_off)
    long z_off;
    Int rhs_prime;    // 2 for k17, 17 for k84
    int rhs_sign;     // 0 = both signs admissible, +1 = positive only
    std::vector<std::string> side_conditions;
};

CaseDescriptor make_case(FieldSpec spec, std::string const& case_id);

struct ParityGate {
    long z_mult;
    long z_off;
    std::string description;
};

// z <-> n1 relation implied by the ideal-class bookkeeping in prime_data
ParityGate exponent_parity_gate(CaseDescriptor const& c);

struct TMSolution {
    Int u, v;
    long z;  // full exponent of rhs_prime
    int sign;
    long a1, a2, n1;
};

struct TMSolutionSet {
    std::vector<TMSolution> solutions;
    std::string completeness;  // "bounded-by-config" | "certified-by-reduction"
};

TMSolutionSet solve_case(CaseDescriptor const& c, long n1_max, long a_max,
                         bool use_ratio_prune = true);

struct VerifyResult {
    std::string theorem;
    std::string status;  // "PASS" | "FAIL" | "SKIPPED"
    std::vector<std::string> expected;
    std::vector<std::string> computed;
    std::string detail;
};

VerifyResult verify(std::string const& theorem_id, std::string const& data_dir,
                    long height = 100);

// reduction plumbing
ReductionInputs make_reduction_inputs(FieldSpec const& spec, std::string const& case_id,
                                      long padic_prec = 600, mpfr_prec_t real_prec = 1024);
ReductionConfig default_reduction_config(std::string const& case_id);

}  // namespace lsq
