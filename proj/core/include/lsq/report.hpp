#pragma once

#include "lsq/pipeline.hpp"
#include "lsq/reduction.hpp"
#include "lsq/tm.hpp"

#include <string>

namespace lsq {

// JSON reports, schema_version "1"; all big integers as decimal strings
std::string report_solution_set(CaseDescriptor const& c, TMSolutionSet const& s);
std::string report_verify(VerifyResult const& r);
std::string report_reduction(std::string const& case_id, ReductionTrace const& trace,
                             BoundState const& final_state);
std::string report_derivation(LucasParams const& params, Int const& k,
                              TMDerivation const& d);
std::string report_eval(LucasParams const& params, unsigned long n, LucasPair const& pair,
                        SquareClass const& sc);
std::string report_scan(std::vector<SearchHit> const& hits);

}  // namespace lsq
