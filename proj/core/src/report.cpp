#include "lsq/report.hpp"

#include <json.hpp>

namespace lsq {

namespace {

using nlohmann::ordered_json;

std::string dec(Int const& x) { return x.get_str(); }

ordered_json header(std::string const& kind)
{
    ordered_json j;
    j["schema_version"] = "1";
    j["kind"] = kind;
    return j;
}

std::string dump(ordered_json const& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string report_solution_set(CaseDescriptor const& c, TMSolutionSet const& s)
{
    ordered_json j = header("solution-set");
    j["case"] = c.case_id;
    j["rhs_prime"] = dec(c.rhs_prime);
    j["side_conditions"] = c.side_conditions;
    j["completeness"] = s.completeness;
    j["solutions"] = ordered_json::array();
    for (auto const& sol : s.solutions) {
        ordered_json js;
        js["u"] = dec(sol.u);
        js["v"] = dec(sol.v);
        js["z"] = sol.z;
        js["sign"] = sol.sign;
        js["n1"] = sol.n1;
        js["a1"] = sol.a1;
        js["a2"] = sol.a2;
        j["solutions"].push_back(js);
    }
    return dump(j);
}

std::string report_verify(VerifyResult const& r)
{
    ordered_json j = header("verify");
    j["theorem"] = r.theorem;
    j["status"] = r.status;
    j["expected"] = r.expected;
    j["computed"] = r.computed;
    j["detail"] = r.detail;
    return dump(j);
}

std::string report_reduction(std::string const& case_id, ReductionTrace const& trace,
                             BoundState const& final_state)
{
    ordered_json j = header("reduction");
    j["case"] = case_id;
    j["steps"] = ordered_json::array();
    for (auto const& st : trace.steps) {
        ordered_json js;
        js["kind"] = st.kind;
        js["param"] = dec(st.param);
        js["before"] = {{"N", dec(st.before.N)}, {"A", dec(st.before.A)}};
        js["after"] = {{"N", dec(st.after.N)}, {"A", dec(st.after.A)}};
        js["progressed"] = st.progressed;
        j["steps"].push_back(js);
    }
    j["final"] = {{"N", dec(final_state.N)}, {"A", dec(final_state.A)}};
    return dump(j);
}

std::string report_derivation(LucasParams const& params, Int const& k, TMDerivation const& d)
{
    ordered_json j = header("tm-derivation");
    j["P"] = dec(params.P);
    j["Q"] = dec(params.Q);
    j["k"] = dec(k);
    j["instances"] = ordered_json::array();
    for (auto const& inst : d.instances) {
        ordered_json ji;
        ji["equation"] = inst.render();
        ji["coeffs"] = ordered_json::array();
        for (auto const& c : inst.coeffs)
            ji["coeffs"].push_back(dec(c));
        ji["signs"] = inst.sign_set;
        ji["rhs"] = ordered_json::array();
        for (auto const& rp : inst.rhs_primes)
            ji["rhs"].push_back({{"p", dec(rp.p)},
                                 {"exp_const", rp.exp_const},
                                 {"exp_m_coeff", rp.exp_m_coeff}});
        ji["side_conditions"] = inst.side_conditions;
        ji["m_min"] = inst.m_min;
        ji["m_parity"] = inst.m_parity;
        ji["discriminant"] = dec(inst.discriminant());
        j["instances"].push_back(ji);
    }
    j["discarded"] = ordered_json::array();
    for (auto const& br : d.discarded)
        j["discarded"].push_back({{"description", br.description}, {"witness", dec(br.witness)}});
    return dump(j);
}

std::string report_eval(LucasParams const& params, unsigned long n, LucasPair const& pair,
                        SquareClass const& sc)
{
    ordered_json j = header("eval");
    j["P"] = dec(params.P);
    j["Q"] = dec(params.Q);
    j["n"] = n;
    j["U"] = dec(pair.u);
    j["V"] = dec(pair.v);
    j["square_class"] = {{"sign", sc.sign}, {"k0", dec(sc.k0)}, {"root", dec(sc.root)}};
    return dump(j);
}

std::string report_scan(std::vector<SearchHit> const& hits)
{
    ordered_json j = header("scan");
    j["hits"] = ordered_json::array();
    for (auto const& h : hits)
        j["hits"].push_back({{"P", dec(h.params.P)},
                             {"Q", dec(h.params.Q)},
                             {"n", h.n},
                             {"k", dec(h.k)},
                             {"root", dec(h.root)}});
    return dump(j);
}

}  // namespace lsq
