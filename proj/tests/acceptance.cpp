// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any FAIL.
#include "lsq/lll.hpp"
#include "lsq/pipeline.hpp"

#include <chrono>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <tuple>

using namespace lsq;
using Clock = std::chrono::steady_clock;

namespace {

std::string const data_dir = LSQ_DATA_DIR;
int failures = 0;

void report(int n, bool ok, std::string const& detail)
{
    std::cout << (ok ? "PASS" : "FAIL") << " criterion-" << n << ": " << detail << "\n";
    if (!ok)
        failures++;
}

double seconds_since(Clock::time_point t0)
{
    return std::chrono::duration<double>(Clock::now() - t0).count();
}

CaseDescriptor case_for(std::string const& case_id)
{
    auto spec = load_field_spec(
        data_dir + (case_id == "k17" ? "/field-17.json" : "/field-84.json"));
    return make_case(std::move(spec), case_id);
}

using Sol = std::tuple<Int, Int, long, int>;

std::set<Sol> sol_set(TMSolutionSet const& s)
{
    std::set<Sol> out;
    for (auto const& t : s.solutions)
        out.insert({abs(t.u), abs(t.v), t.z, t.sign});
    return out;
}

// ---- criterion 1: u^4 - 17 v^4 = +-2^z solution set under the certified bounds ----
void criterion1()
{
    auto t0 = Clock::now();
    auto s = solve_case(case_for("k17"), 10, 32);
    double dt = seconds_since(t0);
    bool ok = sol_set(s) == std::set<Sol>{{1, 1, 4, -1}, {3, 1, 6, +1}, {7, 3, 10, +1}};
    ok = ok && dt < 300.0;
    std::ostringstream d;
    d << "k17 search (n1<=10, |a_i|<=32) found " << s.solutions.size()
      << " solutions {(1,1,-2^4),(3,1,2^6),(7,3,2^10)} expected; " << dt << "s (< 300s)";
    report(1, ok, d.str());
}

// ---- criterion 2: u^4 - 84 v^4 = 17^z ----
void criterion2()
{
    auto s43 = solve_case(case_for("k84-43"), 5, 20);
    auto s42 = solve_case(case_for("k84-42"), 5, 20);
    bool ok = sol_set(s43) == std::set<Sol>{{31, 10, 4, +1}} && s42.solutions.empty() &&
              pow_int(Int(31), 4) - 84 * pow_int(Int(10), 4) == pow_int(Int(17), 4);
    std::ostringstream d;
    d << "k84-43 -> {31^4 - 84*10^4 = 17^4} (" << s43.solutions.size()
      << " found), k84-42 -> empty (" << s42.solutions.size() << " found), H<=20, n1<=5";
    report(2, ok, d.str());
}

// ---- criterion 3: K17 reduction cascade shape ----
void criterion3()
{
    auto spec = load_field_spec(data_dir + "/field-17.json");
    auto in = make_reduction_inputs(spec, "k17");
    auto cfg = default_reduction_config("k17");
    bool ok = cfg.initial.N == pow_int(10, 19) && cfg.initial.A == pow_int(10, 30);

    auto [st, trace] = iterate_reduction(in, cfg);
    ok = ok && trace.steps.size() <= 6;

    Int first_m = 0, first_N = 0, first_C = 0, first_A = 0;
    for (auto const& step : trace.steps) {
        if (first_m == 0 && step.kind == "p-adic") {
            first_m = step.param;
            first_N = step.after.N;
        }
        if (first_C == 0 && step.kind == "real") {
            first_C = step.param;
            first_A = step.after.A;
        }
    }
    ok = ok && first_m > 0 && first_m <= 170 && first_N <= 100;
    ok = ok && first_C > 0 && first_C <= pow_int(10, 65) && first_A <= 600;
    // the lattice shapes match the reference computation, so hold the tight bounds
    ok = ok && st.N <= 10 && st.A <= 32;

    std::ostringstream d;
    d << "k17 cascade: " << trace.steps.size() << " steps (<=6); p-adic m=" << first_m
      << " -> N=" << first_N << " (<=100); real C=" << first_C << " -> A=" << first_A
      << " (<=600); final N=" << st.N << " (<=10), A=" << st.A << " (<=32)";
    report(3, ok, d.str());
}

// ---- criterion 4: the descent behind Theorem 4.1 ----
void criterion4()
{
    bool ok = true;
    std::ostringstream d;

    // admissible (delta1, delta2, delta3) triples for k0 = +-1
    auto triple_set = [](int k0) {
        std::set<std::tuple<int, int, int>> s;
        for (auto const& t : u8_descent(k0).admissible)
            s.insert({t.d1, t.d2, t.d3});
        return s;
    };
    ok = ok && triple_set(1) == std::set<std::tuple<int, int, int>>{
                                    {1, 2, 2}, {-1, -2, 2}, {1, 1, 1}, {1, -1, -1}};
    ok = ok && triple_set(-1) == std::set<std::tuple<int, int, int>>{
                                     {-1, 2, 2}, {1, -2, 2}, {-1, 1, 1}, {-1, -1, -1}};

    // quartic solution lists at height 100
    auto sols = [](char const* id) {
        std::set<std::tuple<long, long, long>> s;
        for (auto const& q : bounded_quartic_search(id, 100))
            s.insert({q.a.get_si(), q.b.get_si(), q.c.get_si()});
        return s;
    };
    using S = std::set<std::tuple<long, long, long>>;
    ok = ok && sols("(30)+") == S{{0, 1, 1}, {1, 5, 31}};
    ok = ok && sols("(30)-") == S{{0, 1, 1}};
    ok = ok && sols("(31)") == S{{1, 1, 1}, {1, 3, 7}};
    ok = ok && sols("(32)") == S{{1, 1, 1}};
    ok = ok && sols("(33)+") == S{{0, 1, 1}, {1, 1, 1}};
    ok = ok && sols("(33)-") == S{{0, 1, 1}};

    // full mapping back to (P,Q), including emptiness for k0 = +-2
    auto v = verify("thm41", data_dir);
    ok = ok && v.status == "PASS";

    d << "k0=+-1 descent triples match; quartic lists at height 100 match; "
      << "(P,Q) mapping -> {(1,-4),(4,-17)} " << v.status
      << " (completeness paper-cited beyond the searched height)";
    report(4, ok, d.str());
}

// ---- criterion 5: square-class scan over |P|,|Q| <= 100, n in {8,16,32,64} ----
void criterion5()
{
    auto t0 = Clock::now();
    auto v = verify("thm42", data_dir);
    double dt = seconds_since(t0);
    bool ok = v.status == "PASS" && dt < 120.0;
    ok = ok && lucas_pair(LucasParams(1, -4), 8).u == 441;
    ok = ok && lucas_pair(LucasParams(4, -17), 8).u == 384400 &&
         is_square(Int(384400)) && isqrt(Int(384400)) == 620;
    std::ostringstream d;
    d << "scan -> only (8,+-1,-4),(8,+-4,-17); U_8(1,-4)=441=21^2, U_8(4,-17)=384400=620^2; "
      << dt << "s (< 120s); " << v.status;
    report(5, ok, d.str());
}

// ---- criterion 6: published values reproduce ----
void criterion6()
{
    auto v = verify("literature", data_dir);
    bool ok = v.status == "PASS";
    ok = ok && lucas_pair(LucasParams(1, -1), 12).u == 144;
    ok = ok && lucas_pair(LucasParams(2, -1), 7).u == 169;
    ok = ok && lucas_pair(LucasParams(3, 1), 6).u == 144;
    ok = ok && lucas_pair(LucasParams(338, 1), 4).u == Int(6214) * 6214;
    ok = ok && lucas_pair(LucasParams(1, -1), 6).u == 2 * 2 * 2;     // 2*2^2
    ok = ok && lucas_pair(LucasParams(4, -1), 4).u == 2 * 6 * 6;
    ok = ok && lucas_pair(LucasParams(1, -1), 4).u == 3;             // 3*1^2
    ok = ok && lucas_pair(LucasParams(2, -1), 4).u == 12;            // 3*2^2
    ok = ok && lucas_pair(LucasParams(24, -1), 4).u == 3 * Int(68) * 68;
    report(6, ok, std::string("classical squares and almost-squares reproduce; ") + v.status);
}

// ---- criterion 7: property suites (a)-(g) ----
bool suite_lucas()
{
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<long> coef(-20, 20), idx(0, 200);
    int done = 0;
    while (done < 1000) {
        long P = coef(rng), Q = coef(rng);
        if (P == 0 || Q == 0 || std::gcd(P, Q) != 1 || P * P - 4 * Q == 0)
            continue;
        LucasParams params(P, Q);
        unsigned long n = idx(rng);
        LucasPair pr = lucas_pair(params, n);
        if (pr.u != lucas_u_oracle(params, n))
            return false;
        if (pr.v * pr.v - params.D() * pr.u * pr.u != 4 * pow_int(Int(Q), n))
            return false;
        done++;
    }
    return true;
}

bool suite_lehmer()
{
    std::mt19937_64 rng(777);
    std::uniform_int_distribution<long> coef(-15, 15), small(1, 12);
    int done = 0;
    while (done < 1000) {
        long P = coef(rng), Q = coef(rng);
        if (P == 0 || Q == 0 || std::gcd(P, Q) != 1 || P * P - 4 * Q == 0)
            continue;
        LucasParams params(P, Q);
        unsigned long n0 = small(rng), m = small(rng);
        if (lucas_pair(params, n0).u == 0)
            continue;
        if (!lehmer_divisibility_check(params, n0, m).divides)
            return false;
        done++;
    }
    return true;
}

bool suite_lattice()
{
    std::mt19937_64 rng(31337);
    std::uniform_int_distribution<long> entry(-1000000, 1000000);
    auto norm_sq = [](std::vector<Int> const& v) {
        Int s = 0;
        for (auto const& x : v)
            s += x * x;
        return s;
    };
    int done = 0;
    while (done < 1000) {
        IntegerLattice lat{{{entry(rng), entry(rng)}, {entry(rng), entry(rng)}}};
        if (lat.basis[0][0] * lat.basis[1][1] - lat.basis[0][1] * lat.basis[1][0] == 0)
            continue;
        if (norm_sq(gauss_reduce(lat).basis[0]) > exhaustive_shortest_sq(lat, 20))
            return false;
        done++;
    }
    done = 0;
    while (done < 100) {
        IntegerLattice lat{{{entry(rng), entry(rng), entry(rng)},
                            {entry(rng), entry(rng), entry(rng)},
                            {entry(rng), entry(rng), entry(rng)}}};
        try {
            auto r = lll_reduce(lat);
            Int best = exhaustive_shortest_sq(lat, 8);
            if (norm_sq(r.basis[0]) > 4 * best)
                return false;
            if (gs_min_norm_sq(r) > Rat(best))
                return false;
        } catch (std::invalid_argument const&) {
            continue;  // dependent basis
        }
        done++;
    }
    return true;
}

bool suite_hensel()
{
    std::mt19937_64 rng(4242);
    int done = 0;
    while (done < 100) {
        Int p = (done % 2 == 0) ? 2 : 17;
        int deg = (done % 3 == 0) ? 2 : 4;
        long s = (p == 2) ? ((deg == 4) ? 2 : 1) : 0;
        long prec = 40;
        Int mod = pow_int(p, prec);
        Int u = Int(rng()) % mod;
        if (u % p == 0 || u < 2)
            continue;
        Int a = powmod(u, deg, mod);
        Int selmod = pow_int(p, 2 * s + 1);
        auto root = hensel_root(a, deg, p, prec, ResidueSelector{u % selmod, selmod});
        if (root.a % selmod != u % selmod)
            return false;
        Int check_mod = pow_int(p, prec - 2 * s - 1);
        if ((powmod(root.a, deg, check_mod) - a % check_mod) % check_mod != 0)
            return false;
        done++;
    }
    return true;
}

bool suite_lambda()
{
    auto spec = load_field_spec(data_dir + "/field-17.json");
    auto ctx = make_lambda_context(spec, "k17", 400);
    // ord_2(lambda) = 2 n1 at each of the three k17 solutions
    return lambda_ord(ctx, 1, 0) == Rat(2) && lambda_ord(ctx, 2, -1) == Rat(4) &&
           lambda_ord(ctx, 4, -1) == Rat(8);
}

bool suite_upoly()
{
    for (unsigned long n0 = 8; n0 <= 64; n0++) {
        auto up = u_polynomial(n0);
        if (!up.distinct || up.discriminant == 0 || up.max_residual >= 1e-9)
            return false;
    }
    return true;
}

void criterion7()
{
    struct Suite {
        char const* name;
        bool ok;
    };
    Suite suites[] = {
        {"(a,b) doubling vs naive + identity(16)", suite_lucas()},
        {"(c) Lehmer divisibility", suite_lehmer()},
        {"(d) lattice reduction vs exhaustive", suite_lattice()},
        {"(e) hensel self-check", suite_hensel()},
        {"(f) ord(lambda)=2*n1 at k17 solutions", suite_lambda()},
        {"(g) u-polynomial distinct roots", suite_upoly()},
    };
    bool ok = true;
    std::ostringstream d;
    for (auto const& s : suites) {
        ok = ok && s.ok;
        d << s.name << (s.ok ? " ok; " : " FAILED; ");
    }
    report(7, ok, d.str());
}

// ---- criterion 8: p-adic digit anchors ----
void criterion8()
{
    auto th2 = hensel_root(17, 4, 2, 64, ResidueSelector{13, 16});
    bool ok = th2.a % 16 == 13;
    ok = ok && th2.digits(12).rfind("0.101101011011", 0) == 0;

    auto th17 = hensel_root(84, 4, 17, 20, ResidueSelector{8, 17});
    ok = ok && th17.a % 289 == 229;  // 8 + 13*17

    std::ostringstream d;
    d << "theta in Q_2: residue " << (th2.a % 16) << " mod 16, digits "
      << th2.digits(12) << "; theta in Q_17: " << (th17.a % 289) << " mod 289 (= 8 + 13*17)";
    report(8, ok, d.str());
}

}  // namespace

int main()
{
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
    } catch (std::exception const& e) {
        std::cout << "FAIL (exception): " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " (" << (8 - failures)
              << "/8)\n";
    return failures == 0 ? 0 : 1;
}
