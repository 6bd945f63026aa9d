#include "lsq/tm.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace lsq {

Int TMInstance::discriminant() const
{
    // discriminant of a t^4 + b t^3 + c t^2 + d t + e
    Int const &a = coeffs[0], &b = coeffs[1], &c = coeffs[2], &d = coeffs[3], &e = coeffs[4];
    return 256 * a * a * a * e * e * e - 192 * a * a * b * d * e * e -
           128 * a * a * c * c * e * e + 144 * a * a * c * d * d * e - 27 * a * a * d * d * d * d +
           144 * a * b * b * c * e * e - 6 * a * b * b * d * d * e - 80 * a * b * c * c * d * e +
           18 * a * b * c * d * d * d + 16 * a * c * c * c * c * e - 4 * a * c * c * c * d * d -
           27 * b * b * b * b * e * e + 18 * b * b * b * c * d * e - 4 * b * b * b * d * d * d -
           4 * b * b * c * c * c * e + b * b * c * c * d * d;
}

std::string TMInstance::render() const
{
    std::ostringstream os;
    static char const* mono[5] = {"u^4", "u^3*v", "u^2*v^2", "u*v^3", "v^4"};
    bool first = true;
    for (int i = 0; i < 5; i++) {
        if (coeffs[i] == 0)
            continue;
        Int c = coeffs[i];
        if (!first)
            os << (c > 0 ? " + " : " - ");
        else if (c < 0)
            os << "-";
        Int ac = abs(c);
        if (ac != 1)
            os << ac.get_str() << "*";
        os << mono[i];
        first = false;
    }
    os << " = ";
    if (sign_set.size() == 2)
        os << "+-";
    else if (!sign_set.empty() && sign_set[0] == -1)
        os << "-";
    bool firstp = true;
    for (auto const& rp : rhs_primes) {
        if (!firstp)
            os << "*";
        os << rp.p.get_str() << "^(";
        // n = 2m for the even-index derivation; render the exponent in n when clean
        long cm = rp.exp_m_coeff, cc = rp.exp_const;
        if (cm == 0) {
            os << cc << ")";
            firstp = false;
            continue;
        }
        if (cm % 2 == 0) {
            if (cm / 2 == 1)
                os << "n";
            else
                os << cm / 2 << "n";
        } else {
            if (cm == 1)
                os << "n/2";
            else
                os << cm << "n/2";
        }
        if (cc > 0)
            os << "+" << cc;
        else if (cc < 0)
            os << cc;
        os << ")";
        firstp = false;
    }
    for (auto const& sc : side_conditions)
        os << ", " << sc;
    return os.str();
}

bool side_conditions_hold(std::vector<std::string> const& conds, Int const& u, Int const& v)
{
    for (auto const& c : conds) {
        if (c == "odd(u*v)") {
            if (mpz_even_p(Int(u * v).get_mpz_t()))
                return false;
        } else if (c.rfind("ncong(u*v,0,", 0) == 0) {
            Int p(c.substr(12, c.size() - 13));
            if (u * v % p == 0)
                return false;
        } else {
            throw std::invalid_argument("unknown side condition: " + c);
        }
    }
    return true;
}

namespace {

std::vector<Int> signed_squarefree_divisors(Int const& x)
{
    std::vector<Int> out;
    for (Int const& d : divisors(x))
        if (squarefree_part(d) == d) {
            out.push_back(d);
            out.push_back(-d);
        }
    return out;
}

// achievable right-hand-side residues mod w over admissible exponents m
std::set<Int> rhs_residues_mod(TMInstance const& inst, int sign, Int const& w)
{
    std::set<Int> out;
    // exponent cycle length divides lambda(w) <= w; scan a safe window
    long span = to_long(w) * 2 + 8;
    for (long m = inst.m_min; m <= inst.m_min + span; m++) {
        if (inst.m_parity == 1 && m % 2 == 0)
            continue;
        if (inst.m_parity == 2 && m % 2 != 0)
            continue;
        Int r = sign;
        for (auto const& rp : inst.rhs_primes) {
            long e = rp.exp_const + rp.exp_m_coeff * m;
            if (e < 0) {
                r = -1;  // sentinel: exponent not yet admissible
                break;
            }
            r = r * powmod(rp.p, e, w);
        }
        if (r != -1)
            out.insert(((r % w) + w) % w);
    }
    return out;
}

bool solvable_mod(TMInstance const& inst, int sign, Int const& w)
{
    auto rset = rhs_residues_mod(inst, sign, w);
    if (rset.empty())
        return false;
    std::vector<Int> wprimes;
    for (auto const& [p, e] : factor(w))
        wprimes.push_back(p);
    long wl = to_long(w);
    for (long u = 0; u < wl; u++) {
        for (long v = 0; v < wl; v++) {
            bool ok = true;
            for (auto const& p : wprimes)
                if (u % to_long(p) == 0 && v % to_long(p) == 0) {
                    ok = false;  // u,v coprime
                    break;
                }
            if (!ok)
                continue;
            for (auto const& sc : inst.side_conditions) {
                if (sc == "odd(u*v)" && w % 2 == 0 && (u % 2 == 0 || v % 2 == 0))
                    ok = false;
                else if (sc.rfind("ncong(u*v,0,", 0) == 0) {
                    Int p(sc.substr(12, sc.size() - 13));
                    if (w % p == 0 && (u * v) % to_long(p) == 0)
                        ok = false;
                }
            }
            if (!ok)
                continue;
            Int f = ((inst.eval(u, v) % w) + w) % w;
            if (rset.count(f))
                return true;
        }
    }
    return false;
}

// drop unsolvable signs; returns list of (sign, witness) removed
std::vector<std::pair<int, Int>> congruence_filter(TMInstance& inst,
                                                   std::vector<Int> const& witnesses)
{
    std::vector<std::pair<int, Int>> removed;
    std::vector<int> surviving;
    for (int s : inst.sign_set) {
        Int killer = 0;
        for (auto const& w : witnesses) {
            if (!solvable_mod(inst, s, w)) {
                killer = w;
                break;
            }
        }
        if (killer == 0)
            surviving.push_back(s);
        else
            removed.emplace_back(s, killer);
    }
    inst.sign_set = surviving;
    return removed;
}

void canonicalize(TMInstance& inst)
{
    // u <-> v when it lowers the absolute coefficient tuple
    std::array<Int, 5> sw{inst.coeffs[4], inst.coeffs[3], inst.coeffs[2], inst.coeffs[1],
                          inst.coeffs[0]};
    auto abskey = [](std::array<Int, 5> const& c) {
        std::array<Int, 5> k;
        for (int i = 0; i < 5; i++)
            k[i] = abs(c[i]);
        return k;
    };
    if (abskey(sw) < abskey(inst.coeffs))
        inst.coeffs = sw;
    // leading sign positive; flips the right-hand sign set
    int lead = 0;
    while (lead < 5 && inst.coeffs[lead] == 0)
        lead++;
    if (lead < 5 && inst.coeffs[lead] < 0) {
        for (auto& c : inst.coeffs)
            c = -c;
        for (auto& s : inst.sign_set)
            s = -s;
    }
    std::sort(inst.sign_set.begin(), inst.sign_set.end(), std::greater<>());
    std::sort(inst.side_conditions.begin(), inst.side_conditions.end());
}

std::string inst_key(TMInstance const& inst)
{
    std::ostringstream os;
    for (auto const& c : inst.coeffs)
        os << c.get_str() << "|";
    for (int s : inst.sign_set)
        os << s << "|";
    for (auto const& rp : inst.rhs_primes)
        os << rp.p.get_str() << "^" << rp.exp_const << "+" << rp.exp_m_coeff << "m|";
    for (auto const& sc : inst.side_conditions)
        os << sc << "|";
    return os.str();
}

}  // namespace

TMDerivation derive_tm_even(LucasParams const& params, Int const& k, TMEvenOptions const& opts)
{
    if (squarefree_part(k) != k || k == 0)
        throw std::invalid_argument("derive_tm_even: k must be signed squarefree");
    TMDerivation out;
    Int D = params.D();

    // parity of gcd(U_n, V_n) over even n decides nu (gcd is always 1 or 2)
    std::set<int> nus;
    for (unsigned long n = 2; n <= 12; n += 2) {
        auto pr = lucas_pair(params, n);
        Int g = gcd(pr.u, pr.v);
        nus.insert(mpz_even_p(g.get_mpz_t()) ? 1 : 0);
    }

    // side conditions shared by every branch
    std::vector<std::string> base_conds;
    {
        bool u_always_odd = true;
        for (unsigned long n = 2; n <= 12; n += 2)
            if (mpz_even_p(lucas_pair(params, n).u.get_mpz_t()))
                u_always_odd = false;
        if (u_always_odd)
            base_conds.push_back("odd(u*v)");
        for (auto const& [p, e] : factor(params.Q))
            if (p != 2)
                base_conds.push_back("ncong(u*v,0," + p.get_str() + ")");
    }

    std::vector<Int> witnesses = {3, 4, 17};
    for (auto const& w : opts.extra_moduli)
        witnesses.push_back(w);

    std::set<std::string> seen;
    for (int nu : nus) {
        Int Dp = D;       // conic X^2 + D' Y^2 = Z^2
        Int rhs_c;        // S^2 - D' T^2 = Delta * X with X = rhs-of-conic
        long yscale = 1;  // Y = U / yscale
        if (nu == 0) {
            rhs_c = 2;  // X = 2 Q^m
        } else {
            rhs_c = 1;  // X = Q^m, Z = V/2
            if (D % 4 == 0)
                Dp = D / 4;
            else
                yscale = 2;
        }

        for (Int const& Delta : signed_squarefree_divisors(4 * Dp)) {
            // 2 * yscale * S * T = Delta * U, U = k * square, S = k1 u^2, T = k2 v^2
            Int r = squarefree_part(2 * yscale * Delta * k);
            for (Int const& k1 : signed_squarefree_divisors(2 * Dp * params.Q)) {
                Int k2 = squarefree_part(r * k1);

                TMInstance inst;
                inst.coeffs = {k1 * k1, 0, 0, 0, -Dp * k2 * k2};
                inst.m_parity = opts.m_parity;
                inst.side_conditions = base_conds;

                // RHS constant and Q^m, divided by the form content
                Int C = rhs_c * Delta;
                Int g = gcd(gcd(inst.coeffs[0], inst.coeffs[4]), C);
                for (auto& c : inst.coeffs)
                    c /= g;
                C /= g;
                Int g2 = gcd(inst.coeffs[0], inst.coeffs[4]);
                // leftover content must be absorbed by C * Q^m
                std::map<Int, long> exps;  // per-prime exponent offset
                bool dead = false;
                for (auto const& [p, e] : factor(g2)) {
                    long have = (C % p == 0) ? valuation(C, p) : 0;
                    long from_q = (params.Q % p == 0) ? valuation(params.Q, p) : 0;
                    if (have + from_q == 0) {
                        out.discarded.push_back(
                            {inst.render() + " [content " + p.get_str() + " unmatched]", p});
                        dead = true;
                        break;
                    }
                    exps[p] -= e;
                }
                if (dead)
                    continue;
                for (auto& c : inst.coeffs)
                    c /= g2;

                int csign = C < 0 ? -1 : 1;
                C = abs(C);
                for (auto const& [p, e] : factor(C))
                    exps[p] += e;
                Int Qa = abs(params.Q);
                std::map<Int, long> qcoef;
                for (auto const& [p, e] : factor(Qa))
                    qcoef[p] = e;
                bool qneg = params.Q < 0;

                for (auto const& [p, e] : exps)
                    if (!qcoef.count(p))
                        qcoef[p] = 0;
                for (auto const& [p, e] : qcoef) {
                    long cst = exps.count(p) ? exps[p] : 0;
                    if (e == 0 && cst == 0)
                        continue;
                    if (e == 0 && cst < 0) {
                        dead = true;  // impossible content
                        break;
                    }
                    inst.rhs_primes.push_back(RHSPrime{p, cst, e});
                }
                if (dead) {
                    out.discarded.push_back({inst.render() + " [content unmatched]", 0});
                    continue;
                }

                // signs: +-1 from Delta's sign ambiguity on X; (-1)^m when Q < 0
                if (qneg && inst.m_parity == 0)
                    inst.sign_set = {1, -1};
                else if (qneg && inst.m_parity == 1)
                    inst.sign_set = {-csign, csign};  // keep both; filters decide
                else
                    inst.sign_set = {csign};
                // the conic side X carries an overall +- (Z sign and orientation)
                if (inst.sign_set.size() == 1)
                    inst.sign_set = {1, -1};

                auto removed = congruence_filter(inst, witnesses);
                for (auto const& [s, w] : removed) {
                    TMInstance ghost = inst;
                    ghost.sign_set = {s};
                    out.discarded.push_back({ghost.render(), w});
                }
                if (inst.sign_set.empty())
                    continue;
                canonicalize(inst);
                if (seen.insert(inst_key(inst)).second)
                    out.instances.push_back(inst);
            }
        }
    }
    std::sort(out.instances.begin(), out.instances.end(),
              [](TMInstance const& a, TMInstance const& b) { return inst_key(a) < inst_key(b); });
    return out;
}

TMDerivation derive_tm_odd(LucasParams const& params, Int const& k, Triple const& base)
{
    if (base.z == 0)
        throw std::invalid_argument("derive_tm_odd: base solution must have z0 != 0");
    TMDerivation out;
    Int const& P = params.P;
    Int const& Q = params.Q;
    Int D = params.D();

    std::set<std::string> seen;
    bool matched = false;
    for (int nu = 0; nu <= 1; nu++) {
        Int pw = nu ? 2 : 1;
        for (Int const& Delta : signed_squarefree_divisors(2 * P * P * P * Q * D)) {
            Int A = k * Delta, B = -pw * P * P, Cc = pw * Q;
            if (A * base.x * base.x + B * base.y * base.y + Cc * base.z * base.z != 0)
                continue;
            if (gcd(gcd(base.x, base.y), base.z) != 1)
                throw std::invalid_argument("derive_tm_odd: base solution not primitive");
            matched = true;

            for (int zs : {1, -1}) {
                // parametrization of A X^2 + B Y^2 + C Z^2 = 0 through the base point
                Quad qy{A * base.y, -2 * A * base.x, -B * base.y};
                Quad qz{Int(zs * base.z * A), 0, Int(zs * base.z * B)};

                auto sq = [](Quad const& q) {
                    return std::array<Int, 5>{q.a * q.a, 2 * q.a * q.b, q.b * q.b + 2 * q.a * q.c,
                                              2 * q.b * q.c, q.c * q.c};
                };
                auto cross = [](Quad const& p, Quad const& q) {
                    return std::array<Int, 5>{p.a * q.a, p.a * q.b + p.b * q.a,
                                              p.a * q.c + p.b * q.b + p.c * q.a,
                                              p.b * q.c + p.c * q.b, p.c * q.c};
                };
                auto z2 = sq(qz), zy = cross(qz, qy), y2 = sq(qy);

                TMInstance inst;
                for (int i = 0; i < 5; i++)
                    inst.coeffs[i] = Q * z2[i] + P * P * zy[i] + P * P * y2[i];

                // closed-form discriminant of the quartic (without the 2^nu prefactor)
                Int want = -pow_int(Int(2), 8 + 6 * nu) * pow_int(D * Q, 3) *
                           pow_int(k * Delta, 6) * pow_int(P * base.z, 12);
                if (inst.discriminant() != want || want == 0)
                    throw std::logic_error("derive_tm_odd: discriminant mismatch");

                inst.m_parity = 0;
                inst.sign_set = Q < 0 ? std::vector<int>{1, -1}
                                      : std::vector<int>{Delta < 0 ? -1 : 1};
                for (auto const& [p, e] : factor(abs(Q)))
                    inst.rhs_primes.push_back(RHSPrime{p, 0, e});
                canonicalize(inst);
                if (seen.insert(inst_key(inst)).second)
                    out.instances.push_back(inst);
            }
        }
    }
    if (!matched)
        throw std::invalid_argument("derive_tm_odd: base does not solve Eq (21) for any branch");
    return out;
}

}  // namespace lsq
