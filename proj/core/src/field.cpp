#include "lsq/field.hpp"

#include <json.hpp>

#include <fstream>

namespace lsq {

FieldElement fe_add(FieldElement const& a, FieldElement const& b)
{
    FieldElement r;
    for (int i = 0; i < 4; i++)
        r.q[i] = a.q[i] + b.q[i];
    return r;
}

FieldElement fe_sub(FieldElement const& a, FieldElement const& b)
{
    FieldElement r;
    for (int i = 0; i < 4; i++)
        r.q[i] = a.q[i] - b.q[i];
    return r;
}

FieldElement fe_neg(FieldElement const& a)
{
    FieldElement r;
    for (int i = 0; i < 4; i++)
        r.q[i] = -a.q[i];
    return r;
}

FieldElement fe_sigma(FieldElement const& a)
{
    FieldElement r = a;
    r.q[1] = -r.q[1];
    r.q[3] = -r.q[3];
    return r;
}

FieldElement fe_mul(FieldElement const& a, FieldElement const& b, Int const& m)
{
    std::array<Rat, 7> c{};
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            c[i + j] += a.q[i] * b.q[j];
    FieldElement r;
    Rat mm(m);
    for (int k = 0; k < 4; k++)
        r.q[k] = c[k] + (k + 4 <= 6 ? mm * c[k + 4] : Rat(0));
    return r;
}

namespace {

// multiplication matrix of a: column j holds the coordinates of a * theta^j
std::array<std::array<Rat, 4>, 4> mul_matrix(FieldElement const& a, Int const& m)
{
    std::array<std::array<Rat, 4>, 4> M;
    for (int j = 0; j < 4; j++) {
        FieldElement col = fe_mul(a, FieldElement::theta_power(j), m);
        for (int i = 0; i < 4; i++)
            M[i][j] = col.q[i];
    }
    return M;
}

// solve M x = rhs by Gaussian elimination over exact rationals
std::optional<std::array<Rat, 4>> solve4(std::array<std::array<Rat, 4>, 4> M,
                                         std::array<Rat, 4> rhs)
{
    for (int k = 0; k < 4; k++) {
        int piv = k;
        while (piv < 4 && M[piv][k] == 0)
            piv++;
        if (piv == 4)
            return std::nullopt;
        std::swap(M[piv], M[k]);
        std::swap(rhs[piv], rhs[k]);
        for (int i = 0; i < 4; i++) {
            if (i == k)
                continue;
            Rat f = M[i][k] / M[k][k];
            for (int j = k; j < 4; j++)
                M[i][j] -= f * M[k][j];
            rhs[i] -= f * rhs[k];
        }
    }
    std::array<Rat, 4> x;
    for (int i = 0; i < 4; i++)
        x[i] = rhs[i] / M[i][i];
    return x;
}

}  // namespace

Rat fe_norm(FieldElement const& a, Int const& m)
{
    auto M = mul_matrix(a, m);
    // 4x4 determinant by elimination
    Rat det(1);
    for (int k = 0; k < 4; k++) {
        int piv = k;
        while (piv < 4 && M[piv][k] == 0)
            piv++;
        if (piv == 4)
            return Rat(0);
        if (piv != k) {
            std::swap(M[piv], M[k]);
            det = -det;
        }
        det *= M[k][k];
        for (int i = k + 1; i < 4; i++) {
            Rat f = M[i][k] / M[k][k];
            for (int j = k; j < 4; j++)
                M[i][j] -= f * M[k][j];
        }
    }
    return det;
}

FieldElement fe_inv(FieldElement const& a, Int const& m)
{
    auto x = solve4(mul_matrix(a, m), {Rat(1), Rat(0), Rat(0), Rat(0)});
    if (!x)
        throw std::domain_error("fe_inv: zero element");
    FieldElement r;
    r.q = *x;
    return r;
}

FieldElement fe_pow(FieldElement const& a, long e, Int const& m)
{
    if (e < 0)
        return fe_pow(fe_inv(a, m), -e, m);
    FieldElement r = FieldElement::rational(Rat(1));
    FieldElement base = a;
    while (e) {
        if (e & 1)
            r = fe_mul(r, base, m);
        base = fe_mul(base, base, m);
        e >>= 1;
    }
    return r;
}

FieldElement const& FieldSpec::element(std::string const& name) const
{
    if (auto it = elements.find(name); it != elements.end())
        return it->second;
    if (auto it = units.find(name); it != units.end())
        return it->second;
    throw std::out_of_range("FieldSpec: unknown element " + name);
}

std::optional<std::array<Int, 4>> to_integral_coordinates(FieldSpec const& spec,
                                                          FieldElement const& a)
{
    // transpose: columns of the system are the basis elements
    std::array<std::array<Rat, 4>, 4> M;
    for (int i = 0; i < 4; i++)
        for (int j = 0; j < 4; j++)
            M[i][j] = spec.integral_basis[j].q[i];
    auto x = solve4(M, a.q);
    if (!x)
        throw FieldLoadError("integral basis is singular");
    std::array<Int, 4> c;
    for (int i = 0; i < 4; i++) {
        if ((*x)[i].get_den() != 1)
            return std::nullopt;
        c[i] = (*x)[i].get_num();
    }
    return c;
}

std::optional<std::pair<Int, Int>> extract_uv(FieldElement const& a)
{
    if (a.q[2] != 0 || a.q[3] != 0 || a.q[0].get_den() != 1 || a.q[1].get_den() != 1)
        return std::nullopt;
    return std::make_pair(Int(a.q[0].get_num()), Int(-a.q[1].get_num()));
}

Complex embed_complex(FieldElement const& a, Int const& m, int conj_id, mpfr_prec_t prec)
{
    Real t = Real::from(m, prec).root4();
    Real zero = Real::from(Int(0), prec);
    // theta^(1) = t, theta^(2) = -t, theta^(3) = i t, theta^(4) = -i t
    Complex th;
    switch (conj_id) {
        case 1: th = {t, zero}; break;
        case 2: th = {-t, zero}; break;
        case 3: th = {zero, t}; break;
        case 4: th = {zero, -t}; break;
        default: throw std::invalid_argument("embed_complex: conjugate id must be 1..4");
    }
    Complex acc{zero, zero}, pw{Real::from(Int(1), prec), zero};
    for (int i = 0; i < 4; i++) {
        Complex coef{Real::from(a.q[i], prec), zero};
        acc = acc + coef * pw;
        pw = pw * th;
    }
    return acc;
}

PAdicValue embed_padic(FieldElement const& a, FieldSpec const& spec, std::string const& case_id,
                       int conj_id, long prec)
{
    Int const& p = spec.padic_p;
    auto it = spec.theta_residue.find(case_id);
    if (it == spec.theta_residue.end())
        throw std::invalid_argument("embed_padic: no theta residue convention for " + case_id);
    PAdicValue th = hensel_root(spec.m, 4, p, prec, {it->second, spec.theta_residue_mod});
    bool gauss = (spec.iota_residue == 0);
    PAdicValue iota = gauss ? PAdicValue::gauss_from(0, 1, p, prec)
                            : iota_root(p, prec, spec.iota_residue);
    PAdicValue thg = gauss ? PAdicValue::gauss_from(th.a, 0, p, prec) : th;
    PAdicValue conj_th = thg;
    switch (conj_id) {
        case 1: break;
        case 2: conj_th = -thg; break;
        case 3: conj_th = iota * thg; break;
        case 4: conj_th = -(iota * thg); break;
        default: throw std::invalid_argument("embed_padic: conjugate id must be 1..4");
    }
    // scale away denominators, embed the integer element, divide back
    Int scale = 1;
    for (auto const& q : a.q)
        scale = scale / gcd(scale, Int(q.get_den())) * Int(q.get_den());
    PAdicValue acc = PAdicValue::zero(p, prec, gauss);
    PAdicValue pw = PAdicValue::one(p, prec, gauss);
    for (int i = 0; i < 4; i++) {
        Rat c = a.q[i] * scale;
        acc = acc + PAdicValue::from(Int(c.get_num()), p, prec, gauss) * pw;
        pw = pw * conj_th;
    }
    if (scale == 1)
        return acc;
    return acc / PAdicValue::from(scale, p, prec, gauss);
}

FieldElement exponent_combo(FieldSpec const& spec, std::string const& case_id, long a1, long a2,
                            long n1, int sign)
{
    FieldElement base;
    std::string pi_name;
    if (case_id == "k17") {
        base = spec.element("alpha");
        pi_name = "pi1";
    } else if (case_id == "k84-42") {
        base = FieldElement::rational(Rat(1));
        pi_name = "pi42";
    } else if (case_id == "k84-43") {
        base = FieldElement::rational(Rat(1));
        pi_name = "pi43";
    } else {
        throw std::invalid_argument("exponent_combo: unknown case " + case_id);
    }
    Int const& m = spec.m;
    FieldElement r = fe_mul(base, fe_pow(spec.element("eps1"), a1, m), m);
    r = fe_mul(r, fe_pow(spec.element("eps2"), a2, m), m);
    r = fe_mul(r, fe_pow(spec.element(pi_name), n1, m), m);
    if (sign < 0)
        r = fe_neg(r);
    return r;
}

std::vector<std::pair<long, Rat>> r_ratio_scan(FieldSpec const& spec, long n1, long a1_lo,
                                               long a1_hi)
{
    std::vector<std::pair<long, Rat>> out;
    Int const& m = spec.m;
    for (long a1 = a1_lo; a1 <= a1_hi; a1++) {
        FieldElement x = exponent_combo(spec, "k17", a1, 0, n1, +1);
        FieldElement sx = fe_sigma(x);
        FieldElement den = fe_sub(sx, x);
        if (den == FieldElement{})
            continue;  // R = 1: skip (reported as absent)
        // 1/(1 - R), R = x / sigma(x); admissible iff it equals 1/2 + c*theta^3
        FieldElement y = fe_mul(sx, fe_inv(den, m), m);
        if (y.q[1] != 0 || y.q[2] != 0 || y.q[0] != Rat(1, 2))
            continue;
        out.emplace_back(a1, Rat(2) * Rat(m) * y.q[3]);  // u/v = 2m * c
    }
    return out;
}

LambdaContext make_lambda_context(FieldSpec const& spec, std::string const& case_id, long prec)
{
    if (case_id == "k17") {
        PAdicValue th1 = embed_padic(FieldElement::theta_power(1), spec, case_id, 1, prec);
        PAdicValue th3 = embed_padic(FieldElement::theta_power(1), spec, case_id, 3, prec);
        PAdicValue th4 = embed_padic(FieldElement::theta_power(1), spec, case_id, 4, prec);
        PAdicValue a3 = embed_padic(spec.element("alpha"), spec, case_id, 3, prec);
        PAdicValue a4 = embed_padic(spec.element("alpha"), spec, case_id, 4, prec);
        PAdicValue delta = ((th1 - th3) * a4) / ((th1 - th4) * a3);
        PAdicValue e3 = embed_padic(spec.element("eps1"), spec, case_id, 3, prec);
        PAdicValue e4 = embed_padic(spec.element("eps1"), spec, case_id, 4, prec);
        return LambdaContext{delta, e4 / e3, "k17",
                             PAdicValue::gauss_from(0, 1, spec.padic_p, prec)};
    }
    if (case_id == "k84-42" || case_id == "k84-43") {
        std::string pi_name = case_id == "k84-42" ? "pi42" : "pi43";
        PAdicValue p3 = embed_padic(spec.element(pi_name), spec, case_id, 3, prec);
        PAdicValue p4 = embed_padic(spec.element(pi_name), spec, case_id, 4, prec);
        PAdicValue e3 = embed_padic(spec.element("eps1"), spec, case_id, 3, prec);
        PAdicValue e4 = embed_padic(spec.element("eps1"), spec, case_id, 4, prec);
        PAdicValue iota = iota_root(spec.padic_p, prec, spec.iota_residue);
        return LambdaContext{p4 / p3, e4 / e3, "k84", iota};
    }
    throw std::invalid_argument("make_lambda_context: unknown case " + case_id);
}

namespace {

using nlohmann::json;

Rat parse_rat(json const& j)
{
    if (j.is_number_integer())
        return Rat(Int(j.get<long>()));
    if (j.is_string())
        return Rat(j.get<std::string>());
    if (j.is_array() && j.size() == 2) {
        Int num(j[0].is_string() ? j[0].get<std::string>() : std::to_string(j[0].get<long>()));
        Int den(j[1].is_string() ? j[1].get<std::string>() : std::to_string(j[1].get<long>()));
        Rat r(num, den);
        r.canonicalize();
        return r;
    }
    throw FieldLoadError("bad rational in field spec");
}

FieldElement parse_element(json const& j)
{
    if (!j.is_array() || j.size() != 4)
        throw FieldLoadError("element must be a 4-entry coefficient array");
    FieldElement e;
    for (int i = 0; i < 4; i++)
        e.q[i] = parse_rat(j[i]);
    return e;
}

Int parse_int(json const& j)
{
    if (j.is_string())
        return Int(j.get<std::string>());
    return Int(j.get<long>());
}

FieldElement resolve_factor(FieldSpec const& spec, std::string const& name)
{
    // numeric literals allowed as product factors
    if (!name.empty() && (std::isdigit(name[0]) || name[0] == '-'))
        return FieldElement::rational(Rat(name));
    return spec.element(name);
}

}  // namespace

FieldSpec load_field_spec(std::string const& path)
{
    std::ifstream in(path);
    if (!in)
        throw FieldLoadError("cannot open field spec " + path);
    json j;
    try {
        in >> j;
    } catch (json::exception const& e) {
        throw FieldLoadError("field spec parse error: " + std::string(e.what()));
    }
    FieldSpec spec;
    spec.m = parse_int(j.at("m"));
    auto const& ib = j.at("integral_basis");
    if (!ib.is_array() || ib.size() != 4)
        throw FieldLoadError("integral_basis must list 4 elements");
    for (int i = 0; i < 4; i++)
        spec.integral_basis[i] = parse_element(ib[i]);
    spec.class_number = j.at("class_number").get<long>();
    for (auto const& [name, coeffs] : j.at("units").items())
        spec.units[name] = parse_element(coeffs);
    for (auto const& [name, coeffs] : j.at("elements").items())
        spec.elements[name] = parse_element(coeffs);
    for (auto const& pd : j.at("prime_data")) {
        PrimeIdealInfo info;
        info.label = pd.at("label").get<std::string>();
        info.p = parse_int(pd.at("p"));
        info.norm = parse_int(pd.at("norm"));
        info.principal = pd.at("principal").get<bool>();
        info.class_order = pd.at("class_order").get<long>();
        info.generator = pd.value("generator", "");
        spec.prime_data.push_back(info);
    }
    auto const& pa = j.at("padic");
    spec.padic_p = parse_int(pa.at("p"));
    for (auto const& [cid, res] : pa.at("theta_residue").items())
        spec.theta_residue[cid] = parse_int(res);
    spec.theta_residue_mod = parse_int(pa.at("theta_residue_mod"));
    spec.iota_residue = parse_int(pa.value("iota_residue", json(0)));

    // verify the recorded identities; a failure names the offending element
    std::optional<std::array<Int, 4>> coords;
    for (auto const& idj : j.at("identities")) {
        FieldIdentity id;
        id.check = idj.at("check").get<std::string>();
        id.element = idj.at("element").get<std::string>();
        if (id.check == "norm") {
            id.value = parse_rat(idj.at("value"));
            Rat n = fe_norm(spec.element(id.element), spec.m);
            if (n != id.value)
                throw FieldLoadError("identity check failed: norm(" + id.element + ") = " +
                                     n.get_str() + ", expected " + id.value.get_str());
        } else if (id.check == "integral") {
            coords = to_integral_coordinates(spec, spec.element(id.element));
            if (!coords)
                throw FieldLoadError("identity check failed: " + id.element +
                                     " is not an algebraic integer");
        } else if (id.check == "product") {
            FieldElement prod = FieldElement::rational(Rat(1));
            for (auto const& f : idj.at("factors")) {
                id.factors.push_back(f.get<std::string>());
                prod = fe_mul(prod, resolve_factor(spec, id.factors.back()), spec.m);
            }
            if (!(prod == spec.element(id.element)))
                throw FieldLoadError("identity check failed: " + id.element +
                                     " does not equal the stated product");
        } else {
            throw FieldLoadError("unknown identity check kind: " + id.check);
        }
        spec.identities.push_back(id);
    }
    // structural checks on the unit group data
    for (auto const& [name, u] : spec.units) {
        Rat n = fe_norm(u, spec.m);
        if (n != 1 && n != -1)
            throw FieldLoadError("identity check failed: unit " + name + " has norm " +
                                 n.get_str());
    }
    // prime_data consistency: ideal norms must be powers of their residue characteristic
    for (auto const& info : spec.prime_data) {
        Int n = abs(info.norm);
        while (n % info.p == 0)
            n /= info.p;
        if (n != 1)
            throw FieldLoadError("prime_data: ideal " + info.label +
                                 " norm is not a power of its residue characteristic");
        if (info.principal && !info.generator.empty()) {
            Rat gn = fe_norm(spec.element(info.generator), spec.m);
            if (abs(Int(gn.get_num())) != abs(info.norm) || gn.get_den() != 1)
                throw FieldLoadError("prime_data: generator norm mismatch for " + info.label);
        }
    }
    return spec;
}

}  // namespace lsq
