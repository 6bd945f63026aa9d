#include "lsq/conic.hpp"

#include <utility>

namespace lsq {

namespace {

// nontrivial zero of A x^2 + B y^2 + C z^2 mod q (not all coordinates divisible
// by the prime below q); absence at any q proves the conic has no rational point
bool solvable_mod(ConicForm const& form, long q, long p)
{
    long a = mpz_fdiv_ui(form.A.get_mpz_t(), q);
    long b = mpz_fdiv_ui(form.B.get_mpz_t(), q);
    long c = mpz_fdiv_ui(form.C.get_mpz_t(), q);
    for (long x = 0; x < q; x++)
        for (long y = 0; y < q; y++)
            for (long z = 0; z < q; z++) {
                if (x % p == 0 && y % p == 0 && z % p == 0)
                    continue;
                if ((a * x * x + b * y * y + c * z * z) % q == 0)
                    return true;
            }
    return false;
}

}  // namespace

std::optional<Triple> legendre_solve(ConicForm const& form, Int const& height)
{
    if (height < 1)
        throw std::invalid_argument("legendre_solve: height must be >= 1");
    static constexpr std::pair<long, long> local[] = {{16, 2}, {9, 3}, {25, 5}, {49, 7},
                                                      {11, 11}, {13, 13}, {17, 17}, {19, 19}};
    for (auto [q, p] : local)
        if (!solvable_mod(form, q, p))
            return std::nullopt;
    // diagonal form: nonnegative representatives suffice; solve for y directly
    for (Int h = 1; h <= height; h++) {
        for (Int x = 0; x <= h; x++) {
            for (Int z = 1; z <= h; z++) {
                if (x != h && z != h)
                    continue;  // only the new shell
                Int t = -(form.A * x * x + form.C * z * z);
                if (t % form.B != 0)
                    continue;
                Int y2 = t / form.B;
                if (y2 < 0 || !is_square(y2))
                    continue;
                Int y = isqrt(y2);
                if (gcd(gcd(x, y), z) != 1)
                    continue;
                return Triple{x, y, z};
            }
        }
    }
    return std::nullopt;
}

ConicParametrization parametrize_conic(ConicForm const& form, Triple const& base)
{
    Int g = gcd(gcd(base.x, base.y), base.z);
    if (g != 1 || form.eval(base.x, base.y, base.z) != 0)
        throw std::invalid_argument("parametrize_conic: base solution not primitive or invalid");

    // P(S,T) = F(S,T) * P0 - 2 B(P0, (S,T,0)) * (S,T,0)
    // with F(S,T) = A S^2 + B T^2 and B(P0,V) = A x0 S + B y0 T:
    //   X = -A x0 S^2 - 2 B y0 S T + B x0 T^2
    //   Y =  A y0 S^2 - 2 A x0 S T - B y0 T^2
    //   Z =  z0 (A S^2 + B T^2)
    Int const& A = form.A;
    Int const& B = form.B;
    Quad qx{-A * base.x, -2 * B * base.y, B * base.x};
    Quad qy{A * base.y, -2 * A * base.x, -B * base.y};
    Quad qz{base.z * A, 0, base.z * B};

    ConicParametrization par{form, qx, qy, qz, 0};
    Int det = par.det();
    if (det == 0)
        throw std::logic_error("parametrize_conic: degenerate parametrization");

    // delta divides the determinant of the content-stripped rows times the row contents'
    // gcd: common row content can be pulled out of the solution before inverting.
    auto content = [](Quad const& q) { return gcd(gcd(q.a, q.b), q.c); };
    Int cx = content(qx), cy = content(qy), cz = content(qz);
    Int cg = gcd(gcd(cx, cy), cz);
    par.divisor_bound = abs(det) / (cx * cy * cz) * cg;
    return par;
}

}  // namespace lsq
