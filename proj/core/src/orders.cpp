#include "cubiclass/orders.hpp"

#include <vector>

#include "cubiclass/sieve.hpp"

namespace cubiclass {

bool is_valid_disc(i64 D)
{
    if (D == 0)
        return false;
    i64 r = ((D % 4) + 4) % 4;
    return r == 0 || r == 1;
}

quad_ring ring_from_disc(i64 D)
{
    if (!is_valid_disc(D))
        throw domain_error("ring_from_disc: D must be nonzero and 0,1 mod 4");
    /* D = m * k^2 with m squarefree (signed) */
    i64 k = 1;
    i64 m = D;
    for (auto [p, e] : factor_trial(D)) {
        for (int i = 0; i < e / 2; ++i) {
            k *= p;
            m /= p * p;
        }
    }
    i64 D0, f;
    if ((((m % 4) + 4) % 4) == 1) {
        D0 = m;
        f = k;
    } else {
        D0 = 4 * m;
        f = k / 2; /* k is even here since D = m k^2 is 0 mod 4 */
    }
    quad_ring R;
    R.D = D;
    R.D0 = D0;
    R.f = f;
    R.eps = int(((D % 4) + 4) % 4); /* 0 or 1 */
    return R;
}

bool is_maximal_disc(i64 D)
{
    if (!is_valid_disc(D))
        return false;
    i64 r16 = ((D % 16) + 16) % 16;
    if (!(r16 == 1 || r16 == 5 || r16 == 8 || r16 == 9 || r16 == 12 || r16 == 13))
        return false;
    i64 odd = D < 0 ? -D : D;
    while (odd % 2 == 0)
        odd /= 2;
    for (auto [p, e] : factor_trial(odd))
        if (e >= 2)
            return false;
    return true;
}

i64 cl3_count(i64 D)
{
    if (!is_valid_disc(D) || is_square(D))
        throw domain_error("cl3_count: need a non-square valid discriminant");
    if (D < 0)
        return cl3_definite(D);
    return cl3_indefinite(build_cycle_table(D));
}

namespace {

/*
 * 3-torsion of (O_k/f O_k)^x / im (Z/f)^x by direct enumeration of the
 * quotient ring in the basis (1, omega), omega = (d0 odd ? (1+sqrt(D0))/2
 * : sqrt(D0)/2 scaled)... concretely omega has trace t and norm nrm below.
 */
i64 quotient_3_torsion(i64 D0, i64 f)
{
    if (f == 1)
        return 1;
    if (f > 20000)
        throw domain_error("ideal3_count: conductor too large for the finite oracle");
    i64 t = (((D0 % 2) + 2) % 2); /* trace of omega */
    i64 nrm = (t * t - D0) / 4;   /* norm of omega */
    i64 tf = ((t % f) + f) % f;
    i64 nf = ((nrm % f) + f) % f;

    auto mul = [&](i64 u1, i64 v1, i64 u2, i64 v2) -> std::pair<i64, i64> {
        /* (u1 + v1 w)(u2 + v2 w), w^2 = t w - nrm */
        i64 vv = (v1 * v2) % f;
        i64 u = ((u1 * u2) % f + (f - (vv * nf) % f)) % f;
        i64 v = ((u1 * v2) % f + (v1 * u2) % f + (vv * tf) % f) % f;
        return {u, v};
    };

    i64 n_units = 0;
    i64 n_cube_scalar = 0;
    for (i64 u = 0; u < f; ++u) {
        for (i64 v = 0; v < f; ++v) {
            /* unit iff gcd(N(u + v w), f) = 1 */
            i64 nm = ((u * u) % f + (u * v % f) * tf + (v * v % f) * nf) % f;
            if (gcd_i64(nm, f) != 1)
                continue;
            ++n_units;
            auto [su, sv] = mul(u, v, u, v);
            auto [cu, cv] = mul(su, sv, u, v);
            (void)cu;
            if (cv == 0)
                ++n_cube_scalar;
        }
    }
    /* |im (Z/f)^x| = phi(f) */
    i64 phi = 0;
    for (i64 u = 1; u < f; ++u)
        if (gcd_i64(u, f) == 1)
            ++phi;
    if (n_cube_scalar % phi != 0)
        throw domain_error("ideal3_count: oracle inconsistency");
    return n_cube_scalar / phi;
}

} // namespace

i64 ideal3_count(const quad_ring& R)
{
    if (is_square(R.D))
        throw domain_error("ideal3_count: need a non-square discriminant");
    return quotient_3_torsion(R.D0, R.f);
}

i64 ideal3_count(i64 D)
{
    return ideal3_count(ring_from_disc(D));
}

int u3_correction(i64 D)
{
    quad_ring R = ring_from_disc(D);
    return (R.D0 == -3 && R.f > 1) ? 3 : 1;
}

int unit_cube_index(i64 D)
{
    if (!is_valid_disc(D))
        throw domain_error("unit_cube_index: invalid discriminant");
    return D < -3 ? 1 : 3;
}

int sigma_factor(i64 D)
{
    if (!is_valid_disc(D))
        throw domain_error("sigma_factor: invalid discriminant");
    return D < -3 ? 1 : 3;
}

} // namespace cubiclass
