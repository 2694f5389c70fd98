#include "cubiclass/forms.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <string>
#include <vector>

namespace cubiclass {

u64 isqrt(u64 n)
{
    if (n == 0)
        return 0;
    u64 r = static_cast<u64>(std::sqrt(static_cast<double>(n)));
    while (r > 0 && r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

i128 isqrt(i128 n)
{
    if (n < 0)
        throw domain_error("isqrt of negative value");
    if (n <= i128(UINT64_MAX))
        return isqrt(static_cast<u64>(n));
    i128 r = i128(isqrt(static_cast<u64>(n >> 64))) << 32;
    i128 prev = -1;
    while (r != prev) { /* Newton iteration on integers */
        prev = r;
        r = (r + n / r) >> 1;
    }
    while (r * r > n)
        --r;
    while ((r + 1) * (r + 1) <= n)
        ++r;
    return r;
}

i64 icbrt(u64 n)
{
    if (n == 0)
        return 0;
    i64 r = static_cast<i64>(std::cbrt(static_cast<double>(n)));
    while (r > 0 && u64(r) * u64(r) * u64(r) > n)
        --r;
    while (u64(r + 1) * u64(r + 1) * u64(r + 1) <= n)
        ++r;
    return r;
}

std::string to_string(i128 x)
{
    if (x == 0)
        return "0";
    bool neg = x < 0;
    unsigned __int128 u = neg ? -static_cast<unsigned __int128>(x) : static_cast<unsigned __int128>(x);
    std::string s;
    while (u) {
        s.push_back(char('0' + int(u % 10)));
        u /= 10;
    }
    if (neg)
        s.push_back('-');
    std::reverse(s.begin(), s.end());
    return s;
}

std::ostream& operator<<(std::ostream& o, const cubic_form& f)
{
    return o << "(" << f.a << "," << f.b << "," << f.c << "," << f.d << ")";
}

std::ostream& operator<<(std::ostream& o, const quad_covariant& q)
{
    return o << "(" << q.A << "," << q.B << "," << q.C << ")";
}

unimodular_matrix operator*(const unimodular_matrix& g, const unimodular_matrix& h)
{
    return {
        checked_add(checked_mul(g.p, h.p), checked_mul(g.q, h.r)),
        checked_add(checked_mul(g.p, h.q), checked_mul(g.q, h.s)),
        checked_add(checked_mul(g.r, h.p), checked_mul(g.s, h.r)),
        checked_add(checked_mul(g.r, h.q), checked_mul(g.s, h.s)),
    };
}

namespace {

/* products of up to four coefficients, overflow-checked */
i128 p4(i128 x, i128 y, i128 z, i128 w)
{
    return mul128(mul128(x, y), mul128(z, w));
}

} // namespace

i64 reduced_disc(const cubic_form& f)
{
    if (f.flavor != form_flavor::integer_matrix)
        throw domain_error("reduced_disc requires an integer-matrix form");
    i128 a = f.a, b = f.b, c = f.c, d = f.d;
    i128 v = mul128(-3, p4(b, b, c, c));
    v = add128(v, mul128(4, p4(a, c, c, c)));
    v = add128(v, mul128(4, p4(b, b, b, d)));
    v = add128(v, p4(a, a, d, d));
    v = sub128(v, mul128(6, p4(a, b, c, d)));
    return narrow(v);
}

i64 classical_disc(const cubic_form& f)
{
    if (f.flavor != form_flavor::classical)
        throw domain_error("classical_disc requires a classical form");
    i128 a = f.a, b = f.b, c = f.c, d = f.d;
    i128 v = mul128(18, p4(a, b, c, d));
    v = sub128(v, mul128(4, p4(b, b, b, d)));
    v = add128(v, p4(b, b, c, c));
    v = sub128(v, mul128(4, p4(a, c, c, c)));
    v = sub128(v, mul128(27, p4(a, a, d, d)));
    return narrow(v);
}

i64 hessian_disc(const cubic_form& f)
{
    if (f.flavor == form_flavor::integer_matrix)
        return reduced_disc(f);
    return narrow(i128(-3) * classical_disc(f));
}

quad_covariant hessian(const cubic_form& f)
{
    i128 a = f.a, b = f.b, c = f.c, d = f.d;
    if (f.flavor == form_flavor::integer_matrix)
        return {narrow(b * b - a * c), narrow(a * d - b * c), narrow(c * c - b * d)};
    return {narrow(b * b - 3 * a * c), narrow(b * c - 9 * a * d), narrow(c * c - 3 * b * d)};
}

cubic_form act(const unimodular_matrix& g, const cubic_form& f)
{
    i64 det = g.det();
    if (det != 1 && det != -1)
        throw domain_error("twisted action requires det = +-1");
    /* expand in the classical basis, substitute, then undo the scaling */
    i128 A = f.a, D = f.d;
    i128 B, C;
    if (f.flavor == form_flavor::integer_matrix) {
        B = i128(3) * f.b;
        C = i128(3) * f.c;
    } else {
        B = f.b;
        C = f.c;
    }
    i128 p = g.p, q = g.q, r = g.r, s = g.s;
    auto t3 = [](i128 x, i128 u, i128 v, i128 w) { return mul128(x, p4(u, v, w, 1)); };
    i128 na = add128(add128(t3(A, p, p, p), t3(B, p, p, q)),
                     add128(t3(C, p, q, q), t3(D, q, q, q)));
    i128 nb = add128(add128(mul128(3, t3(A, p, p, r)),
                            add128(t3(B, p, p, s), mul128(2, t3(B, p, q, r)))),
                     add128(add128(t3(C, q, q, r), mul128(2, t3(C, p, q, s))),
                            mul128(3, t3(D, q, q, s))));
    i128 nc = add128(add128(mul128(3, t3(A, p, r, r)),
                            add128(t3(B, q, r, r), mul128(2, t3(B, p, r, s)))),
                     add128(add128(t3(C, p, s, s), mul128(2, t3(C, q, r, s))),
                            mul128(3, t3(D, q, s, s))));
    i128 nd = add128(add128(t3(A, r, r, r), t3(B, r, r, s)),
                     add128(t3(C, r, s, s), t3(D, s, s, s)));
    if (det < 0) {
        na = -na; nb = -nb; nc = -nc; nd = -nd;
    }
    if (f.flavor == form_flavor::integer_matrix) {
        /* GL_2(Z) preserves the integer-matrix lattice */
        nb /= 3;
        nc /= 3;
    }
    return {narrow(na), narrow(nb), narrow(nc), narrow(nd), f.flavor};
}

quad_covariant act(const unimodular_matrix& g, const quad_covariant& Q)
{
    i128 A = Q.A, B = Q.B, C = Q.C;
    i128 p = g.p, q = g.q, r = g.r, s = g.s;
    return {
        narrow(A * p * p + B * p * q + C * q * q),
        narrow(2 * A * p * r + B * (p * s + q * r) + 2 * C * q * s),
        narrow(A * r * r + B * r * s + C * s * s),
    };
}

bool is_projective(const cubic_form& f)
{
    if (is_degenerate(f))
        throw domain_error("is_projective: degenerate form");
    quad_covariant h = hessian(f);
    return gcd_i64(gcd_i64(h.A, h.B), h.C) == 1;
}

namespace {

/* positive divisors of |n|, n != 0 */
std::vector<i64> divisors(i64 n)
{
    if (n < 0)
        n = -n;
    std::vector<i64> small, large;
    for (i64 t = 1; t * t <= n; ++t) {
        if (n % t == 0) {
            small.push_back(t);
            if (t * t != n)
                large.push_back(n / t);
        }
    }
    for (auto it = large.rbegin(); it != large.rend(); ++it)
        small.push_back(*it);
    return small;
}

i128 eval_classical(i128 A, i128 B, i128 C, i128 D, i128 x, i128 y)
{
    return A * x * x * x + B * x * x * y + C * x * y * y + D * y * y * y;
}

std::pair<i64, i64> canonical_root(i64 x0, i64 y0)
{
    if (y0 < 0 || (y0 == 0 && x0 < 0)) {
        x0 = -x0;
        y0 = -y0;
    }
    return {x0, y0};
}

} // namespace

std::optional<std::pair<i64, i64>> rational_root(const cubic_form& f)
{
    if (is_degenerate(f))
        throw domain_error("rational_root: degenerate form");
    i128 A = f.a, D = f.d;
    i128 B, C;
    if (f.flavor == form_flavor::integer_matrix) {
        B = i128(3) * f.b;
        C = i128(3) * f.c;
    } else {
        B = f.b;
        C = f.c;
    }
    if (f.a == 0)
        return canonical_root(1, 0);
    if (f.d == 0)
        return canonical_root(0, 1);
    /* a primitive zero (x0,y0) has x0 | d and y0 | a */
    for (i64 y0 : divisors(f.a)) {
        for (i64 x0 : divisors(f.d)) {
            if (gcd_i64(x0, y0) != 1)
                continue;
            if (eval_classical(A, B, C, D, x0, y0) == 0)
                return canonical_root(x0, y0);
            if (eval_classical(A, B, C, D, -x0, y0) == 0)
                return canonical_root(-x0, y0);
        }
    }
    return std::nullopt;
}

} // namespace cubiclass
