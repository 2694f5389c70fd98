#include "cubiclass/realroot.hpp"

#include <algorithm>
#include <cstdlib>

namespace cubiclass {

real_root real_root::rational(i64 num, i64 den)
{
    if (den <= 0)
        throw domain_error("real_root::rational: need den > 0");
    real_root r;
    r.rational_ = true;
    i64 g = gcd_i64(num, den);
    r.num_ = num / g;
    r.den_ = den / g;
    return r;
}

real_root real_root::cubic(i64 c3, i64 c2, i64 c1, i64 c0)
{
    if (c3 == 0)
        throw domain_error("real_root::cubic: leading coefficient is zero");
    real_root r;
    r.c3_ = c3;
    r.c2_ = c2;
    r.c1_ = c1;
    r.c0_ = c0;
    /* Cauchy bound: all roots lie in (-M, M) */
    i64 m = std::max({std::llabs(c2), std::llabs(c1), std::llabs(c0)});
    i64 M = 2 + m / std::llabs(c3);
    r.lo_ = mpq_class(-M);
    r.hi_ = mpq_class(M);
    int slo = sgn(r.eval_poly(r.lo_));
    int shi = sgn(r.eval_poly(r.hi_));
    if (slo == 0 || shi == 0 || slo == shi)
        throw domain_error("real_root::cubic: bad bracketing (no single real root?)");
    /* tighten a little so later refinements start close */
    for (int i = 0; i < 8; ++i)
        r.refine();
    return r;
}

mpq_class real_root::eval_poly(const mpq_class& t) const
{
    return ((mpq_class(c3_) * t + c2_) * t + c1_) * t + c0_;
}

void real_root::refine() const
{
    mpq_class mid = (lo_ + hi_) / 2;
    mid.canonicalize();
    int sm = sgn(eval_poly(mid));
    if (sm == 0)
        throw domain_error("real_root: hit a rational root during refinement");
    if (sm == sgn(eval_poly(lo_)))
        lo_ = mid;
    else
        hi_ = mid;
}

int real_root::sign_lincomb(i64 u, i64 v, i64 w) const
{
    if (rational_) {
        /* den^2 * h(alpha) = u den^2 + v num den + w num^2 */
        i128 val = mul128(i128(u), mul128(i128(den_), i128(den_)));
        val = add128(val, mul128(i128(v), mul128(i128(num_), i128(den_))));
        val = add128(val, mul128(i128(w), mul128(i128(num_), i128(num_))));
        return val > 0 ? 1 : val < 0 ? -1 : 0;
    }
    if (u == 0 && v == 0 && w == 0)
        return 0;
    /* alpha has degree 3, so a nonzero quadratic combination never vanishes */
    mpq_class qu(static_cast<long>(u)), qv(static_cast<long>(v)), qw(static_cast<long>(w));
    auto h = [&](const mpq_class& t) { return (qw * t + qv) * t + qu; };
    for (int iter = 0; iter < 20000; ++iter) {
        mpq_class vlo = h(lo_), vhi = h(hi_);
        int a = sgn(vlo), b = sgn(vhi);
        if (a == b && a != 0) {
            /* same sign at the endpoints; the parabola could still dip
             * through zero inside, unless the vertex is outside or the
             * vertex value has the same sign */
            if (w == 0)
                return a;
            mpq_class vertex = mpq_class(static_cast<long>(-v)) / (2 * qw);
            vertex.canonicalize();
            if (vertex <= lo_ || vertex >= hi_)
                return a;
            int c = sgn(h(vertex));
            if (c == a)
                return a;
        }
        refine();
    }
    throw domain_error("real_root::sign_lincomb: refinement did not converge");
}

double real_root::approx() const
{
    if (rational_)
        return double(num_) / double(den_);
    /* tighten so the midpoint is a usable estimate */
    for (int i = 0; i < 128; ++i) {
        mpq_class width = hi_ - lo_;
        mpq_class scale = abs(lo_) + abs(hi_) + 1;
        if (width * (i64(1) << 40) < scale)
            break;
        refine();
    }
    return (lo_.get_d() + hi_.get_d()) / 2;
}

} // namespace cubiclass
