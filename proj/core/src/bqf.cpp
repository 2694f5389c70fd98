#include "cubiclass/bqf.hpp"

#include <algorithm>
#include <map>

namespace cubiclass {

bool is_reduced_definite(const bqf& f)
{
    return (-f.A < f.B && f.B <= f.A && f.A < f.C)
        || (0 <= f.B && f.B <= f.A && f.A == f.C);
}

namespace {

/* b <- b mod 2a mapped into (-a, a], updating c; requires a > 0 */
void normalize_definite(bqf& f)
{
    i64 t = floor_div(f.A - f.B, 2 * f.A);
    if (t != 0) {
        i128 b = i128(f.B) + 2 * i128(t) * f.A;
        i128 c = i128(f.C) + i128(t) * f.B + i128(t) * i128(t) * f.A;
        f.B = narrow(b);
        f.C = narrow(c);
    }
}

} // namespace

bqf reduce_definite(bqf f)
{
    if (f.A <= 0 || f.disc() >= 0)
        throw domain_error("reduce_definite: not positive definite");
    normalize_definite(f);
    while (f.A > f.C) {
        f = {f.C, -f.B, f.A};
        normalize_definite(f);
    }
    if (f.A == f.C && f.B < 0)
        f.B = -f.B;
    return f;
}

bqf principal_bqf(i64 D)
{
    i64 r = ((D % 4) + 4) % 4;
    if (r == 0)
        return {1, 0, narrow(-i128(D) / 4)};
    if (r == 1)
        return {1, 1, narrow((1 - i128(D)) / 4)};
    throw domain_error("principal_bqf: D must be 0 or 1 mod 4");
}

bqf compose_raw(const bqf& f1, const bqf& f2)
{
    i64 D = f1.disc();
    if (D != f2.disc())
        throw domain_error("compose: discriminant mismatch");
    if (!f1.primitive() || !f2.primitive())
        throw domain_error("compose: forms must be primitive");
    if (f1.A <= 0 || f2.A <= 0)
        throw domain_error("compose: leading coefficients must be positive");

    i64 s = narrow((i128(f1.B) + f2.B) / 2);
    i64 u0, v0, v1, w;
    i64 g = xgcd_i64(f1.A, f2.A, u0, v0);
    i64 d = xgcd_i64(g, s, v1, w);

    i64 a2d = f2.A / d;
    i64 a3 = narrow(i128(f1.A) / d * a2d);

    i128 t = i128(v0) * v1 * (i128(s) - f2.B) - i128(w) * f2.C;
    t = 2 * t * a2d;
    i128 b3 = f2.B + t;

    /* normalize b3 into (-a3, a3] before narrowing */
    i128 twoa = 2 * i128(a3);
    i128 k = floor_div(i128(a3) - b3, twoa);
    b3 += k * twoa;
    i64 b = narrow(b3);
    i64 c = narrow((i128(b) * b - D) / (4 * i128(a3)));
    return {a3, b, c};
}

std::vector<bqf> reduced_definite_forms(i64 D)
{
    if (D >= 0 || (((D % 4) + 4) % 4) > 1)
        throw domain_error("reduced_definite_forms: D must be negative, 0 or 1 mod 4");
    std::vector<bqf> out;
    i64 amax = i64(isqrt(u64((-D) / 3)));
    for (i64 A = 1; A <= amax; ++A) {
        for (i64 B = -A + 1; B <= A; ++B) {
            i128 num = i128(B) * B - D;
            if (num % (4 * i128(A)) != 0)
                continue;
            i64 C = narrow(num / (4 * i128(A)));
            if (C < A)
                continue;
            if (A == C && B < 0)
                continue;
            bqf f{A, B, C};
            if (!f.primitive())
                continue;
            out.push_back(f);
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

i64 cl3_definite(i64 D)
{
    i64 n = 0;
    for (const bqf& f : reduced_definite_forms(D)) {
        bqf sq = reduce_definite(compose_raw(f, f));
        bqf inv = reduce_definite(f.inverse());
        if (sq == inv)
            ++n;
    }
    return n;
}

/* --- indefinite forms --- */

bool is_reduced_indefinite(const bqf& f, i64)
{
    /* 0 < B < sqrt(D) and sqrt(D) - B < 2|A| < sqrt(D) + B, which for
     * B > 0 and AC < 0 is equivalent to B > ||A| - |C||. */
    if (f.B <= 0)
        return false;
    if ((f.A > 0) == (f.C > 0) || f.A == 0 || f.C == 0)
        return false;
    i64 aa = f.A < 0 ? -f.A : f.A;
    i64 cc = f.C < 0 ? -f.C : f.C;
    i64 diff = aa > cc ? aa - cc : cc - aa;
    return f.B > diff;
}

bqf rho_step(const bqf& f, i64 D, i64 sqrt_floor)
{
    i64 cc = f.C < 0 ? -f.C : f.C;
    i64 t = floor_div(f.B + sqrt_floor, 2 * cc);
    i64 b = narrow(2 * i128(cc) * t - f.B);
    i64 c = narrow((i128(b) * b - D) / (4 * i128(f.C)));
    return {f.C, b, c};
}

namespace {

/* translate b into (target - 2|a|, target] with target = max(|a|, floor(sqrt D)) */
bqf normalized_indefinite(const bqf& f, i64 D, i64 sqrt_floor)
{
    if (f.A == 0)
        throw domain_error("normalize: zero leading coefficient (square discriminant?)");
    i64 aa = f.A < 0 ? -f.A : f.A;
    i64 m = 2 * aa;
    i64 target = aa > sqrt_floor ? aa : sqrt_floor;
    i64 rem = narrow((((i128(target) - f.B) % m) + m) % m); /* in [0, m) */
    i64 b = target - rem;
    i64 c = narrow((i128(b) * b - D) / (4 * i128(f.A)));
    return {f.A, b, c};
}

} // namespace

bqf reduce_indefinite(bqf f, i64 D, i64 sqrt_floor)
{
    if (f.A == 0)
        throw domain_error("reduce_indefinite: zero leading coefficient");
    f = normalized_indefinite(f, D, sqrt_floor);
    for (int iter = 0; iter < 4096; ++iter) {
        if (is_reduced_indefinite(f, sqrt_floor))
            return f;
        f = normalized_indefinite({f.C, -f.B, f.A}, D, sqrt_floor);
    }
    throw domain_error("reduce_indefinite: did not converge");
}

std::vector<bqf> reduced_indefinite_forms(i64 D)
{
    std::vector<bqf> out;
    i64 s = i64(isqrt(u64(D)));
    for (i64 B = 1 + ((D - 1) % 2); B <= s; B += 2) {
        i64 M = narrow((i128(D) - i128(B) * B) / 4);
        if ((i128(D) - i128(B) * B) % 4 != 0 || M <= 0)
            continue;
        for (i64 a = 1; a * a <= M; ++a) {
            if (M % a != 0)
                continue;
            i64 c = M / a;
            /* reduced iff B > |a - c|; both (a,B,-c) and (-a,B,c) and the
             * transposed factorization give candidates */
            i64 diff = a > c ? a - c : c - a;
            if (B <= diff)
                continue;
            bqf f1{a, B, -c}, f2{-a, B, c};
            if (f1.primitive())
                out.push_back(f1);
            if (f2.primitive())
                out.push_back(f2);
            if (a != c) {
                bqf f3{c, B, -a}, f4{-c, B, a};
                if (f3.primitive())
                    out.push_back(f3);
                if (f4.primitive())
                    out.push_back(f4);
            }
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

int cycle_table::index_of(const bqf& f) const
{
    auto it = std::lower_bound(forms.begin(), forms.end(), f);
    if (it == forms.end() || !(*it == f))
        return -1;
    return int(it - forms.begin());
}

int cycle_table::class_of(bqf f) const
{
    f = reduce_indefinite(f, D, sqrt_floor);
    int i = index_of(f);
    if (i < 0)
        throw domain_error("cycle_table: reduced form not in table");
    return cycle_of[i];
}

cycle_table build_cycle_table(i64 D)
{
    cycle_table t;
    t.D = D;
    t.sqrt_floor = i64(isqrt(u64(D)));
    t.forms = reduced_indefinite_forms(D);
    t.cycle_of.assign(t.forms.size(), -1);
    for (size_t i = 0; i < t.forms.size(); ++i) {
        if (t.cycle_of[i] >= 0)
            continue;
        int id = t.n_cycles++;
        bqf f = t.forms[i];
        size_t j = i;
        do {
            t.cycle_of[j] = id;
            f = rho_step(f, D, t.sqrt_floor);
            int k = t.index_of(f);
            if (k < 0)
                throw domain_error("cycle walk left the table");
            j = size_t(k);
        } while (t.cycle_of[j] < 0);
    }
    return t;
}

i64 cl3_indefinite(const cycle_table& t)
{
    /* one representative with positive leading coefficient per cycle */
    std::vector<int> rep(size_t(t.n_cycles), -1);
    for (size_t i = 0; i < t.forms.size(); ++i)
        if (t.forms[i].A > 0 && rep[size_t(t.cycle_of[i])] < 0)
            rep[size_t(t.cycle_of[i])] = int(i);
    i64 n = 0;
    for (int i = 0; i < t.n_cycles; ++i) {
        const bqf& f = t.forms[size_t(rep[size_t(i)])];
        int sq = t.class_of(compose_raw(f, f));
        int inv = t.class_of(f.inverse());
        if (sq == inv)
            ++n;
    }
    return n;
}

} // namespace cubiclass
