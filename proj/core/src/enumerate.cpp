#include "cubiclass/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

#include "cubiclass/orders.hpp"
#include "cubiclass/sieve.hpp"

namespace cubiclass {

region_tally& region_tally::operator+=(const region_tally& o)
{
    visited += o.visited;
    classes += o.classes;
    irred += o.irred;
    proj += o.proj;
    proj_irred += o.proj_irred;
    proj_red += o.proj_red;
    irred_maximal += o.irred_maximal;
    square_disc += o.square_disc;
    square_disc_irred += o.square_disc_irred;
    return *this;
}

namespace {

inline cubic_form im_form(i64 a, i64 b, i64 c, i64 d)
{
    return {a, b, c, d, form_flavor::integer_matrix};
}

inline bool lex_before_negation(const cubic_form& f)
{
    /* f is lexicographically smaller than -f iff its first nonzero
     * coefficient is negative */
    if (f.a != 0)
        return f.a < 0;
    if (f.b != 0)
        return f.b < 0;
    if (f.c != 0)
        return f.c < 0;
    return f.d < 0;
}

inline bool partition_owns(const partition_spec& part, i64 key)
{
    if (part.count <= 1)
        return true;
    i64 m = key % part.count;
    if (m < 0)
        m += part.count;
    return m == part.index;
}

/* integers d with q(d) = q2 d^2 + q1 d + q0 <= 0, for q2 > 0; endpoints
 * are polished by exact evaluation so rounding can never leak */
std::optional<std::pair<i64, i64>> nonpositive_window(i64 q2, i64 q1, i128 q0)
{
    i128 delta = i128(q1) * q1 - 4 * i128(q2) * q0;
    if (delta < 0)
        return std::nullopt;
    i128 sq = isqrt(delta);
    i64 lo = narrow(floor_div(i128(-q1) - sq, i128(2) * q2));
    i64 hi = narrow(floor_div(i128(-q1) + sq, i128(2) * q2) + 1);
    auto val = [&](i64 d) { return i128(q2) * d * d + i128(q1) * d + q0; };
    while (val(lo) > 0)
        ++lo;
    while (val(lo - 1) <= 0)
        --lo;
    while (val(hi) > 0)
        --hi;
    while (val(hi + 1) <= 0)
        ++hi;
    if (lo > hi)
        return std::nullopt;
    return std::make_pair(lo, hi);
}

/* integers d with a*d in (L, U], a != 0 */
inline std::pair<i64, i64> scaled_halfopen(i64 a, i128 L, i128 U)
{
    if (a > 0)
        return {narrow(floor_div(L, i128(a)) + 1), narrow(floor_div(U, i128(a)))};
    return {narrow(ceil_div(U, i128(a))), narrow(ceil_div(L, i128(a)) - 1)};
}

i64 fourth_root_bound(i64 X, double scale)
{
    return i64(scale * std::pow(double(X), 0.25)) + 2;
}

/* ---------- negative reduced discriminant ---------- */

struct neg_point {
    cubic_form f;
    i64 A, B, C;
    i64 q; /* = -disc = 4AC - B^2, 0 < q < X */
};

/*
 * Visit all integer-matrix forms whose Hessian satisfies
 * -A < B <= A <= C with 0 < 4AC - B^2 < X. Every class with
 * -X < disc < 0 has its full set of reduced-covariant forms in here.
 */
template <typename Fn>
void walk_neg_region(i64 X, const partition_spec& part, u64& visited, Fn&& emit)
{
    i64 B4 = fourth_root_bound(X, std::sqrt(2.0) / std::pow(3.0, 0.25));
    for (i64 b = -B4; b <= B4; ++b) {
        if (!partition_owns(part, b))
            continue;
        /* cusp a = 0: A = b^2, B = -bc, C = c^2 - bd */
        if (b != 0) {
            i64 A = b * b;
            i64 clo = (b > 0) ? -b : -b - (-2 * b) + 1; /* see below */
            i64 chi;
            if (b > 0) {
                clo = -b;
                chi = b - 1;
            } else {
                clo = b + 1;
                chi = -b;
            }
            for (i64 c = clo; c <= chi; ++c) {
                /* b d <= c^2 - A  and  4 b^3 d in (3 b^2 c^2 - X, 3 b^2 c^2) */
                i128 bc2 = i128(3) * b * b * c * c;
                auto [w1lo, w1hi] = scaled_halfopen(narrow(i128(4) * b * b * b),
                                                    bc2 - X, bc2 - 1);
                i64 dlo = w1lo, dhi = w1hi;
                /* A <= C */
                if (b > 0)
                    dhi = std::min(dhi, floor_div(c * c - A, b));
                else
                    dlo = std::max(dlo, ceil_div(c * c - A, b));
                for (i64 d = dlo; d <= dhi; ++d) {
                    ++visited;
                    i64 B = -b * c;
                    i64 C = c * c - b * d;
                    i64 q = narrow(i128(4) * A * C - i128(B) * B);
                    emit(neg_point{im_form(0, b, c, d), A, B, C, q});
                }
            }
        }
        for (i64 a = -B4; a <= B4; ++a) {
            if (a == 0)
                continue;
            i64 aa = a < 0 ? -a : a;
            i64 cmax = icbrt(u64((i128(4) * X) / (3 * aa) > i128(INT64_MAX)
                                     ? u64(INT64_MAX)
                                     : u64((4 * X) / (3 * aa)))) + 2;
            for (i64 c = -cmax; c <= cmax; ++c) {
                i64 A = narrow(i128(b) * b - i128(a) * c);
                if (A < 1)
                    continue;
                i128 bc = i128(b) * c;
                auto [dlo, dhi] = scaled_halfopen(a, bc - A, bc + A);
                if (b > 0)
                    dhi = std::min(dhi, floor_div(c * c - A, b));
                else if (b < 0)
                    dlo = std::max(dlo, ceil_div(c * c - A, b));
                else if (c * c < A)
                    continue; /* b = 0 needs C = c^2 >= A */
                if (dlo > dhi)
                    continue;
                /* exclude q >= X: t(d) = a^2 d^2 + (4Ab - 2abc) d
                 * + (X - 4Ac^2 + b^2 c^2) must stay positive */
                i64 t2 = a * a;
                i64 t1 = narrow(i128(4) * A * b - 2 * i128(a) * b * c);
                i128 t0 = i128(X) - 4 * i128(A) * c * c + i128(b) * b * c * c;
                auto excl = nonpositive_window(t2, t1, t0);
                auto run = [&](i64 lo, i64 hi) {
                    for (i64 d = lo; d <= hi; ++d) {
                        ++visited;
                        i64 B = narrow(i128(a) * d - i128(b) * c);
                        i64 C = narrow(i128(c) * c - i128(b) * d);
                        i64 q = narrow(i128(4) * A * C - i128(B) * B);
                        emit(neg_point{im_form(a, b, c, d), A, B, C, q});
                    }
                };
                if (!excl) {
                    run(dlo, dhi);
                } else {
                    auto [e1, e2] = *excl;
                    if (e1 > dlo)
                        run(dlo, std::min(dhi, e1 - 1));
                    if (e2 < dhi)
                        run(std::max(dlo, e2 + 1), dhi);
                }
            }
        }
    }
}

/* is this reduced-covariant form the canonical class representative? */
bool neg_point_canonical(const neg_point& p)
{
    if (p.A == p.C && p.B < 0)
        return false; /* the A = C wall keeps B >= 0 */
    bool square_wall = (p.B == 0 && p.A == p.C);
    bool hex_wall = (p.A == p.B && p.B == p.C);
    if (!square_wall && !hex_wall)
        return lex_before_negation(p.f);
    /* small stabilizer orbit, exact tie-break */
    cubic_form best = p.f;
    for (const unimodular_matrix& s : definite_stabilizer(p.A, p.B, p.C)) {
        cubic_form cand = act({s.p, -s.q, -s.r, s.s}, p.f);
        if (cand < best)
            best = cand;
    }
    return best == p.f;
}

/* ---------- positive reduced discriminant ---------- */

/*
 * Classification of a box point on the positive side. The fast paths use
 * exact integer arithmetic (a = 0) or doubles with rigorous error margins;
 * anything near a wall falls back to the fully exact reduction.
 */
enum class pos_status { not_canonical, canonical, uncertain };

pos_status classify_pos_integer_factor(const cubic_form& f, i64 P, i64 Q, i64 R)
{
    /* normalize the definite factor to P > 0 */
    if (P == 0)
        return pos_status::not_canonical; /* degenerate factor cannot be reduced */
    if (P < 0) {
        P = -P;
        Q = -Q;
        R = -R;
    }
    if (!(-P < Q && Q <= P))
        return pos_status::not_canonical;
    if (P > R)
        return pos_status::not_canonical;
    if (P == R) {
        if (Q < 0)
            return pos_status::not_canonical;
        if (Q == 0 || Q == P)
            return pos_status::uncertain; /* square / hexagonal wall */
    }
    return lex_before_negation(f) ? pos_status::canonical : pos_status::not_canonical;
}

pos_status classify_pos_double(const cubic_form& f)
{
    /* d != 0 and no exact rational factor; alpha is the single real root of
     * g(t) = d t^3 + 3c t^2 + 3b t + a */
    double w3 = double(f.d), w2 = 3.0 * double(f.c), w1 = 3.0 * double(f.b),
           w0 = double(f.a);
    auto g = [&](double t) { return ((w3 * t + w2) * t + w1) * t + w0; };
    double M = 2.0 + (std::max({std::fabs(w2), std::fabs(w1), std::fabs(w0)})
                      / std::fabs(w3));
    double lo = -M, hi = M;
    double glo = g(lo);
    if (glo == 0.0 || g(hi) == 0.0 || (glo < 0) == (g(hi) < 0))
        return pos_status::uncertain;
    for (int i = 0; i < 80; ++i) {
        double mid = 0.5 * (lo + hi);
        double gm = g(mid);
        if (gm == 0.0)
            break;
        if ((gm < 0) == (glo < 0)) {
            lo = mid;
            glo = gm;
        } else {
            hi = mid;
        }
        if (hi - lo <= 4e-14 * (std::fabs(lo) + std::fabs(hi) + 1e-300))
            break;
    }
    double al = 0.5 * (lo + hi);
    double eps = 2.2e-16;
    double scale_g = std::fabs(w3) * std::fabs(al * al * al) + std::fabs(w2) * al * al
                     + std::fabs(w1) * std::fabs(al) + std::fabs(w0) + 1e-300;
    double gp = (3 * w3 * al + 2 * w2) * al + w1;
    if (std::fabs(gp) < 1e3 * eps * scale_g)
        return pos_status::uncertain; /* nearly multiple root */
    double err_a = (hi - lo) + 8 * eps * scale_g / std::fabs(gp);

    double P = (w3 * al + w2) * al + w1;
    double Q = w3 * al + w2;
    double R = w3;
    double sP = std::fabs(w3 * al * al) + std::fabs(w2 * al) + std::fabs(w1);
    double sQ = std::fabs(w3 * al) + std::fabs(w2);
    double eP = (std::fabs(w2) + 2 * std::fabs(w3 * al)) * err_a + 8 * eps * sP;
    double eQ = std::fabs(w3) * err_a + 8 * eps * sQ;
    double margin = 1e4 * (eP + eQ) + 1e-250;

    double s = P >= 0 ? 1.0 : -1.0;
    P *= s;
    Q *= s;
    R *= s;
    if (P < margin)
        return pos_status::uncertain;
    /* -P < Q <= P < R, all by a safe margin, else uncertain/reject */
    if (Q + P < -margin || Q - P > margin || P - R > margin)
        return pos_status::not_canonical;
    if (Q + P < margin || Q - P > -margin || P - R > -margin)
        return pos_status::uncertain;
    return lex_before_negation(f) ? pos_status::canonical : pos_status::not_canonical;
}

bool pos_point_canonical(const cubic_form& f)
{
    /* any canonical representative has a strictly positive normalized R
     * entry, and R is +-d, so d = 0 is never canonical */
    if (f.d == 0)
        return false;
    pos_status st;
    if (f.a == 0) {
        /* alpha = 0 exactly: factor is (3b, 3c, d) */
        st = classify_pos_integer_factor(f, 3 * f.b, 3 * f.c, f.d);
    } else {
        auto root = rational_root(f);
        if (root) {
            auto [x0, y0] = *root;
            if (x0 < 0) {
                x0 = -x0;
                y0 = -y0;
            }
            /* scaled by x0^2 > 0 */
            i64 P = narrow(i128(3) * f.b * x0 * x0 + i128(3) * f.c * x0 * y0
                           + i128(f.d) * y0 * y0);
            i64 Q = narrow(i128(3) * f.c * x0 * x0 + i128(f.d) * x0 * y0);
            i64 R = narrow(i128(f.d) * x0 * x0);
            st = classify_pos_integer_factor(f, P, Q, R);
        } else {
            st = classify_pos_double(f);
        }
    }
    if (st == pos_status::uncertain)
        return reduce_pos_full(f).canonical == f;
    return st == pos_status::canonical;
}

struct pos_point {
    cubic_form f;
    i64 D; /* = disc > 0 */
};

template <typename Fn>
void walk_pos_region(i64 X, const partition_spec& part, u64& visited, Fn&& emit)
{
    i64 A4 = fourth_root_bound(X, std::sqrt(6.0));
    i64 B4 = fourth_root_bound(X, 2.0 * std::pow(2.0 / 9.0, 0.25));
    i64 ad_cut = i64(3.0 * std::sqrt(2.0) * std::sqrt(double(X))) + 2;
    i64 bc_cut = i64(4.0 * std::sqrt(2.0) / 3.0 * std::sqrt(double(X))) + 2;

    auto run_d = [&](i64 a, i64 b, i64 c, i64 lo, i64 hi) {
        for (i64 d = lo; d <= hi; ++d) {
            ++visited;
            i128 disc = i128(a) * a * d * d
                        + (i128(4) * b * b * b - i128(6) * a * b * c) * d
                        + i128(4) * a * c * c * c - i128(3) * b * b * c * c;
            if (disc <= 0 || disc >= X)
                continue;
            emit(pos_point{im_form(a, b, c, d), narrow(disc)});
        }
    };

    for (i64 b = -B4; b <= B4; ++b) {
        if (!partition_owns(part, b))
            continue;
        /* cusp a = 0 (disc = 4 b^3 d - 3 b^2 c^2, linear in d) */
        if (b != 0) {
            i64 cmax = bc_cut / (b < 0 ? -b : b) + 1;
            for (i64 c = -cmax; c <= cmax; ++c) {
                i128 base = i128(3) * b * b * c * c;
                auto [dlo, dhi] = scaled_halfopen(narrow(i128(4) * b * b * b),
                                                  base, base + X - 1);
                for (i64 d = dlo; d <= dhi; ++d) {
                    ++visited;
                    i64 disc = narrow(i128(4) * b * b * b * d - base);
                    if (disc > 0 && disc < X)
                        emit(pos_point{im_form(0, b, c, d), disc});
                }
            }
        }
        for (i64 a = -A4; a <= A4; ++a) {
            if (a == 0)
                continue;
            i64 aa = a < 0 ? -a : a;
            i64 cmax = icbrt(u64((i128(20) * X) / (3 * aa) > i128(INT64_MAX)
                                     ? u64(INT64_MAX)
                                     : u64((20 * X) / (3 * aa)))) + 2;
            if (b != 0)
                cmax = std::min(cmax, bc_cut / (b < 0 ? -b : b) + 1);
            for (i64 c = -cmax; c <= cmax; ++c) {
                /* |ad| cut */
                i64 dlo = -(ad_cut / aa) - 1, dhi = (ad_cut / aa) + 1;
                if (b != 0) {
                    i64 bb = b < 0 ? -b : b;
                    i64 cut = i64((i128(20) * X / 3) / (i128(bb) * bb * bb)) + 1;
                    dlo = std::max(dlo, -cut);
                    dhi = std::min(dhi, cut);
                }
                if (c != 0) {
                    /* c^2 |9bc - ad| < 432 X */
                    i128 T = i128(432) * X / (i128(c) * c) + 1;
                    i128 mid = i128(9) * b * c;
                    auto [l2, h2] = scaled_halfopen(a, mid - T - 1, mid + T);
                    dlo = std::max(dlo, l2);
                    dhi = std::min(dhi, h2);
                }
                if (dlo > dhi)
                    continue;
                /* disc in (0, X): keep the window where disc < X, minus the
                 * middle where disc <= 0 */
                i64 u2 = a * a;
                i64 u1 = narrow(i128(4) * b * b * b - i128(6) * a * b * c);
                i128 u0 = i128(4) * a * c * c * c - i128(3) * b * b * c * c;
                auto ltX = nonpositive_window(u2, u1, u0 - (X - 1)); /* disc <= X-1 */
                if (!ltX)
                    continue;
                dlo = std::max(dlo, ltX->first);
                dhi = std::min(dhi, ltX->second);
                if (dlo > dhi)
                    continue;
                auto nonpos = nonpositive_window(u2, u1, u0); /* disc <= 0 */
                if (!nonpos) {
                    run_d(a, b, c, dlo, dhi);
                } else {
                    auto [e1, e2] = *nonpos;
                    if (e1 > dlo)
                        run_d(a, b, c, dlo, std::min(dhi, e1 - 1));
                    if (e2 < dhi)
                        run_d(a, b, c, std::max(dlo, e2 + 1), dhi);
                }
            }
        }
    }
}

} // namespace

void for_each_canonical(i64 X, disc_sign sign,
                        const std::function<void(const cubic_form&, i64)>& fn,
                        const partition_spec& part, const progress_fn& progress,
                        u64* visited_out)
{
    u64 visited = 0;
    u64 classes = 0;
    u64 next_tick = 1 << 20;
    auto tick = [&]() {
        if (progress && visited >= next_tick) {
            progress(visited, classes);
            next_tick += 1 << 20;
        }
    };
    if (sign == disc_sign::negative) {
        walk_neg_region(X, part, visited, [&](const neg_point& p) {
            if (neg_point_canonical(p)) {
                ++classes;
                fn(p.f, -p.q);
            }
            tick();
        });
    } else {
        walk_pos_region(X, part, visited, [&](const pos_point& p) {
            if (pos_point_canonical(p.f)) {
                ++classes;
                fn(p.f, p.D);
            }
            tick();
        });
    }
    if (progress)
        progress(visited, classes);
    if (visited_out)
        *visited_out = visited;
}

region_tally region_census(i64 X, disc_sign sign, const partition_spec& part,
                           const progress_fn& progress)
{
    region_tally t;
    /* maximality bitmap: odd part squarefree and D mod 16 in the list */
    factor_sieve sieve(X + 1);
    std::vector<bool> sq(size_t(X) + 1, false);
    for (i64 k = 1; k * k <= X; ++k)
        sq[size_t(k * k)] = true;
    for_each_canonical(
        X, sign,
        [&](const cubic_form& f, i64 D) {
            i64 absD = D < 0 ? -D : D;
            bool square = sign == disc_sign::positive && sq[size_t(absD)];
            bool red = is_reducible(f);
            bool proj = is_projective(f);
            ++t.classes;
            if (square) {
                ++t.square_disc;
                if (!red)
                    ++t.square_disc_irred;
            }
            if (!red) {
                ++t.irred;
                if (is_maximal_disc(D))
                    ++t.irred_maximal;
            }
            if (proj) {
                ++t.proj;
                if (red)
                    ++t.proj_red;
                else
                    ++t.proj_irred;
            }
        },
        part, progress, &t.visited);
    return t;
}

i64 count_classes(i64 X, disc_sign sign, const class_filter& filter,
                  const partition_spec& part, const progress_fn& progress)
{
    i64 n = 0;
    for_each_canonical(
        X, sign,
        [&](const cubic_form& f, i64 D) {
            if (filter.maximal_only && !is_maximal_disc(D))
                return;
            if (filter.family && !filter.family(D))
                return;
            if (filter.irreducible_only || filter.reducible_only) {
                bool red = is_reducible(f);
                if (filter.irreducible_only && red)
                    return;
                if (filter.reducible_only && !red)
                    return;
            }
            if (filter.projective_only && !is_projective(f))
                return;
            ++n;
        },
        part, progress);
    return n;
}

std::vector<i64> class_counts_per_disc(i64 bound, disc_sign sign)
{
    std::vector<i64> out(size_t(bound) + 1, 0);
    for_each_canonical(bound + 1, sign, [&](const cubic_form&, i64 D) {
        i64 absD = D < 0 ? -D : D;
        ++out[size_t(absD)];
    });
    return out;
}

disc_classes classes_with_disc(i64 D)
{
    if (D == 0)
        throw domain_error("classes_with_disc: D must be nonzero");
    i64 absD = D < 0 ? -D : D;
    disc_classes out;
    out.record.D = D;
    for_each_canonical(absD + 1,
                       D < 0 ? disc_sign::negative : disc_sign::positive,
                       [&](const cubic_form& f, i64 got) {
                           if (got != D)
                               return;
                           out.classes.push_back(f);
                       });
    std::sort(out.classes.begin(), out.classes.end());
    for (const cubic_form& f : out.classes) {
        ++out.record.n_total;
        bool red = is_reducible(f);
        if (!red)
            ++out.record.n_irred;
        if (is_projective(f)) {
            ++out.record.n_proj;
            if (red)
                ++out.record.n_proj_red;
        }
    }
    return out;
}

std::map<i64, disc_classes> classes_in_range(i64 bound, disc_sign sign)
{
    std::map<i64, disc_classes> out;
    for_each_canonical(bound + 1, sign, [&](const cubic_form& f, i64 D) {
        disc_classes& dc = out[D];
        dc.record.D = D;
        dc.classes.push_back(f);
        ++dc.record.n_total;
        bool red = is_reducible(f);
        if (!red)
            ++dc.record.n_irred;
        if (is_projective(f)) {
            ++dc.record.n_proj;
            if (red)
                ++dc.record.n_proj_red;
        }
    });
    for (auto& [D, dc] : out)
        std::sort(dc.classes.begin(), dc.classes.end());
    return out;
}

/* ---------- the paper's a = 0 counting loops ---------- */

a0_count count_reducible_a0(i64 X, disc_sign sign, i64 n, const partition_spec& part)
{
    if (n < 1)
        throw domain_error("count_reducible_a0: n must be positive");
    a0_count out;
    for (i64 b1 = 1;; ++b1) {
        i64 b = n * b1;
        if (i128(2) * b * b * b * b > i128(X) * 2 + 8 * i128(b) * b * b)
            break; /* every d-window below is empty from here on */
        if (!partition_owns(part, b1))
            continue;
        for (i64 c1 = -b1 + 1; c1 <= b1; ++c1) {
            i64 c = n * c1;
            i128 b3 = i128(4) * b * b * b;
            i128 s = i128(3) * b * b * c * c;
            i64 dlo, dhi;
            if (sign == disc_sign::negative) {
                /* 3c^2/(4b) - X/(4b^3) < d <= c^2/b - b */
                dlo = narrow(floor_div(s - X, b3) + 1);
                dhi = floor_div(c * c - b * b, b);
            } else {
                /* 3b < d < X/(4b^3) + 3c^2/(4b) */
                dlo = 3 * b + 1;
                dhi = narrow(ceil_div(i128(X) + s, b3) - 1);
            }
            for (i64 d = dlo; d <= dhi; ++d) {
                i64 disc = narrow(i128(4) * b * b * b * d - s);
                if (sign == disc_sign::positive && is_square(disc))
                    ++out.square;
                else
                    ++out.nonsquare;
            }
        }
    }
    return out;
}

a0_count count_proj_reducible(i64 X, disc_sign sign, const partition_spec& part)
{
    i64 nmax = fourth_root_bound(X, 1.0) + 2;
    factor_sieve sieve(nmax + 2);
    a0_count out;
    for (i64 n = 1; n <= nmax; ++n) {
        int mu = sieve.moebius(n);
        if (mu == 0)
            continue;
        a0_count c = count_reducible_a0(X, sign, n, part);
        out.nonsquare += mu * c.nonsquare;
        out.square += mu * c.square;
    }
    return out;
}

std::vector<i64> reducible_projective_per_disc(i64 bound, disc_sign sign)
{
    std::vector<i64> out(size_t(bound) + 1, 0);
    std::set<std::pair<i64, std::array<i64, 4>>> seen;
    i64 bmax = i64(isqrt(u64(bound)));
    for (i64 b = 1; b <= bmax; ++b) {
        for (i64 c = -b + 1; c <= b; ++c) {
            if (gcd_i64(b, c) != 1)
                continue;
            /* disc = 4 b^3 d - 3 b^2 c^2 with 0 < |disc| <= bound */
            i128 s = i128(3) * b * b * c * c;
            i128 b3 = i128(4) * b * b * b;
            i64 dlo, dhi;
            if (sign == disc_sign::negative) {
                dlo = narrow(ceil_div(s - bound, b3));
                dhi = narrow(ceil_div(s, b3) - 1);
            } else {
                dlo = narrow(floor_div(s, b3) + 1);
                dhi = narrow(floor_div(s + bound, b3));
            }
            for (i64 d = dlo; d <= dhi; ++d) {
                i64 disc = narrow(i128(4) * b * b * b * d - s);
                if (disc == 0 || (sign == disc_sign::negative ? disc > 0 : disc < 0))
                    continue;
                i64 absD = disc < 0 ? -disc : disc;
                if (absD > bound)
                    continue;
                cubic_form f = im_form(0, b, c, d);
                cubic_form canon = canonical_form(f);
                if (seen.emplace(disc, canon.coeffs()).second)
                    ++out[size_t(absD)];
            }
        }
    }
    return out;
}

/* ---------- cubic census on classical forms ---------- */

namespace {

/* GL_2(Z) canonical key: the smaller of the two SL_2 canonical forms */
cubic_form gl2_canonical(const cubic_form& f)
{
    cubic_form c1 = canonical_form(f);
    cubic_form mirror{f.d, f.c, f.b, f.a, f.flavor};
    cubic_form c2 = canonical_form(mirror);
    return std::min(c1, c2);
}

template <typename Fn>
void walk_classical_box(i64 bound, Fn&& fn)
{
    /* Davenport's bounds transported to classical coordinates
     * (a, b, c, d) ~ integer-matrix (a, b/3, c/3, d) with X = bound/27 + 1;
     * generous margins, candidates are filtered by exact disc anyway */
    double Xim = double(bound) / 27.0 + 1.0;
    i64 amax = i64(std::sqrt(6.0) * std::pow(Xim, 0.25)) + 2;
    i64 bmax = i64(6.0 * std::pow(2.0 / 9.0, 0.25) * std::pow(Xim, 0.25)) + 3;
    i64 ad_cut = i64(3.0 * std::sqrt(2.0) * std::sqrt(Xim)) + 2;
    for (i64 a = -amax; a <= amax; ++a) {
        if (a == 0)
            continue; /* irreducible forms have a != 0 */
        i64 aa = a < 0 ? -a : a;
        i64 cmax = icbrt(u64(180.0 * Xim / double(aa))) + 2;
        for (i64 b = -bmax; b <= bmax; ++b) {
            for (i64 c = -cmax; c <= cmax; ++c) {
                i64 dmax = ad_cut / aa + 1;
                for (i64 d = -dmax; d <= dmax; ++d) {
                    if (d == 0)
                        continue; /* irreducible forms have d != 0 */
                    fn(cubic_form{a, b, c, d, form_flavor::classical});
                }
            }
        }
    }
}

} // namespace

std::map<i64, i64> census_range(i64 bound)
{
    std::map<i64, std::set<std::array<i64, 4>>> reps;
    walk_classical_box(bound, [&](const cubic_form& f) {
        i64 D = classical_disc(f);
        if (D == 0 || (D < 0 ? -D : D) > bound)
            return;
        if (rational_root(f))
            return;
        reps[D].insert(gl2_canonical(f).coeffs());
    });
    std::map<i64, i64> out;
    for (auto& [D, s] : reps)
        out[D] = i64(s.size());
    return out;
}

i64 cubic_census_squarefree(i64 D)
{
    if (D == 0)
        throw domain_error("cubic_census_squarefree: D must be nonzero");
    i64 absD = D < 0 ? -D : D;
    for (auto [p, e] : factor_trial(absD))
        if (e >= 2)
            throw domain_error("cubic_census_squarefree: D must be squarefree");
    i64 n = 0;
    std::set<std::array<i64, 4>> reps;
    walk_classical_box(absD, [&](const cubic_form& f) {
        if (classical_disc(f) != D)
            return;
        if (rational_root(f))
            return;
        reps.insert(gl2_canonical(f).coeffs());
    });
    n = i64(reps.size());
    return n;
}

} // namespace cubiclass
