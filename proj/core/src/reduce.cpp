#include "cubiclass/reduce.hpp"

#include <algorithm>

#include "cubiclass/realroot.hpp"

namespace cubiclass {

namespace {

/* conjugation by diag(1,-1); H(act(g,f)) = act(conj(g), H(f)) for det g = 1 */
unimodular_matrix sign_conj(const unimodular_matrix& g)
{
    return {g.p, -g.q, -g.r, g.s};
}

} // namespace

std::vector<unimodular_matrix> definite_stabilizer(i64 A, i64 B, i64 C)
{
    std::vector<unimodular_matrix> out{mat_identity(), mat_neg_identity()};
    bool square_wall = (B == 0 && A == C);
    bool hex_wall = (A == B && B == C);
    if (!square_wall && !hex_wall)
        return out;
    quad_covariant Q{A, B, C};
    for (i64 p = -1; p <= 1; ++p)
        for (i64 q = -1; q <= 1; ++q)
            for (i64 r = -1; r <= 1; ++r)
                for (i64 s = -1; s <= 1; ++s) {
                    unimodular_matrix g{p, q, r, s};
                    if (p * s - q * r != 1)
                        continue;
                    if (g == mat_identity() || g == mat_neg_identity())
                        continue;
                    if (act(g, Q) == Q)
                        out.push_back(g);
                }
    return out;
}

reduction_result reduce_neg_full(const cubic_form& f)
{
    if (hessian_disc(f) >= 0)
        throw domain_error("reduce_neg: definite-covariant side requires negative reduced disc");
    cubic_form cur = f;
    unimodular_matrix g = mat_identity();
    for (int iter = 0;; ++iter) {
        if (iter > 512)
            throw domain_error("reduce_neg: reduction did not converge");
        quad_covariant h = hessian(cur);
        if (h.A <= 0)
            throw domain_error("reduce_neg: covariant not positive definite");
        if (!(-h.A < h.B && h.B <= h.A)) {
            i64 k = floor_div(h.A - h.B, 2 * h.A);
            /* translate B by 2Ak on the covariant = act by {1,0,-k,1} on f */
            unimodular_matrix step{1, 0, -k, 1};
            cur = act(step, cur);
            g = step * g;
            continue;
        }
        if (h.A > h.C || (h.A == h.C && h.B < 0)) {
            unimodular_matrix step{0, 1, -1, 0}; /* sign_conj of the swap */
            cur = act(step, cur);
            g = step * g;
            continue;
        }
        break;
    }
    quad_covariant h = hessian(cur);
    cubic_form best = cur;
    unimodular_matrix best_g = g;
    for (const unimodular_matrix& s : definite_stabilizer(h.A, h.B, h.C)) {
        unimodular_matrix sc = sign_conj(s);
        cubic_form cand = act(sc, cur);
        if (cand < best) {
            best = cand;
            best_g = sc * g;
        }
    }
    return {best, best_g};
}

cubic_form reduce_neg(const cubic_form& f)
{
    return reduce_neg_full(f).canonical;
}

namespace {

/* the definite quadratic factor of a positive-reduced-disc form, as integer
 * coordinate triples over {1, alpha, alpha^2} */
struct factor_state {
    real_root alpha;
    /* coordinates of P, Q, R */
    std::array<i64, 3> P, Q, R;

    int sign(const std::array<i64, 3>& x) const
    {
        return alpha.sign_lincomb(x[0], x[1], x[2]);
    }

    static std::array<i64, 3> sub(const std::array<i64, 3>& x, const std::array<i64, 3>& y)
    {
        return {checked_sub(x[0], y[0]), checked_sub(x[1], y[1]), checked_sub(x[2], y[2])};
    }

    static std::array<i64, 3> add(const std::array<i64, 3>& x, const std::array<i64, 3>& y)
    {
        return {checked_add(x[0], y[0]), checked_add(x[1], y[1]), checked_add(x[2], y[2])};
    }

    static std::array<i64, 3> scale(i64 k, const std::array<i64, 3>& x)
    {
        return {checked_mul(k, x[0]), checked_mul(k, x[1]), checked_mul(k, x[2])};
    }

    void negate()
    {
        P = scale(-1, P);
        Q = scale(-1, Q);
        R = scale(-1, R);
    }

    /* (P, Q, R) -> (P, Q + 2kP, R + kQ + k^2 P) */
    void translate(i64 k)
    {
        R = add(R, add(scale(k, Q), scale(checked_mul(k, k), P)));
        Q = add(Q, scale(checked_mul(2, k), P));
    }

    void swap()
    {
        std::swap(P, R);
        Q = scale(-1, Q);
    }

    double approx(const std::array<i64, 3>& x) const
    {
        double t = alpha.approx();
        return double(x[0]) + double(x[1]) * t + double(x[2]) * t * t;
    }
};

factor_state make_factor(const cubic_form& f)
{
    /* expanded middle coefficients: f = a x^3 + w1 x^2 y + w2 x y^2 + w3 y^3 */
    i64 w1, w2, w3;
    if (f.flavor == form_flavor::integer_matrix) {
        w1 = checked_mul(3, f.b);
        w2 = checked_mul(3, f.c);
        w3 = f.d;
    } else {
        w1 = f.b;
        w2 = f.c;
        w3 = f.d;
    }
    factor_state st{real_root::rational(0, 1), {}, {}, {}};
    auto root = rational_root(f);
    if (root) {
        auto [x0, y0] = *root;
        /* x0 != 0 here (the d = 0 case is pre-transformed away) */
        if (x0 < 0) {
            x0 = -x0;
            y0 = -y0;
        }
        st.alpha = real_root::rational(y0, x0);
        /* scale (P,Q,R) by x0^2 > 0; the scaled entries are plain integers,
         * kept in the constant coordinate */
        i64 x2 = checked_mul(x0, x0), xy = checked_mul(x0, y0), y2 = checked_mul(y0, y0);
        st.P = {checked_add(checked_add(checked_mul(w1, x2), checked_mul(w2, xy)),
                            checked_mul(w3, y2)),
                0, 0};
        st.Q = {checked_add(checked_mul(w2, x2), checked_mul(w3, xy)), 0, 0};
        st.R = {checked_mul(w3, x2), 0, 0};
    } else {
        st.alpha = real_root::cubic(w3, w2, w1, f.a);
        st.P = {w1, w2, w3};
        st.Q = {w2, w3, 0};
        st.R = {w3, 0, 0};
    }
    if (st.sign(st.P) < 0)
        st.negate();
    return st;
}

} // namespace

reduction_result reduce_pos_full(const cubic_form& f)
{
    if (hessian_disc(f) <= 0)
        throw domain_error("reduce_pos: definite-factor side requires positive reduced disc");
    cubic_form cur = f;
    unimodular_matrix g = mat_identity();
    if (cur.d == 0) {
        /* move the root at infinity (alpha undefined) elsewhere first */
        unimodular_matrix step{0, 1, -1, 0};
        cur = act(step, cur);
        g = step * g;
    }
    factor_state st = make_factor(cur);
    for (int iter = 0;; ++iter) {
        if (iter > 512)
            throw domain_error("reduce_pos: reduction did not converge");
        /* bring Q into (-P, P] */
        int qp = st.sign(factor_state::sub(st.Q, st.P));          /* Q - P */
        int qmp = st.sign(factor_state::add(st.Q, st.P));         /* Q + P */
        if (qp > 0 || qmp <= 0) {
            double pa = st.approx(st.P), qa = st.approx(st.Q);
            i64 k = i64(std::llround((pa - qa) / (2 * pa)));
            /* exactness check: Q + 2kP must land in (-P, P]; adjust k */
            for (int tries = 0;; ++tries) {
                if (tries > 80)
                    throw domain_error("reduce_pos: translation step diverged");
                auto qn = factor_state::add(st.Q, factor_state::scale(2 * k, st.P));
                int hi = st.sign(factor_state::sub(qn, st.P));
                int lo = st.sign(factor_state::add(qn, st.P));
                if (hi <= 0 && lo > 0)
                    break;
                if (hi > 0)
                    --k;
                else
                    ++k;
            }
            st.translate(k);
            unimodular_matrix step{1, 0, k, 1};
            cur = act(step, cur);
            g = step * g;
            continue;
        }
        /* swap if P > R, or P = R and Q < 0 */
        int pr = st.sign(factor_state::sub(st.P, st.R));
        if (pr > 0 || (pr == 0 && st.sign(st.Q) < 0)) {
            st.swap();
            unimodular_matrix step{0, -1, 1, 0};
            cur = act(step, cur);
            g = step * g;
            continue;
        }
        break;
    }
    /* stabilizer of the reduced real factor */
    std::vector<unimodular_matrix> stab{mat_identity(), mat_neg_identity()};
    int pr = st.sign(factor_state::sub(st.P, st.R));
    int q0 = st.sign(st.Q);
    int pq = st.sign(factor_state::sub(st.P, st.Q));
    if (pr == 0 && (q0 == 0 || pq == 0)) {
        /* proportional to (1,0,1) or (1,1,1): borrow the integer automorphs */
        i64 A = 1, B = (pq == 0 ? 1 : 0), C = 1;
        stab = definite_stabilizer(A, B, C);
    }
    cubic_form best = cur;
    unimodular_matrix best_g = g;
    for (const unimodular_matrix& s : stab) {
        cubic_form cand = act(s, cur);
        if (cand < best) {
            best = cand;
            best_g = s * g;
        }
    }
    return {best, best_g};
}

cubic_form reduce_pos(const cubic_form& f)
{
    return reduce_pos_full(f).canonical;
}

reduction_result canonical_form_full(const cubic_form& f)
{
    i64 h = hessian_disc(f);
    if (h == 0)
        throw domain_error("canonical_form: degenerate form");
    return h < 0 ? reduce_neg_full(f) : reduce_pos_full(f);
}

cubic_form canonical_form(const cubic_form& f)
{
    return canonical_form_full(f).canonical;
}

int sl2_stabilizer_order(const cubic_form& f)
{
    /* count stabilizer candidates fixing f among the covariant/factor
     * stabilizer; 1 or 3 for nondegenerate forms (Cor. of the triple
     * correspondence: U_3 of the endomorphism ring) */
    reduction_result r = canonical_form_full(f);
    const cubic_form& c = r.canonical;
    int n = 0;
    std::vector<unimodular_matrix> cands;
    if (hessian_disc(f) < 0) {
        quad_covariant h = hessian(c);
        for (const unimodular_matrix& s : definite_stabilizer(h.A, h.B, h.C))
            cands.push_back(sign_conj(s));
    } else {
        /* the only candidates with a chance are the hexagonal rotations */
        for (const unimodular_matrix& s : definite_stabilizer(1, 1, 1))
            cands.push_back(s);
        for (const unimodular_matrix& s : definite_stabilizer(1, 0, 1))
            cands.push_back(s);
    }
    for (const unimodular_matrix& s : cands)
        if (act(s, c) == c)
            ++n;
    return n > 1 ? n : 1;
}

} // namespace cubiclass
