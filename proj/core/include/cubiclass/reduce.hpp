#ifndef CUBICLASS_REDUCE_HPP
#define CUBICLASS_REDUCE_HPP

#include <vector>

#include "cubiclass/forms.hpp"

namespace cubiclass {

struct reduction_result {
    cubic_form canonical;
    unimodular_matrix gamma; /* canonical = act(gamma, f), det = +1 */
};

/*
 * Canonical SL_2(Z)-orbit representative for hessian_disc(f) < 0
 * (integer-matrix reduced disc < 0; classical disc > 0): reduce the
 * positive definite Hessian covariant to -A < B <= A < C or
 * 0 <= B <= A = C, then take the lexicographically least quadruple among
 * the finitely many forms with that reduced covariant.
 */
reduction_result reduce_neg_full(const cubic_form& f);

/*
 * Canonical representative for hessian_disc(f) > 0 via the definite
 * quadratic factor (P, Q, R) at the unique real root of f(1,t);
 * sign comparisons are exact (rational or cubic-irrational alpha).
 */
reduction_result reduce_pos_full(const cubic_form& f);

cubic_form reduce_neg(const cubic_form& f);
cubic_form reduce_pos(const cubic_form& f);

/* dispatch on the sign of hessian_disc */
reduction_result canonical_form_full(const cubic_form& f);
cubic_form canonical_form(const cubic_form& f);

/*
 * SL_2(Z) stabilizer matrices (acting on quadratic forms by substitution)
 * of a reduced positive definite form: {+-1}, plus the rotations for the
 * square (Q = 0, A = C) and hexagonal (A = B = C) walls.
 */
std::vector<unimodular_matrix> definite_stabilizer(i64 A, i64 B, i64 C);

/* order of the SL_2(Z) stabilizer of f itself (1 or 3 for nondegenerate) */
int sl2_stabilizer_order(const cubic_form& f);

} // namespace cubiclass

#endif
