#ifndef CUBICLASS_BQF_HPP
#define CUBICLASS_BQF_HPP

#include <array>
#include <vector>

#include "cubiclass/arith.hpp"

namespace cubiclass {

/*
 * Binary quadratic form A x^2 + B xy + C y^2. These are the independent
 * class-group oracle: reduced definite forms under Gauss composition for
 * D < 0, reduction cycles of indefinite forms (narrow classes) for D > 0.
 */
struct bqf {
    i64 A = 0, B = 0, C = 0;

    i64 disc() const { return narrow(i128(B) * B - 4 * i128(A) * C); }
    bool primitive() const { return gcd_i64(gcd_i64(A, B), C) == 1; }
    bqf inverse() const { return {A, -B, C}; }

    friend bool operator==(const bqf&, const bqf&) = default;
    friend auto operator<=>(const bqf& f, const bqf& g)
    {
        return std::array<i64, 3>{f.A, f.B, f.C} <=> std::array<i64, 3>{g.A, g.B, g.C};
    }
};

/* Gauss reduction of a positive definite form (A > 0, disc < 0):
 * -A < B <= A < C or 0 <= B <= A = C. */
bqf reduce_definite(bqf f);
bool is_reduced_definite(const bqf& f);

/* principal form of discriminant D */
bqf principal_bqf(i64 D);

/* Dirichlet/Gauss composition of primitive forms of equal discriminant.
 * The result is not reduced. */
bqf compose_raw(const bqf& f, const bqf& g);

/* All reduced primitive positive definite forms of discriminant D < 0,
 * i.e. the class group Cl(D). */
std::vector<bqf> reduced_definite_forms(i64 D);

/* number of classes x with x^3 = 1 in Cl(D), D < 0 non-square */
i64 cl3_definite(i64 D);

/* --- indefinite machinery (D > 0 non-square) --- */

bool is_reduced_indefinite(const bqf& f, i64 sqrt_floor);

/* reduction step on a reduced form; walks the cycle */
bqf rho_step(const bqf& f, i64 D, i64 sqrt_floor);

/* reduce an arbitrary form of discriminant D > 0 to a reduced one */
bqf reduce_indefinite(bqf f, i64 D, i64 sqrt_floor);

/* all reduced primitive forms of discriminant D > 0 */
std::vector<bqf> reduced_indefinite_forms(i64 D);

/*
 * Cycle decomposition of the reduced primitive forms of discriminant
 * D > 0 non-square. forms is sorted; cycle_of[i] identifies the cycle
 * (= narrow ideal class) of forms[i].
 */
struct cycle_table {
    i64 D = 0;
    i64 sqrt_floor = 0;
    std::vector<bqf> forms;        /* sorted */
    std::vector<int> cycle_of;     /* parallel to forms */
    int n_cycles = 0;              /* = narrow class number h+(D) */

    int index_of(const bqf& f) const; /* -1 if absent */
    int class_of(bqf f) const;        /* reduces, then looks up */
};

cycle_table build_cycle_table(i64 D);

/* number of narrow classes x with x^3 = 1, using a prebuilt table */
i64 cl3_indefinite(const cycle_table& t);

} // namespace cubiclass

#endif
