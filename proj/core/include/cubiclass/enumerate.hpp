#ifndef CUBICLASS_ENUMERATE_HPP
#define CUBICLASS_ENUMERATE_HPP

#include <functional>
#include <map>
#include <vector>

#include "cubiclass/forms.hpp"
#include "cubiclass/reduce.hpp"

namespace cubiclass {

enum class disc_sign { positive, negative };

inline i64 signed_disc(disc_sign s, i64 absD) { return s == disc_sign::negative ? -absD : absD; }

/* conjunctive filters on canonical class representatives */
struct class_filter {
    bool irreducible_only = false;
    bool reducible_only = false;
    bool projective_only = false;
    bool maximal_only = false;
    std::function<bool(i64)> family; /* optional membership test by discriminant */
};

struct count_record {
    i64 D = 0;
    i64 n_total = 0;
    i64 n_proj = 0;
    i64 n_proj_red = 0;
    i64 n_irred = 0;
};

struct disc_classes {
    count_record record;
    std::vector<cubic_form> classes; /* canonical representatives */
};

/* deterministic partitioned execution: slice index of count slices */
struct partition_spec {
    int index = 0;
    int count = 1;
};

using progress_fn = std::function<void(u64 visited, u64 classes)>;

/*
 * Visit the canonical representative of every SL_2(Z) class of
 * integer-matrix forms with 0 < |reduced disc| < X of the given sign.
 * Boundary tie-breaks match reduce_neg / reduce_pos exactly.
 */
void for_each_canonical(i64 X, disc_sign sign,
                        const std::function<void(const cubic_form&, i64 D)>& fn,
                        const partition_spec& part = {},
                        const progress_fn& progress = {},
                        u64* visited_out = nullptr);

/* one-pass tallies over all classes with 0 < |disc| < X */
struct region_tally {
    u64 visited = 0;
    i64 classes = 0;
    i64 irred = 0;
    i64 proj = 0;
    i64 proj_irred = 0;
    i64 proj_red = 0;
    i64 irred_maximal = 0;
    i64 square_disc = 0; /* classes with perfect-square disc (pos side) */
    i64 square_disc_irred = 0;

    region_tally& operator+=(const region_tally& o);
};

region_tally region_census(i64 X, disc_sign sign, const partition_spec& part = {},
                           const progress_fn& progress = {});

/* streaming count of canonical representatives matching the filter */
i64 count_classes(i64 X, disc_sign sign, const class_filter& filter,
                  const partition_spec& part = {}, const progress_fn& progress = {});

/* canonical class counts per |D| for 0 < |D| <= bound */
std::vector<i64> class_counts_per_disc(i64 bound, disc_sign sign);

/* exhaustive class list and classification at one discriminant */
disc_classes classes_with_disc(i64 D);

/* batch variant: all non-zero |D| <= bound of the given sign */
std::map<i64, disc_classes> classes_in_range(i64 bound, disc_sign sign);

/*
 * Counts of forms 3b x^2 y + 3c x y^2 + d y^3 with b > 0, n | gcd(b, c),
 * -b < c <= b, and d in the paper's window for the sign (reduced covariant
 * on the negative side, reduced quadratic factor on the positive side),
 * 0 < |disc| < X. Perfect-square discriminants are tallied separately.
 */
struct a0_count {
    i64 nonsquare = 0;
    i64 square = 0;
    i64 total() const { return nonsquare + square; }
};

a0_count count_reducible_a0(i64 X, disc_sign sign, i64 n,
                            const partition_spec& part = {});

/* Moebius alternating sum over n of count_reducible_a0 */
a0_count count_proj_reducible(i64 X, disc_sign sign,
                              const partition_spec& part = {});

/*
 * Exact per-|D| counts of SL_2(Z) classes of projective reducible forms,
 * computed from a = 0 representatives (b^2 | D, gcd(b,c) = 1) deduplicated
 * by full canonicalization. Index d of the result is the count at |D| = d.
 */
std::vector<i64> reducible_projective_per_disc(i64 bound, disc_sign sign);

/*
 * Number of GL_2(Z) classes of irreducible classical binary cubic forms of
 * classical discriminant D (= number of cubic fields of discriminant D when
 * D is squarefree). The batch variant returns counts for all 0 < |D| <= bound.
 */
i64 cubic_census_squarefree(i64 D);
std::map<i64, i64> census_range(i64 bound);

} // namespace cubiclass

#endif
