#ifndef CUBICLASS_ORDERS_HPP
#define CUBICLASS_ORDERS_HPP

#include "cubiclass/arith.hpp"
#include "cubiclass/bqf.hpp"

namespace cubiclass {

/*
 * Quadratic order of discriminant D = D0 * f^2 with D0 fundamental.
 * eps is 0 or 1 according to D mod 4; tau = (eps + sqrt(D))/2 generates
 * the order over Z, with tau^2 = (D - eps)/4 + eps*tau.
 */
struct quad_ring {
    i64 D = 0;
    i64 D0 = 0;
    i64 f = 1;
    int eps = 0;

    /* (D - eps)/4, the rational part of tau^2 */
    i64 tau_sq_const() const { return (D - eps) / 4; }

    friend bool operator==(const quad_ring&, const quad_ring&) = default;
};

bool is_valid_disc(i64 D);

/* splits D as D0 * f^2; rejects D = 0 and D = 2,3 mod 4 */
quad_ring ring_from_disc(i64 D);

/* odd part of D squarefree and D mod 16 in {1,5,8,9,12,13} */
bool is_maximal_disc(i64 D);

/* number of 3-torsion ideal classes of the order of discriminant D,
 * via the form class group (narrow for D > 0); D non-square */
i64 cl3_count(i64 D);

/* |I_3(O)|: 3-torsion of the invertible-ideal group, via the finite
 * quotient (O_k/f O_k)^x / im (Z/f)^x */
i64 ideal3_count(i64 D);

/* 3 iff D0 = -3 and f > 1 (zeta_3 in the field but not the order) */
int u3_correction(i64 D);

/* |U+(O)/U+(O)^3|: 1 if D < -3, else 3 */
int unit_cube_index(i64 D);

/* |H(O)| = sigma_factor(D) * |Cl_3(O)| */
int sigma_factor(i64 D);

/* ideal3_count split off the ring data, for callers that already factored */
i64 ideal3_count(const quad_ring& R);

} // namespace cubiclass

#endif
