#ifndef CUBICLASS_FORMS_HPP
#define CUBICLASS_FORMS_HPP

#include <array>
#include <compare>
#include <iosfwd>
#include <optional>

#include "cubiclass/arith.hpp"

namespace cubiclass {

enum class form_flavor : unsigned char {
    /* a x^3 + 3b x^2 y + 3c x y^2 + d y^3 */
    integer_matrix,
    /* a x^3 + b x^2 y + c x y^2 + d y^3 */
    classical,
};

/*
 * Binary cubic form with integer coefficients. The integer_matrix flavor
 * stores the quadruple (a,b,c,d) of a x^3 + 3b x^2 y + 3c x y^2 + d y^3;
 * the classical flavor stores the plain coefficients.
 */
struct cubic_form {
    i64 a = 0, b = 0, c = 0, d = 0;
    form_flavor flavor = form_flavor::integer_matrix;

    std::array<i64, 4> coeffs() const { return {a, b, c, d}; }

    friend bool operator==(const cubic_form&, const cubic_form&) = default;

    /* lexicographic order on (a,b,c,d); flavors must match */
    friend auto operator<=>(const cubic_form& f, const cubic_form& g)
    {
        return f.coeffs() <=> g.coeffs();
    }
};

std::ostream& operator<<(std::ostream& o, const cubic_form& f);

/* 2x2 integer matrix acting on row vectors: (x,y) -> (px + ry, qx + sy) */
struct unimodular_matrix {
    i64 p = 1, q = 0, r = 0, s = 1;

    i64 det() const { return narrow(i128(p) * s - i128(q) * r); }

    friend bool operator==(const unimodular_matrix&, const unimodular_matrix&) = default;
};

unimodular_matrix operator*(const unimodular_matrix& g, const unimodular_matrix& h);

inline unimodular_matrix mat_identity() { return {1, 0, 0, 1}; }
inline unimodular_matrix mat_neg_identity() { return {-1, 0, 0, -1}; }
/* (x,y) -> (y,-x); maps (A,B,C) to (C,-B,A) */
inline unimodular_matrix mat_swap() { return {0, -1, 1, 0}; }
/* (x,y) -> (x+ky, y); maps (A,B,C) to (A, B+2Ak, ...) */
inline unimodular_matrix mat_translate(i64 k) { return {1, 0, k, 1}; }

/* A x^2 + B xy + C y^2 */
struct quad_covariant {
    i64 A = 0, B = 0, C = 0;

    friend bool operator==(const quad_covariant&, const quad_covariant&) = default;
};

std::ostream& operator<<(std::ostream& o, const quad_covariant& q);

/*
 * Reduced discriminant -3b^2c^2 + 4ac^3 + 4b^3d + a^2d^2 - 6abcd of an
 * integer-matrix form; equals -Disc/27 for the expanded form and the
 * discriminant of the quadratic ring attached to the form's orbit.
 */
i64 reduced_disc(const cubic_form& f);

/* Classical discriminant 18abcd - 4b^3d + b^2c^2 - 4ac^3 - 27a^2d^2. */
i64 classical_disc(const cubic_form& f);

/*
 * Discriminant used to steer reduction: reduced_disc for integer-matrix
 * forms and -3 * classical_disc for classical ones (the discriminant of
 * hessian(f) in both cases, so negative iff the Hessian is definite).
 */
i64 hessian_disc(const cubic_form& f);

inline bool is_degenerate(const cubic_form& f) { return hessian_disc(f) == 0; }

/*
 * Quadratic Hessian covariant: (b^2-ac, ad-bc, c^2-bd) for integer-matrix
 * forms, (b^2-3ac, bc-9ad, c^2-3bd) for classical ones.
 */
quad_covariant hessian(const cubic_form& f);

/* Twisted action (g f)(x,y) = f((x,y) g) / det(g); requires det = +-1. */
cubic_form act(const unimodular_matrix& g, const cubic_form& f);

/* Substitution action on a quadratic form, Q -> Q((x,y) g). */
quad_covariant act(const unimodular_matrix& g, const quad_covariant& Q);

/* gcd of the Hessian coefficients is 1; rejects degenerate forms. */
bool is_projective(const cubic_form& f);

/*
 * A primitive projective zero (x0, y0) of f, if one exists, normalized to
 * y0 >= 0 and x0 > 0 when y0 = 0. Rejects degenerate forms.
 */
std::optional<std::pair<i64, i64>> rational_root(const cubic_form& f);

inline bool is_reducible(const cubic_form& f) { return rational_root(f).has_value(); }

} // namespace cubiclass

#endif
