#ifndef CUBICLASS_REALROOT_HPP
#define CUBICLASS_REALROOT_HPP

#include <gmpxx.h>

#include "cubiclass/arith.hpp"

namespace cubiclass {

/*
 * Exact sign arithmetic in Z[alpha] where alpha is either rational or the
 * unique real root of an integer cubic with no rational root. Used by the
 * indefinite reduction scheme: every quantity compared there is an integer
 * combination u + v*alpha + w*alpha^2, and its sign is decided by interval
 * refinement on an isolating interval, never by floating point.
 */
class real_root {
  public:
    /* alpha = num/den, den > 0 */
    static real_root rational(i64 num, i64 den);

    /* alpha = the unique real root of c3 t^3 + c2 t^2 + c1 t + c0;
     * requires c3 != 0, exactly one real root, and no rational root */
    static real_root cubic(i64 c3, i64 c2, i64 c1, i64 c0);

    bool is_rational() const { return rational_; }

    /* exact sign of u + v*alpha + w*alpha^2 */
    int sign_lincomb(i64 u, i64 v, i64 w) const;

    /* approximation for step-size guesses; never used for decisions */
    double approx() const;

  private:
    real_root() = default;

    mpq_class eval_poly(const mpq_class& t) const;
    void refine() const;

    bool rational_ = false;
    i64 num_ = 0, den_ = 1;          /* rational case */
    i64 c3_ = 0, c2_ = 0, c1_ = 0, c0_ = 0;
    mutable mpq_class lo_, hi_;      /* isolating interval, g(lo) and g(hi) of opposite signs */
};

} // namespace cubiclass

#endif
