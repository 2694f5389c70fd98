#ifndef CUBICLASS_SIEVE_HPP
#define CUBICLASS_SIEVE_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "cubiclass/arith.hpp"

namespace cubiclass {

/* smallest-prime-factor sieve; factors anything below its bound in O(log) */
class factor_sieve {
  public:
    explicit factor_sieve(i64 bound);

    i64 bound() const { return i64(spf_.size()); }

    /* (prime, exponent) pairs of |n|, 0 < |n| < bound */
    std::vector<std::pair<i64, int>> factor(i64 n) const;

    bool is_prime(i64 n) const
    {
        return n >= 2 && spf_[size_t(n)] == u32(n);
    }

    bool is_squarefree(i64 n) const;

    /* Moebius mu(n), n >= 1 */
    int moebius(i64 n) const;

    /* largest f with f^2 | n (n != 0), i.e. |n| = squarefree * f^2 */
    i64 square_part(i64 n) const;

  private:
    std::vector<u32> spf_;
};

/* trial-division fallback for one-off values */
std::vector<std::pair<i64, int>> factor_trial(i64 n);

std::vector<i64> primes_up_to(i64 bound);

/* Kronecker symbol (a|n) */
int kronecker(i64 a, i64 n);

} // namespace cubiclass

#endif
