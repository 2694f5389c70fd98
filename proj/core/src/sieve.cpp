#include "cubiclass/sieve.hpp"

namespace cubiclass {

factor_sieve::factor_sieve(i64 bound)
{
    if (bound < 2)
        bound = 2;
    spf_.assign(size_t(bound), 0);
    for (i64 i = 2; i < bound; ++i) {
        if (spf_[size_t(i)] == 0) {
            for (i64 j = i; j < bound; j += i)
                if (spf_[size_t(j)] == 0)
                    spf_[size_t(j)] = u32(i);
        }
    }
}

std::vector<std::pair<i64, int>> factor_sieve::factor(i64 n) const
{
    if (n < 0)
        n = -n;
    if (n == 0 || n >= bound())
        throw domain_error("factor_sieve: value out of range");
    std::vector<std::pair<i64, int>> out;
    while (n > 1) {
        i64 p = spf_[size_t(n)];
        int e = 0;
        while (n % p == 0) {
            n /= p;
            ++e;
        }
        out.emplace_back(p, e);
    }
    return out;
}

bool factor_sieve::is_squarefree(i64 n) const
{
    for (auto [p, e] : factor(n))
        if (e >= 2)
            return false;
    return true;
}

int factor_sieve::moebius(i64 n) const
{
    int sign = 1;
    for (auto [p, e] : factor(n)) {
        if (e >= 2)
            return 0;
        sign = -sign;
    }
    return sign;
}

i64 factor_sieve::square_part(i64 n) const
{
    i64 f = 1;
    for (auto [p, e] : factor(n))
        for (int i = 0; i < e / 2; ++i)
            f *= p;
    return f;
}

std::vector<std::pair<i64, int>> factor_trial(i64 n)
{
    if (n < 0)
        n = -n;
    if (n == 0)
        throw domain_error("factor_trial: zero");
    std::vector<std::pair<i64, int>> out;
    for (i64 p = 2; p * p <= n; p += (p == 2 ? 1 : 2)) {
        if (n % p == 0) {
            int e = 0;
            while (n % p == 0) {
                n /= p;
                ++e;
            }
            out.emplace_back(p, e);
        }
    }
    if (n > 1)
        out.emplace_back(n, 1);
    return out;
}

std::vector<i64> primes_up_to(i64 bound)
{
    std::vector<bool> comp(size_t(bound + 1), false);
    std::vector<i64> out;
    for (i64 i = 2; i <= bound; ++i) {
        if (!comp[size_t(i)]) {
            out.push_back(i);
            for (i64 j = i * i; j <= bound; j += i)
                comp[size_t(j)] = true;
        }
    }
    return out;
}

int kronecker(i64 a, i64 n)
{
    if (n == 0)
        return (a == 1 || a == -1) ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0)
            sign = -sign;
    }
    /* pull out factors of 2 from n */
    int v2 = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++v2;
    }
    if (v2) {
        if (a % 2 == 0)
            return 0;
        i64 am8 = ((a % 8) + 8) % 8;
        if ((v2 & 1) && (am8 == 3 || am8 == 5))
            sign = -sign;
    }
    a = ((a % n) + n) % n;
    /* now the Jacobi symbol (a|n) with n odd positive */
    while (a != 0) {
        while (a % 2 == 0) {
            a /= 2;
            i64 nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5)
                sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3)
            sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

} // namespace cubiclass
