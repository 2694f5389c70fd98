#ifndef CUBICLASS_ARITH_HPP
#define CUBICLASS_ARITH_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace cubiclass {

using i64 = std::int64_t;
using u32 = std::uint32_t;
using u64 = std::uint64_t;
using i128 = __int128;

struct overflow_error : std::runtime_error {
    overflow_error() : std::runtime_error("integer overflow") {}
    explicit overflow_error(const char* what) : std::runtime_error(what) {}
};

struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

inline i64 checked_add(i64 x, i64 y)
{
    i64 r;
    if (__builtin_add_overflow(x, y, &r))
        throw overflow_error();
    return r;
}

inline i64 checked_sub(i64 x, i64 y)
{
    i64 r;
    if (__builtin_sub_overflow(x, y, &r))
        throw overflow_error();
    return r;
}

inline i64 checked_mul(i64 x, i64 y)
{
    i64 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw overflow_error();
    return r;
}

inline i64 narrow(i128 x)
{
    if (x > i128(INT64_MAX) || x < i128(INT64_MIN))
        throw overflow_error();
    return static_cast<i64>(x);
}

/* overflow-checked 128-bit arithmetic for the exact-invariant formulas */
inline i128 mul128(i128 x, i128 y)
{
    i128 r;
    if (__builtin_mul_overflow(x, y, &r))
        throw overflow_error();
    return r;
}

inline i128 add128(i128 x, i128 y)
{
    i128 r;
    if (__builtin_add_overflow(x, y, &r))
        throw overflow_error();
    return r;
}

inline i128 sub128(i128 x, i128 y)
{
    i128 r;
    if (__builtin_sub_overflow(x, y, &r))
        throw overflow_error();
    return r;
}

inline i64 gcd_i64(i64 a, i64 b)
{
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b) {
        i64 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/* g = gcd(a,b) >= 0 with u*a + v*b = g */
inline i64 xgcd_i64(i64 a, i64 b, i64& u, i64& v)
{
    i64 old_r = a, r = b;
    i64 old_u = 1, cu = 0;
    i64 old_v = 0, cv = 1;
    while (r != 0) {
        i64 q = old_r / r;
        i64 t = old_r - q * r; old_r = r; r = t;
        t = old_u - q * cu; old_u = cu; cu = t;
        t = old_v - q * cv; old_v = cv; cv = t;
    }
    if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
    u = old_u;
    v = old_v;
    return old_r;
}

/* floor(a/b), exact for all signs, b != 0 */
inline i64 floor_div(i64 a, i64 b)
{
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline i64 ceil_div(i64 a, i64 b)
{
    i64 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        ++q;
    return q;
}

inline i128 floor_div(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0)))
        --q;
    return q;
}

inline i128 ceil_div(i128 a, i128 b)
{
    i128 q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0)))
        ++q;
    return q;
}

/* floor(sqrt(n)) for n >= 0 */
u64 isqrt(u64 n);
i128 isqrt(i128 n);

inline bool is_square(i64 n)
{
    if (n < 0)
        return false;
    u64 r = isqrt(u64(n));
    return i64(r * r) == n;
}

/* floor(cbrt(n)) for n >= 0 */
i64 icbrt(u64 n);

std::string to_string(i128 x);

} // namespace cubiclass

#endif
