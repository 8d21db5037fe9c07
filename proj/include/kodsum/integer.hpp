#pragma once

#include <cstdint>
#include <cstdlib>
#include <gmpxx.h>

#include "kodsum/errors.hpp"

namespace kodsum {

using Int = std::int64_t;
using BigInt = mpz_class;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r))
        throw DomainError("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r))
        throw DomainError("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r))
        throw DomainError("integer overflow in multiplication");
    return r;
}

/// Non-negative residue of a modulo m (m > 0).
inline Int mod_floor(Int a, Int m) {
    Int r = a % m;
    return r < 0 ? r + m : r;
}

inline Int floor_div(Int a, Int m) { return (a - mod_floor(a, m)) / m; }

inline Int gcd(Int a, Int b) {
    a = std::llabs(a);
    b = std::llabs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

struct ExtGcd {
    Int g; // >= 0
    Int x;
    Int y; // a*x + b*y == g
};

inline ExtGcd ext_gcd(Int a, Int b) {
    Int old_r = a, r = b;
    Int old_s = 1, s = 0;
    Int old_t = 0, t = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int tmp = old_r - q * r;
        old_r = r;
        r = tmp;
        tmp = old_s - q * s;
        old_s = s;
        s = tmp;
        tmp = old_t - q * t;
        old_t = t;
        t = tmp;
    }
    if (old_r < 0)
        return {-old_r, -old_s, -old_t};
    return {old_r, old_s, old_t};
}

inline Int to_int(const BigInt& v) {
    if (!v.fits_slong_p())
        throw DomainError("value " + v.get_str() + " does not fit in 64 bits");
    return v.get_si();
}

} // namespace kodsum
