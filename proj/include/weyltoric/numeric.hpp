#pragma once

// Shared exact-arithmetic aliases and small integer helpers.
// Everything downstream works over arbitrary-precision integers; rationals
// appear only in the character-theory layer.

#include <boost/multiprecision/cpp_int.hpp>

#include <limits>
#include <stdexcept>
#include <string>

namespace weyltoric {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

using boost::multiprecision::abs;
using boost::multiprecision::gcd;

// Floor division, well-defined for any sign of a; b must be nonzero.
inline Int floor_div(const Int& a, const Int& b) {
    Int q = a / b;  // truncated
    if (q * b != a && ((a < 0) != (b < 0))) --q;
    return q;
}

// g = u*a + v*b with g = gcd(a,b) >= 0.
inline Int ext_gcd(const Int& a, const Int& b, Int& u, Int& v) {
    Int old_r = a, r = b;
    Int old_u = 1, cur_u = 0;
    Int old_v = 0, cur_v = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t;
        t = old_r - q * r; old_r = r; r = t;
        t = old_u - q * cur_u; old_u = cur_u; cur_u = t;
        t = old_v - q * cur_v; old_v = cur_v; cur_v = t;
    }
    if (old_r < 0) { old_r = -old_r; old_u = -old_u; old_v = -old_v; }
    u = old_u;
    v = old_v;
    return old_r;
}

inline Int factorial(long n) {
    if (n < 0) throw std::invalid_argument("factorial: negative argument");
    Int f = 1;
    for (long i = 2; i <= n; ++i) f *= i;
    return f;
}

// C(n, k); zero outside the triangle.
inline Int binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    if (k > n - k) k = n - k;
    Int r = 1;
    for (long i = 1; i <= k; ++i) {
        r *= (n - k + i);
        r /= i;  // exact at every step
    }
    return r;
}

inline long long to_int64(const Int& v) {
    if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
        throw std::logic_error("to_int64: value out of range: " + v.str());
    return static_cast<long long>(v);
}

}  // namespace weyltoric
