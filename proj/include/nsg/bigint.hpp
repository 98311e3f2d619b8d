#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <vector>

namespace nsg {

// All coordinate and matrix arithmetic is exact.
using Int = boost::multiprecision::cpp_int;

inline Int int_gcd(Int a, Int b) {
    using boost::multiprecision::abs;
    a = abs(a);
    b = abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Divides a nonzero integer vector by the gcd of its entries.
inline void make_primitive(std::vector<Int>& v) {
    Int g = 0;
    for (const Int& x : v) {
        g = int_gcd(g, x);
        if (g == 1) return;
    }
    if (g == 0 || g == 1) return;
    for (Int& x : v) x /= g;
}

// floor(sqrt(x)) for x >= 0.
inline Int isqrt(const Int& x) {
    if (x < 0) throw std::invalid_argument("isqrt of negative value");
    if (x == 0) return 0;
    Int r = boost::multiprecision::sqrt(x);
    // boost's integer sqrt already floors; guard against rounding surprises.
    while (r * r > x) --r;
    while ((r + 1) * (r + 1) <= x) ++r;
    return r;
}

inline Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
    Int s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace nsg
