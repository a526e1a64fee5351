#pragma once

#include <boost/multiprecision/cpp_int.hpp>

namespace braidlie {

// Exact signed integers everywhere; structure constants and HNF pivots grow
// with degree and silent overflow is unacceptable.
using Int = boost::multiprecision::cpp_int;

// Floor quotient: for b > 0 the remainder a - floordiv(a,b)*b lies in [0, b).
inline Int floordiv(const Int& a, const Int& b) {
    Int q = a / b;
    Int r = a - q * b;
    if (r != 0 && ((r < 0) != (b < 0)))
        --q;
    return q;
}

inline Int ipow(Int base, int exp) {
    Int r = 1;
    while (exp-- > 0)
        r *= base;
    return r;
}

}  // namespace braidlie
