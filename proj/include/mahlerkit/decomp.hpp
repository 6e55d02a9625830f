#pragma once

#include "mahlerkit/lrs.hpp"

namespace mahlerkit {

// Canonical form of a multiplicative regular sequence:
//   f(p^i m) = g(i) * m^r * chi(m)   for p not dividing m,
// with g(0) = 1 and chi normalized to vanish on multiples of p.
struct MultiplicativeDecomposition {
    long p = 2;
    LRSSpec g;
    long r = 0;
    EventuallyPeriodic chi;

    Rational eval(long long n) const; // n >= 1

    bool operator==(const MultiplicativeDecomposition& o) const {
        return p == o.p && g == o.g && r == o.r && chi == o.chi;
    }
};

} // namespace mahlerkit
