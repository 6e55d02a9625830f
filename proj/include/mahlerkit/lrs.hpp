#pragma once

#include <optional>
#include <vector>

#include "mahlerkit/rational.hpp"

namespace mahlerkit {

// Linear recurrence f(n) = sum_i rec[i-1] * f(n-i) for n >= order, with
// initial values f(0..order-1). Order 0 is the zero sequence.
struct LRSSpec {
    std::vector<Rational> rec;
    std::vector<Rational> init;

    long order() const { return static_cast<long>(rec.size()); }
    std::vector<Rational> values(long count) const;
    Rational at(long n) const;

    bool operator==(const LRSSpec& o) const { return rec == o.rec && init == o.init; }
};

struct BerlekampMasseyResult {
    LRSSpec spec;
    // True when 2*order <= number of supplied values, which pins the minimal
    // recurrence uniquely.
    bool unique;
};

// Minimal-order recurrence consistent with all supplied values, exact
// arithmetic throughout.
BerlekampMasseyResult berlekamp_massey(const std::vector<Rational>& values);

// Eventually periodic value stream: pre[0], pre[1], ..., then per cycles
// forever. For the multiplicative character chi the stream starts at n = 1,
// i.e. chi(n) = at(n - 1).
struct EventuallyPeriodic {
    std::vector<Rational> pre;
    std::vector<Rational> per;

    Rational at(long long i) const; // 0-based stream index
    Rational chi(long long n) const { return at(n - 1); } // n >= 1
    std::vector<Rational> stream(long count) const;
    bool eventually_zero() const;

    bool operator==(const EventuallyPeriodic& o) const { return pre == o.pre && per == o.per; }
};

// Minimal (preperiod, period) consistent with all values, requiring at least
// two full period repetitions of evidence; nullopt otherwise. Throws on
// empty input. A nonnegative max_pre additionally caps the preperiod, which
// callers use to demand that the periodic regime explain a real share of the
// data rather than a two-value tail.
std::optional<EventuallyPeriodic> detect_eventually_periodic(const std::vector<Rational>& values,
                                                             long max_pre = -1);

struct PowerPeriodicDecomposition {
    long r = 0;
    EventuallyPeriodic chi;
};

// Smallest r <= r_max such that n -> h(n)/n^r is detected eventually
// periodic; values are h(1..N).
std::optional<PowerPeriodicDecomposition>
power_periodic_decompose(const std::vector<Rational>& values_from_1, long r_max = 8);

enum class ChiClass { Periodic, EventuallyZero, NotMultiplicative };

struct ChiClassification {
    ChiClass verdict;
    long witness_m = 0, witness_n = 0; // coprime counterexample when NotMultiplicative
};

// Verifies multiplicativity of chi on coprime pairs with m*n <= range, then
// classifies. A multiplicative eventually periodic chi is either periodic or
// eventually zero; disagreement throws std::logic_error because it falsifies
// the claimed input properties.
ChiClassification classify_mult_ev_periodic(const EventuallyPeriodic& chi, long range);

} // namespace mahlerkit
