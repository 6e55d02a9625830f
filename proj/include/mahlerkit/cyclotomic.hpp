#pragma once

#include <vector>

#include "mahlerkit/rational.hpp"
#include "mahlerkit/unipoly.hpp"

namespace mahlerkit {

long euler_phi(long n);
int moebius(long n);

// The d-th cyclotomic polynomial over Q, monic of degree phi(d). Memoized.
const UniPoly<Rational>& cyclotomic_poly(long d);

// All d >= 1 with phi(d) <= bound, ascending.
std::vector<long> orders_with_phi_at_most(long bound);

// Phi_d evaluated at an integer point, via the Moebius product
// prod_{e|d} (t^{d/e} - 1)^{mu(e)}. Cheap; used as a divisibility filter.
mpz_class cyclotomic_value_at(long d, long t);

// Element of Q(zeta_d): a residue modulo Phi_d, stored as phi(d) rational
// coordinates. Mixed conductors are aligned by embedding into the lcm.
class Cyclo {
public:
    Cyclo() : d_(1), c_{Rational(0)} {}
    explicit Cyclo(const Rational& r) : d_(1), c_{r} {}
    explicit Cyclo(long v) : d_(1), c_{Rational(v)} {}

    static Cyclo zeta(long d);
    static Cyclo from_poly(long d, const UniPoly<Rational>& a);

    long conductor() const { return d_; }
    const std::vector<Rational>& coords() const { return c_; }
    UniPoly<Rational> to_poly() const { return UniPoly<Rational>(c_); }

    bool is_zero() const;
    bool is_rational() const;
    Rational to_rational() const; // throws if not rational

    Cyclo operator-() const;
    Cyclo operator+(const Cyclo& o) const;
    Cyclo operator-(const Cyclo& o) const;
    Cyclo operator*(const Cyclo& o) const;
    Cyclo operator/(const Cyclo& o) const;
    Cyclo& operator+=(const Cyclo& o) { *this = *this + o; return *this; }
    Cyclo& operator-=(const Cyclo& o) { *this = *this - o; return *this; }
    Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
    Cyclo& operator/=(const Cyclo& o) { *this = *this / o; return *this; }

    bool operator==(const Cyclo& o) const;
    bool operator!=(const Cyclo& o) const { return !(*this == o); }

    Cyclo inverse() const;
    Cyclo pow(long e) const;

    // Image in Q(zeta_m); m must be a multiple of the conductor.
    Cyclo embed(long m) const;

private:
    Cyclo(long d, std::vector<Rational> c) : d_(d), c_(std::move(c)) {}
    static void align(Cyclo& a, Cyclo& b);
    long d_;
    std::vector<Rational> c_;
};

inline UniPoly<Cyclo> promote(const UniPoly<Rational>& p) {
    std::vector<Cyclo> out;
    out.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) out.emplace_back(c);
    return UniPoly<Cyclo>(std::move(out));
}

inline UniPoly<Cyclo> twist_poly(const UniPoly<Rational>& p, const Cyclo& omega, long j) {
    return twist_poly(promote(p), omega, j);
}

} // namespace mahlerkit
