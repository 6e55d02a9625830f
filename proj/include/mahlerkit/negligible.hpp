#pragma once

#include <vector>
#include <utility>

#include "mahlerkit/rational.hpp"
#include "mahlerkit/unipoly.hpp"

namespace mahlerkit {

// Split of P as x^a * prod Phi_d^{mult} * residual * unit, where the residual
// has no root at 0 and no cyclotomic factor. P is k-negligible exactly when
// the residual is a nonzero constant and every listed order d has
// gcd(d, k) > 1: a primitive d-th root zeta satisfies zeta^{k^i} != zeta for
// all i >= 1 iff gcd(d, k) > 1.
struct NegligibilityCertificate {
    long x_power = 0;
    std::vector<std::pair<long, long>> cyclotomic_factors; // (order, multiplicity)
    UniPoly<Rational> residual;
    Rational unit;
    bool negligible = false;

    UniPoly<Rational> reassemble() const;
};

// Throws std::invalid_argument on the zero polynomial.
NegligibilityCertificate factor_negligible(const UniPoly<Rational>& p, long k);

bool is_negligible(const UniPoly<Rational>& p, long k);

} // namespace mahlerkit
