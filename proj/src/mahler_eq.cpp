#include "mahlerkit/mahler_eq.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace mahlerkit {

UniPoly<Rational> normalize_lowest_one(const UniPoly<Rational>& p) {
    if (p.is_zero()) return p;
    return p / p.low_coeff();
}

DenominatorCertificate denominator_upper_bound(const std::vector<MahlerEquation<Rational>>& eqs,
                                               bool candidate_exact) {
    if (eqs.empty())
        throw std::invalid_argument("denominator_upper_bound: no equations supplied");
    const long k = eqs.front().k;
    DenominatorCertificate cert;
    UniPoly<Rational> g;
    for (const auto& eq : eqs) {
        if (eq.k != k)
            throw std::invalid_argument("denominator_upper_bound: mismatched bases");
        UniPoly<Rational> p0 = eq.coeff(0);
        if (p0.is_zero())
            throw std::invalid_argument("denominator_upper_bound: equation with P_0 = 0");
        g = poly_gcd(g, p0);
        cert.provenance.push_back("gcd with P_0 of order-" + std::to_string(eq.order()) +
                                  " equation, deg P_0 = " + std::to_string(p0.degree()));
    }
    cert.candidate = normalize_lowest_one(g);
    if (is_negligible(cert.candidate, k))
        cert.verdict = DenominatorVerdict::RegularCertified;
    else
        cert.verdict = candidate_exact ? DenominatorVerdict::NotRegularGivenCandidateExact
                                       : DenominatorVerdict::Unknown;
    return cert;
}

PreceqResult preceq(const UniPoly<Rational>& p, const UniPoly<Rational>& q, long k,
                    long s_max) {
    if (p.is_zero() || q.is_zero())
        throw std::invalid_argument("preceq: zero input");
    if (k < 2) throw std::invalid_argument("preceq: k must be >= 2");
    if (s_max < 0)
        s_max = 1 + static_cast<long>(std::ceil(std::log1p(static_cast<double>(p.degree())) /
                                                std::log(static_cast<double>(k))));

    // Split P into its negligible part (x-power and cyclotomic factors of bad
    // order go to the witness A) and the rest W. W shares no factor with any
    // negligible polynomial, so P | A * prod iff W | prod.
    NegligibilityCertificate cp = factor_negligible(p, k);
    UniPoly<Rational> witness = UniPoly<Rational>::monomial(cp.x_power, Rational(1));
    UniPoly<Rational> rest = cp.residual;
    for (auto [d, mult] : cp.cyclotomic_factors) {
        const UniPoly<Rational>& phi_d = cyclotomic_poly(d);
        for (long i = 0; i < mult; ++i) {
            if (std::gcd(d, k) > 1)
                witness = witness * phi_d;
            else
                rest = rest * phi_d;
        }
    }

    UniPoly<Rational> prod = UniPoly<Rational>::one();
    long long pw = 1;
    for (long s = 0; s <= s_max; ++s) {
        prod = prod * q.compose_power(static_cast<long>(pw));
        pw *= k;
        if (poly_divides(rest, prod)) {
            PreceqResult res;
            res.status = PreceqStatus::HoldsWithWitness;
            res.witness = normalize_lowest_one(witness);
            res.s = s;
            return res;
        }
    }
    PreceqResult res;
    res.status = PreceqStatus::FailsWithinBound;
    res.s = s_max;
    return res;
}

} // namespace mahlerkit
