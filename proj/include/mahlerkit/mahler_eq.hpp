#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mahlerkit/cyclotomic.hpp"
#include "mahlerkit/negligible.hpp"
#include "mahlerkit/series.hpp"
#include "mahlerkit/unipoly.hpp"

namespace mahlerkit {

// A k-Mahler equation in the summed convention
//   sum_{i=0}^{n} coeffs[i](x) * F(x^{k^i}) = inhom(x).
// The textbook form P_0 F = sum_{j>=1} P_j F(x^{k^j}) corresponds to
// coeffs = [P_0, -P_1, ..., -P_n].
template <class K>
struct MahlerEquation {
    long k = 2;
    std::vector<UniPoly<K>> coeffs;
    UniPoly<K> inhom;

    long order() const { return static_cast<long>(coeffs.size()) - 1; }
    bool homogeneous() const { return inhom.is_zero(); }
    UniPoly<K> coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(coeffs.size())) return UniPoly<K>();
        return coeffs[static_cast<size_t>(i)];
    }
    long min_nonzero_index() const {
        for (size_t i = 0; i < coeffs.size(); ++i)
            if (!coeffs[i].is_zero()) return static_cast<long>(i);
        return -1;
    }
};

template <class K>
struct VerifyResult {
    bool ok = false;
    long verified_order = -1; // largest N' with the defect zero through x^{N'}
    long fail_exponent = -1;  // when !ok
    K fail_value = K(0);
};

// Computes sum coeffs[i] * F(x^{k^i}) - inhom as a truncated series and
// checks it vanishes through the provable order. Throws when the truncation
// cannot certify even order 0.
template <class K>
VerifyResult<K> verify_equation(const MahlerEquation<K>& eq, const TruncSeries<K>& f) {
    long i_min = eq.min_nonzero_index();
    if (i_min < 0) {
        // Degenerate: the equation reads 0 = inhom, exactly.
        if (eq.inhom.is_zero()) return {true, f.order(), -1, K(0)};
        return {false, eq.inhom.low_order() - 1, eq.inhom.low_order(),
                -eq.inhom.low_coeff()};
    }
    if (f.order() < 0)
        throw std::invalid_argument("verify_equation: truncation too short");
    long long pw = 1;
    for (long t = 0; t < i_min; ++t) pw *= eq.k;
    const long target = static_cast<long>(f.order() * pw);
    TruncSeries<K> defect = TruncSeries<K>::zero(target);
    long long pj = 1;
    for (long i = 0; i <= eq.order(); ++i, pj *= eq.k) {
        if (eq.coeff(i).is_zero()) continue;
        TruncSeries<K> term = mahler_subst_to(f, static_cast<long>(pj), target);
        defect = defect + series_mul_poly(eq.coeff(i), term);
    }
    defect = defect - TruncSeries<K>::from_poly(eq.inhom, target);
    for (long n = 0; n <= defect.order(); ++n) {
        if (!defect.coeff(n).is_zero())
            return {false, n - 1, n, defect.coeff(n)};
    }
    return {true, defect.order(), -1, K(0)};
}

// Order-1 equation for F = P/Q with Q(0) != 0:
//   P(x^k) Q(x) F(x) - P(x) Q(x^k) F(x^k) = 0.
template <class K>
MahlerEquation<K> rational_equation(const UniPoly<K>& p, const UniPoly<K>& q, long k) {
    if (k < 2) throw std::invalid_argument("rational_equation: k must be >= 2");
    if (q.coeff(0).is_zero()) throw std::invalid_argument("rational_equation: Q(0) = 0");
    MahlerEquation<K> eq;
    eq.k = k;
    eq.coeffs = {p.compose_power(k) * q, -(p * q.compose_power(k))};
    return eq;
}

// Order-1 equation for F = P/Q at base k^n, with both coefficients divided by
// their gcd. Any alpha with alpha^{k^n} = alpha is fully cancelled: the
// substitution x -> x^{k^n} preserves its multiplicity, so the multiplicities
// in both coefficients agree.
template <class K>
MahlerEquation<K> reduce_rational_equation(const UniPoly<K>& p, const UniPoly<K>& q,
                                           long k, long n) {
    if (n < 1) throw std::invalid_argument("reduce_rational_equation: n must be >= 1");
    if (q.coeff(0).is_zero()) throw std::invalid_argument("reduce_rational_equation: Q(0) = 0");
    if (poly_gcd(p, q).degree() > 0)
        throw std::invalid_argument("reduce_rational_equation: P, Q must be coprime");
    long long kn = 1;
    for (long t = 0; t < n; ++t) kn *= k;
    MahlerEquation<K> eq = rational_equation(p, q, static_cast<long>(kn));
    UniPoly<K> g = poly_gcd(eq.coeffs[0], eq.coeffs[1]);
    if (g.degree() > 0) {
        eq.coeffs[0] = poly_divmod(eq.coeffs[0], g).first;
        eq.coeffs[1] = poly_divmod(eq.coeffs[1], g).first;
    }
    // Scale so the lowest nonzero coefficient of P_0 is 1, matching the
    // Mahler-denominator normalization.
    K unit = eq.coeffs[0].low_coeff();
    eq.coeffs[0] = eq.coeffs[0] / unit;
    eq.coeffs[1] = eq.coeffs[1] / unit;
    return eq;
}

template <class K>
struct SubstitutionResult {
    MahlerEquation<K> eq;
    std::vector<long> residues; // Cartier residues used, descent steps first
};

// Shared Cartier-descent procedure: brings the minimal nonzero coefficient
// index to 0 via Delta_s^{(k)} steps, then applies one Delta_r^{(l)}.
// Produces Q_0 != 0 and an equation valid for the inner series (see
// substitute_equation / clear_fractional for the two readings).
template <class K>
SubstitutionResult<K> cartier_descent(MahlerEquation<K> eq, long l) {
    if (l < 1) throw std::invalid_argument("cartier_descent: l must be >= 1");
    std::vector<long> residues;
    long i0 = eq.min_nonzero_index();
    if (i0 < 0) throw std::invalid_argument("cartier_descent: all coefficients zero");
    // Descent: while the x^0-index coefficient vanishes, one Delta_s^{(k)}
    // drops every term index by one. P_i(x) F(x^{k^i}) = P_i(x) G(x^k) with
    // G = F(x^{k^{i-1}}), and Delta_s(P(x) G(x^k)) = Delta_s(P)(x) G(x).
    while (eq.min_nonzero_index() > 0) {
        long i_min = eq.min_nonzero_index();
        long s = -1;
        for (long cand = 0; cand < eq.k; ++cand) {
            if (!poly_cartier(eq.coeffs[static_cast<size_t>(i_min)], eq.k, cand).is_zero()) {
                s = cand;
                break;
            }
        }
        if (s < 0) throw std::logic_error("cartier_descent: nonzero polynomial with all sections zero");
        residues.push_back(s);
        std::vector<UniPoly<K>> next(eq.coeffs.size() - 1);
        for (size_t i = 1; i < eq.coeffs.size(); ++i)
            next[i - 1] = poly_cartier(eq.coeffs[i], eq.k, s);
        eq.coeffs = std::move(next);
        eq.inhom = poly_cartier(eq.inhom, eq.k, s);
    }
    // One Delta_r^{(l)} with Delta_r(Q_0) != 0.
    long r = -1;
    for (long cand = 0; cand < l; ++cand) {
        if (!poly_cartier(eq.coeffs[0], l, cand).is_zero()) {
            r = cand;
            break;
        }
    }
    if (r < 0) throw std::logic_error("cartier_descent: nonzero polynomial with all sections zero");
    residues.push_back(r);
    for (auto& c : eq.coeffs) c = poly_cartier(c, l, r);
    eq.inhom = poly_cartier(eq.inhom, l, r);
    SubstitutionResult<K> out;
    out.eq = std::move(eq);
    out.residues = std::move(residues);
    return out;
}

// For F known to lie in K[[x^l]]: emits an equation for F whose coefficients
// are polynomials in x^l (the caller's membership assertion is not checked
// here; verification against a witness series is the safety net).
template <class K>
SubstitutionResult<K> substitute_equation(const MahlerEquation<K>& eq, long l) {
    SubstitutionResult<K> res = cartier_descent(eq, l);
    for (auto& c : res.eq.coeffs) c = c.compose_power(l);
    res.eq.inhom = res.eq.inhom.compose_power(l);
    return res;
}

// Input coefficients are read as polynomials in t = x^{1/l}; returns a
// polynomial-coefficient equation for the same F. Writing y = x^{1/l} and
// G(y) = F(y^l), the input is sum P_i(y) G(y^{k^i}) = A(y), and the descent
// output equation for the inner series is exactly an equation for F.
template <class K>
SubstitutionResult<K> clear_fractional(const MahlerEquation<K>& eq_in_frac_var, long l) {
    return cartier_descent(eq_in_frac_var, l);
}

// Coefficients twisted coordinatewise by omega with omega^k = omega, giving
// an equation for F(omega x).
template <class K>
MahlerEquation<K> twist_equation(const MahlerEquation<K>& eq, const K& omega) {
    if (omega.pow(eq.k) != omega)
        throw std::invalid_argument("twist_equation: omega^k != omega");
    MahlerEquation<K> out;
    out.k = eq.k;
    out.coeffs.reserve(eq.coeffs.size());
    for (const auto& c : eq.coeffs) out.coeffs.push_back(twist_poly(c, omega, 1));
    out.inhom = twist_poly(eq.inhom, omega, 1);
    return out;
}

inline MahlerEquation<Cyclo> promote_equation(const MahlerEquation<Rational>& eq) {
    MahlerEquation<Cyclo> out;
    out.k = eq.k;
    out.coeffs.reserve(eq.coeffs.size());
    for (const auto& c : eq.coeffs) out.coeffs.push_back(promote(c));
    out.inhom = promote(eq.inhom);
    return out;
}

// Normalize so the lowest nonzero coefficient is 1.
UniPoly<Rational> normalize_lowest_one(const UniPoly<Rational>& p);

enum class DenominatorVerdict { RegularCertified, NotRegularGivenCandidateExact, Unknown };

// Upper-bound certificate for the Mahler denominator: the true denominator
// divides P_0 in every verified equation, hence divides the gcd of the P_0's.
// Divisors of negligible polynomials are negligible, so a negligible
// candidate certifies regularity.
struct DenominatorCertificate {
    UniPoly<Rational> candidate; // lowest nonzero coefficient 1
    std::vector<std::string> provenance;
    DenominatorVerdict verdict = DenominatorVerdict::Unknown;
};

// Pre: all equations are for the same F, share k, and have been verified by
// the caller (record what you like in the provenance notes). When
// candidate_exact is asserted, a non-negligible candidate yields
// NotRegularGivenCandidateExact instead of Unknown.
DenominatorCertificate denominator_upper_bound(const std::vector<MahlerEquation<Rational>>& eqs,
                                               bool candidate_exact = false);

enum class PreceqStatus { HoldsWithWitness, FailsWithinBound, Unknown };

struct PreceqResult {
    PreceqStatus status = PreceqStatus::Unknown;
    UniPoly<Rational> witness; // negligible A with P | A * prod_{i<=s} Q(x^{k^i})
    long s = -1;
};

// Bounded check of the preorder P <= Q: searches s = 0..s_max for a
// negligible A with P | A * prod_{i=0}^{s} Q(x^{k^i}). The negligible part
// of P is absorbed into A; the rest must divide the product exactly. A
// negative s_max selects the default bound 1 + ceil(log_k(1 + deg P)).
PreceqResult preceq(const UniPoly<Rational>& p, const UniPoly<Rational>& q, long k,
                    long s_max = -1);

} // namespace mahlerkit
