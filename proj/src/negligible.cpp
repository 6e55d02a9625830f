#include "mahlerkit/negligible.hpp"
#include "mahlerkit/cyclotomic.hpp"

#include <numeric>
#include <stdexcept>

namespace mahlerkit {

UniPoly<Rational> NegligibilityCertificate::reassemble() const {
    UniPoly<Rational> p = UniPoly<Rational>::monomial(x_power, unit);
    for (auto [d, mult] : cyclotomic_factors)
        for (long i = 0; i < mult; ++i) p = p * cyclotomic_poly(d);
    return p * residual;
}

NegligibilityCertificate factor_negligible(const UniPoly<Rational>& p, long k) {
    if (p.is_zero()) throw std::invalid_argument("factor_negligible: zero input");
    if (k < 2) throw std::invalid_argument("factor_negligible: k must be >= 2");

    NegligibilityCertificate cert;
    cert.x_power = p.low_order();
    UniPoly<Rational> rest = poly_divmod(p, UniPoly<Rational>::monomial(cert.x_power, Rational(1))).first;

    // Candidate cyclotomic divisors are probed by trial division, integers
    // first: if Phi_d | rest over Q then Phi_d(t) | rest_int(t) over Z for the
    // primitive integer form rest_int.
    bool all_orders_bad = true;
    while (rest.degree() > 0) {
        auto [content, rest_int] = poly_integer_primitive(rest);
        (void)content;
        mpz_class v2 = rest_int.eval(Rational(2)).num();
        mpz_class v3 = rest_int.eval(Rational(3)).num();
        bool found = false;
        for (long d : orders_with_phi_at_most(rest.degree())) {
            if (v2 != 0) {
                mpz_class f2 = cyclotomic_value_at(d, 2);
                if (f2 != 0 && !mpz_divisible_p(v2.get_mpz_t(), f2.get_mpz_t())) continue;
            }
            if (v3 != 0) {
                mpz_class f3 = cyclotomic_value_at(d, 3);
                if (f3 != 0 && !mpz_divisible_p(v3.get_mpz_t(), f3.get_mpz_t())) continue;
            }
            const UniPoly<Rational>& phi_d = cyclotomic_poly(d);
            long mult = 0;
            for (;;) {
                auto [q, r] = poly_divmod(rest, phi_d);
                if (!r.is_zero()) break;
                rest = std::move(q);
                ++mult;
            }
            if (mult > 0) {
                cert.cyclotomic_factors.emplace_back(d, mult);
                if (std::gcd(d, k) == 1) all_orders_bad = false;
                found = true;
                break; // re-derive the integer filters on the smaller residual
            }
        }
        if (!found) break;
    }

    cert.unit = rest.is_zero() ? Rational(1) : rest.leading();
    cert.residual = rest.monic();
    cert.negligible = cert.residual.is_constant() && !cert.residual.is_zero() && all_orders_bad;
    return cert;
}

bool is_negligible(const UniPoly<Rational>& p, long k) {
    return factor_negligible(p, k).negligible;
}

} // namespace mahlerkit
