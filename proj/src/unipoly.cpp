#include "mahlerkit/unipoly.hpp"

#include <sstream>

namespace mahlerkit {

std::pair<Rational, UniPoly<Rational>> poly_integer_primitive(const UniPoly<Rational>& p) {
    if (p.is_zero()) return {Rational(0), p};
    mpz_class den_lcm = 1;
    for (const auto& c : p.coeffs()) {
        mpz_class d = c.den();
        mpz_class g;
        mpz_gcd(g.get_mpz_t(), den_lcm.get_mpz_t(), d.get_mpz_t());
        den_lcm = den_lcm / g * d;
    }
    mpz_class num_gcd = 0;
    std::vector<mpz_class> ints;
    ints.reserve(p.coeffs().size());
    for (const auto& c : p.coeffs()) {
        mpz_class v = c.num() * (den_lcm / c.den());
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), v.get_mpz_t());
        ints.push_back(v);
    }
    if (mpz_sgn(ints.back().get_mpz_t()) < 0) num_gcd = -num_gcd;
    std::vector<Rational> out;
    out.reserve(ints.size());
    for (const auto& v : ints) out.emplace_back(mpz_class(v / num_gcd));
    return {Rational(num_gcd, den_lcm), UniPoly<Rational>(std::move(out))};
}

UniPoly<Rational> poly_gcd_rational(UniPoly<Rational> a, UniPoly<Rational> b) {
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    a = poly_integer_primitive(a).second;
    b = poly_integer_primitive(b).second;
    while (!b.is_zero()) {
        UniPoly<Rational> r = poly_divmod(a, b).second;
        if (!r.is_zero()) r = poly_integer_primitive(r).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

template <>
UniPoly<Rational> poly_gcd<Rational>(UniPoly<Rational> a, UniPoly<Rational> b) {
    return poly_gcd_rational(std::move(a), std::move(b));
}

std::string poly_to_string(const UniPoly<Rational>& p, const std::string& var) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (long n = 0; n <= p.degree(); ++n) {
        Rational c = p.coeff(n);
        if (c.is_zero()) continue;
        if (first) {
            if (c.sgn() < 0) os << "-";
        } else {
            os << (c.sgn() < 0 ? " - " : " + ");
        }
        Rational a = c.abs();
        if (n == 0) {
            os << a.str();
        } else {
            if (!a.is_one()) os << a.str() << "*";
            os << var;
            if (n > 1) os << "^" << n;
        }
        first = false;
    }
    return os.str();
}

} // namespace mahlerkit
