#pragma once

#include <vector>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

#include "mahlerkit/rational.hpp"

namespace mahlerkit {

// Dense univariate polynomial over an exact field K.
// Coefficient index = exponent; no trailing zeros; zero polynomial is empty,
// with degree() == -1.
template <class K>
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<K> coeffs) : c_(std::move(coeffs)) { trim(); }

    static UniPoly zero() { return UniPoly(); }
    static UniPoly one() { return constant(K(1)); }
    static UniPoly constant(const K& a) {
        UniPoly p;
        if (!a.is_zero()) p.c_ = {a};
        return p;
    }
    static UniPoly x() { return monomial(1, K(1)); }
    static UniPoly monomial(long exp, const K& a) {
        UniPoly p;
        if (a.is_zero()) return p;
        p.c_.assign(static_cast<size_t>(exp) + 1, K(0));
        p.c_.back() = a;
        return p;
    }

    long degree() const { return static_cast<long>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_constant() const { return c_.size() <= 1; }

    const std::vector<K>& coeffs() const { return c_; }

    K coeff(long i) const {
        if (i < 0 || i >= static_cast<long>(c_.size())) return K(0);
        return c_[static_cast<size_t>(i)];
    }
    const K& leading() const {
        if (is_zero()) throw std::invalid_argument("UniPoly: leading of zero");
        return c_.back();
    }
    // Order of vanishing at 0; -1 for the zero polynomial.
    long low_order() const {
        for (size_t i = 0; i < c_.size(); ++i)
            if (!c_[i].is_zero()) return static_cast<long>(i);
        return -1;
    }
    K low_coeff() const {
        long a = low_order();
        return a < 0 ? K(0) : c_[static_cast<size_t>(a)];
    }

    UniPoly operator-() const {
        UniPoly r = *this;
        for (auto& a : r.c_) a = -a;
        return r;
    }
    UniPoly operator+(const UniPoly& o) const {
        UniPoly r;
        r.c_.resize(std::max(c_.size(), o.c_.size()), K(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i] = c_[i];
        for (size_t i = 0; i < o.c_.size(); ++i) r.c_[i] += o.c_[i];
        r.trim();
        return r;
    }
    UniPoly operator-(const UniPoly& o) const { return *this + (-o); }
    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        UniPoly r;
        r.c_.assign(c_.size() + o.c_.size() - 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) {
            if (c_[i].is_zero()) continue;
            for (size_t j = 0; j < o.c_.size(); ++j)
                r.c_[i + j] += c_[i] * o.c_[j];
        }
        r.trim();
        return r;
    }
    UniPoly operator*(const K& a) const {
        if (a.is_zero()) return UniPoly();
        UniPoly r = *this;
        for (auto& x : r.c_) x *= a;
        return r;
    }
    UniPoly operator/(const K& a) const {
        if (a.is_zero()) throw std::invalid_argument("UniPoly: division by zero scalar");
        UniPoly r = *this;
        for (auto& x : r.c_) x /= a;
        return r;
    }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    K eval(const K& v) const {
        K acc(0);
        for (size_t i = c_.size(); i-- > 0;) acc = acc * v + c_[i];
        return acc;
    }

    // P(x^m); m == 0 collapses to the constant P(1).
    UniPoly compose_power(long m) const {
        if (m < 0) throw std::invalid_argument("UniPoly: negative power substitution");
        if (m == 0) return constant(eval(K(1)));
        if (is_zero() || m == 1) return *this;
        UniPoly r;
        r.c_.assign(static_cast<size_t>(degree()) * m + 1, K(0));
        for (size_t i = 0; i < c_.size(); ++i) r.c_[i * m] = c_[i];
        return r;
    }

    UniPoly monic() const {
        if (is_zero()) return *this;
        return *this / leading();
    }

private:
    void trim() {
        while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
    }
    std::vector<K> c_;
};

// Exact Euclidean division; throws if b == 0.
template <class K>
std::pair<UniPoly<K>, UniPoly<K>> poly_divmod(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (b.is_zero()) throw std::invalid_argument("poly_divmod: division by zero polynomial");
    UniPoly<K> q, r = a;
    const K lc = b.leading();
    const long db = b.degree();
    while (!r.is_zero() && r.degree() >= db) {
        K t = r.leading() / lc;
        long e = r.degree() - db;
        UniPoly<K> m = UniPoly<K>::monomial(e, t);
        q = q + m;
        r = r - m * b;
    }
    return {q, r};
}

template <class K>
UniPoly<K> poly_mul(const UniPoly<K>& a, const UniPoly<K>& b) { return a * b; }

template <class K>
bool poly_divides(const UniPoly<K>& d, const UniPoly<K>& a) {
    if (d.is_zero()) return a.is_zero();
    return poly_divmod(a, d).second.is_zero();
}

// Monic gcd; gcd(P, 0) = monic(P).
template <class K>
UniPoly<K> poly_gcd(UniPoly<K> a, UniPoly<K> b) {
    while (!b.is_zero()) {
        UniPoly<K> r = poly_divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

// Over the rationals, route through the primitive PRS to keep coefficients
// small on long remainder chains.
template <>
UniPoly<Rational> poly_gcd<Rational>(UniPoly<Rational> a, UniPoly<Rational> b);

template <class K>
UniPoly<K> poly_lcm(const UniPoly<K>& a, const UniPoly<K>& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly<K>();
    UniPoly<K> g = poly_gcd(a, b);
    return poly_divmod(a * b, g).first.monic();
}

// Extended gcd: returns (g, u, v) with u*a + v*b = g, g monic.
template <class K>
std::tuple<UniPoly<K>, UniPoly<K>, UniPoly<K>>
poly_xgcd(const UniPoly<K>& a, const UniPoly<K>& b) {
    UniPoly<K> r0 = a, r1 = b;
    UniPoly<K> u0 = UniPoly<K>::one(), u1;
    UniPoly<K> v0, v1 = UniPoly<K>::one();
    while (!r1.is_zero()) {
        auto [q, r2] = poly_divmod(r0, r1);
        UniPoly<K> u2 = u0 - q * u1, v2 = v0 - q * v1;
        r0 = std::move(r1); r1 = std::move(r2);
        u0 = std::move(u1); u1 = std::move(u2);
        v0 = std::move(v1); v1 = std::move(v2);
    }
    if (r0.is_zero()) return {r0, u0, v0};
    K lc = r0.leading();
    return {r0 / lc, u0 / lc, v0 / lc};
}

// Coefficient of x^n multiplied by omega^{j*n}. omega must be invertible
// when j < 0.
template <class K>
UniPoly<K> twist_poly(const UniPoly<K>& p, const K& omega, long j) {
    if (p.is_zero()) return p;
    K step = omega.pow(j);
    K w(1);
    std::vector<K> out;
    out.reserve(static_cast<size_t>(p.degree()) + 1);
    for (long n = 0; n <= p.degree(); ++n) {
        out.push_back(p.coeff(n) * w);
        w *= step;
    }
    return UniPoly<K>(std::move(out));
}

// Cartier section of a polynomial: coefficient at n of the result is the
// coefficient of P at l*n + r.
template <class K>
UniPoly<K> poly_cartier(const UniPoly<K>& p, long l, long r) {
    if (l < 1 || r < 0 || r >= l) throw std::invalid_argument("poly_cartier: residue out of range");
    std::vector<K> out;
    for (long n = 0; l * n + r <= p.degree(); ++n) out.push_back(p.coeff(l * n + r));
    return UniPoly<K>(std::move(out));
}

// --- Rational-coefficient helpers ---

// Writes P = content * primitive with primitive having coprime integer
// coefficients and positive leading sign; content is rational.
std::pair<Rational, UniPoly<Rational>> poly_integer_primitive(const UniPoly<Rational>& p);

// Primitive-PRS gcd over the rationals: same contract as poly_gcd but avoids
// coefficient blowup on long division chains.
UniPoly<Rational> poly_gcd_rational(UniPoly<Rational> a, UniPoly<Rational> b);

std::string poly_to_string(const UniPoly<Rational>& p, const std::string& var = "x");

} // namespace mahlerkit
